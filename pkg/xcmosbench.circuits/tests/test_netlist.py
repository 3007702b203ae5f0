"""   Tests for the module "netlist.py"   """

import json
from fractions import Fraction
from pathlib import Path

import pytest

from xcmosbench.base.enums import (CircuitStyle,
                                   GateKind)
from xcmosbench.base.errors import (InvalidParameterError,
                                    LibraryParseError)
from xcmosbench.devices.gates import GateMetrics
from xcmosbench.circuits.netlist import (Netlist,
                                         clock_event_counts,
                                         clocked_dynamic_energy,
                                         default_netlist,
                                         load_netlist,
                                         simulate_clock_events)

###   Globals   ###

TESTS_DATA_PATH = Path(__file__).parent / 'data'
DELAYS = {
    GateKind.INV: 5e-12,
    GateKind.NAND2: 10e-12,
    GateKind.XOR2: 30e-12,
    GateKind.MAJ3: 40e-12,
    GateKind.DominoFA: 20e-12,
}


class KindGates(object):
    """ Provider with a different delay and energy per gate kind """

    def __call__(self, kind, hold_time=0.0):
        kind = GateKind(kind)
        return GateMetrics(kind, t_gate=DELAYS[kind], E_dyn=DELAYS[kind] * 1e-4,
                           P_leak=0.0, A_gate=1e-14, hold_time=hold_time)


###   Fixtures   ###

@pytest.fixture
def write_netlist(tmp_path):
    """ Writes a netlist dictionary to a file and returns its path """
    def _write(data):
        path = tmp_path / 'netlist.json'
        with open(path, 'w') as f:
            json.dump(data, f, indent=4)
        return path
    return _write


###   Tests   ###

def test_shipped_netlists():
    nand = default_netlist(CircuitStyle.StaticCMOSLike)
    assert nand.bits == 32
    assert nand.gates == [(GateKind.NAND2, 9)]
    assert nand.gate_count() == 9
    # the held sum gate is the last NAND2 of the full adder
    assert nand.hold_kind == GateKind.NAND2
    # (2*32 + 4) NAND2 levels
    assert nand.critical_delay(KindGates()) == pytest.approx(68 * 10e-12)
    assert nand.path_delay(KindGates(), 'bit') == pytest.approx(20e-12)

    majority = default_netlist('MajoritySpin')
    assert majority.gates == [(GateKind.MAJ3, 3), (GateKind.INV, 2)]
    assert majority.critical_delay(KindGates()) == pytest.approx(34 * 40e-12)

    domino = default_netlist(CircuitStyle.DominoNP)
    assert domino.critical_delay(KindGates()) == pytest.approx(32 * 20e-12)
    assert domino.hold_kind is None

    # complementary spin and NDR logic reuse the NAND-only adder
    assert default_netlist(CircuitStyle.ComplementarySpin) == nand
    assert default_netlist(CircuitStyle.NdrClocked) == nand


def test_load_netlist():
    netlist = load_netlist(TESTS_DATA_PATH / 'xor_adder.json')
    assert netlist.name == 'xor_adder'
    assert netlist.bits == 8
    assert netlist.stage_boundary == 'FA'
    # the scope defaults to 'bit':
    assert netlist.critical_path[0] == (GateKind.NAND2, 2, 'bit')
    assert netlist.critical_delay(KindGates()) == pytest.approx(8 * 20e-12 + 30e-12)
    assert netlist.bit_sum(KindGates(), 'A_gate') == pytest.approx(5e-14)
    assert netlist.bit_sum(KindGates(), 'E_dyn') == pytest.approx(
        (3 * 10e-12 + 2 * 30e-12) * 1e-4)


def test_load_netlist_errors(write_netlist):
    good = {
        'stage_boundary': 'FA',
        'gates': [{'kind': 'NAND2', 'count': 9}],
        'critical_path': [{'kind': 'NAND2', 'levels': 2}],
    }
    assert load_netlist(write_netlist(good)).bits == 32

    with pytest.raises(LibraryParseError) as e:
        load_netlist(write_netlist(dict(good, gates=[{'kind': 'NOR3', 'count': 1}])))
    assert 'gates[0].kind' in str(e.value)

    with pytest.raises(LibraryParseError):
        load_netlist(write_netlist({k: v for k, v in good.items() if k != 'critical_path'}))

    with pytest.raises(LibraryParseError) as e:
        load_netlist(write_netlist(dict(good, critical_path=[{'kind': 'NAND2', 'levels': 0}])))
    assert 'critical_path' in str(e.value)

    with pytest.raises(FileNotFoundError):
        load_netlist(TESTS_DATA_PATH / 'missing.json')


def test_netlist_needs_bits():
    with pytest.raises(InvalidParameterError):
        Netlist([('NAND2', 9)], [('NAND2', 2, 'bit')], bits=0)


def test_held_gate_belongs_to_the_netlist(write_netlist):
    for style in CircuitStyle:
        netlist = default_netlist(style)
        if netlist.hold_kind is not None:
            assert netlist.hold_kind in [kind for kind, _ in netlist.gates]

    with pytest.raises(InvalidParameterError):
        Netlist([('NAND2', 9)], [('NAND2', 2, 'bit')], hold_kind='XOR2')
    with pytest.raises(InvalidParameterError):
        load_netlist(write_netlist({
            'stage_boundary': 'FA',
            'gates': [{'kind': 'NAND2', 'count': 9}],
            'critical_path': [{'kind': 'NAND2', 'levels': 2}],
            'hold_kind': 'XOR2',
        }))


def test_clock_event_counts():
    # 3-bit adder, 2 NAND2 + 1 INV per full adder, counted by hand:
    #   constant clock: 3 cycles x 3 bits  -> 9 full adder events
    #   clock disable : bit 0 in cycle 0, bit 1 in cycle 1, bit 2 in
    #                   cycle 2              -> 3 full adder events
    tiny = Netlist([('NAND2', 2), ('INV', 1)], [('NAND2', 2, 'bit')], bits=3)
    assert clock_event_counts(tiny, 'constant') == {GateKind.NAND2: 18, GateKind.INV: 9}
    assert clock_event_counts(tiny, 'disable') == {GateKind.NAND2: 6, GateKind.INV: 3}
    assert simulate_clock_events(tiny, 'constant') == 27
    assert simulate_clock_events(tiny, 'disable') == 9
    # 6 NAND2 + 3 INV events
    assert clocked_dynamic_energy(KindGates(), tiny, 'disable') == pytest.approx(
        (6 * 10e-12 + 3 * 5e-12) * 1e-4)

    nand = default_netlist(CircuitStyle.NdrClocked)
    assert simulate_clock_events(nand, 'constant') == 9216
    assert simulate_clock_events(nand, 'disable') == 288
    assert Fraction(simulate_clock_events(nand, 'disable'),
                    simulate_clock_events(nand, 'constant')) == Fraction(1, 32)

    netlist = load_netlist(TESTS_DATA_PATH / 'xor_adder.json')
    counts = clock_event_counts(netlist, 'disable')
    assert counts[GateKind.NAND2] == 8 * 3
    assert counts[GateKind.XOR2] == 8 * 2
    assert Fraction(simulate_clock_events(netlist, 'disable'),
                    simulate_clock_events(netlist, 'constant')) == Fraction(1, 8)

    with pytest.raises(InvalidParameterError):
        simulate_clock_events(nand, 'gated')


def test_clocked_dynamic_energy():
    netlist = load_netlist(TESTS_DATA_PATH / 'xor_adder.json')
    gates = KindGates()
    E = clocked_dynamic_energy(gates, netlist, 'disable')
    assert E == pytest.approx(8 * netlist.bit_sum(gates, 'E_dyn'))
    assert clocked_dynamic_energy(gates, netlist, 'constant') == pytest.approx(8 * E)
