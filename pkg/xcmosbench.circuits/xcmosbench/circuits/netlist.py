"""
Adder netlists: gate counts per bit and critical-path lengths, read from
JSON files, plus a cycle-by-cycle clock-event counter for clocked NDR
logic.
"""

import logging
from collections import Counter
from pathlib import Path

from xcmosbench.base.devicelib import read_json_file
from xcmosbench.base.enums import (CircuitStyle,
                                   GateKind)
from xcmosbench.base.errors import (InvalidParameterError,
                                    LibraryParseError)

lgr = logging.getLogger(__name__)

NETLIST_DIR = Path(__file__).parent / 'data'

DEFAULT_NETLISTS = {
    CircuitStyle.StaticCMOSLike: 'nand_ripple_adder.json',
    CircuitStyle.ComplementarySpin: 'nand_ripple_adder.json',
    CircuitStyle.NdrClocked: 'nand_ripple_adder.json',
    CircuitStyle.MajoritySpin: 'majority_adder.json',
    CircuitStyle.DominoNP: 'domino_adder.json',
}

CLOCK_SCHEMES = ('constant', 'disable')

_GATE_KINDS = [k.value for k in GateKind]

NETLIST_SCHEMA = {
    'type': 'object',
    'required': ['gates', 'critical_path', 'stage_boundary'],
    'additionalProperties': False,
    'properties': {
        'description': {'type': 'string'},
        'bits': {'type': 'integer', 'minimum': 1},
        'stage_boundary': {'enum': ['FA']},
        'gates': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'object',
                'required': ['kind', 'count'],
                'additionalProperties': False,
                'properties': {
                    'kind': {'enum': _GATE_KINDS},
                    'count': {'type': 'integer', 'minimum': 1},
                },
            },
        },
        'critical_path': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'object',
                'required': ['kind', 'levels'],
                'additionalProperties': False,
                'properties': {
                    'kind': {'enum': _GATE_KINDS},
                    'levels': {'type': 'integer', 'minimum': 0},
                    'scope': {'enum': ['bit', 'word']},
                },
            },
        },
        'hold_kind': {'enum': _GATE_KINDS},
    },
}


class Netlist(object):
    """
    Ripple adder described by its per-bit full adder

    Members:
    --------
    name : str
    bits : int
        word width
    gates : list of (GateKind, int)
        gates of one full adder
    critical_path : list of (GateKind, int, str)
        (kind, levels, scope).  'bit' levels repeat once per bit along the
        carry chain, 'word' levels are crossed once (final sum)
    stage_boundary : str
        pipeline stage boundary ('FA': one full adder per stage)
    hold_kind : GateKind or None
        gate held clocked until the word completes (NDR logic); one of the
        kinds in 'gates'
    """

    def __init__(
            self,
            gates,
            critical_path,
            bits=32,
            stage_boundary='FA',
            hold_kind=None,
            name=''
            ):
        self.name = name
        self.bits = int(bits)
        self.gates = [(GateKind(k), int(n)) for k, n in gates]
        self.critical_path = [(GateKind(k), int(n), s) for k, n, s in critical_path]
        self.stage_boundary = stage_boundary
        self.hold_kind = GateKind(hold_kind) if hold_kind is not None else None
        if self.bits < 1:
            raise InvalidParameterError('A netlist needs at least one bit', gotStr=self.bits,
                                        expStr='>= 1')
        kinds = [k for k, _ in self.gates]
        if self.hold_kind is not None and self.hold_kind not in kinds:
            raise InvalidParameterError(
                'The held gate must be one of the full adder gates',
                expStr=', '.join(k.value for k in kinds), gotStr=self.hold_kind.value
            )

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return 'Netlist({n!r}, bits={b})'.format(n=self.name, b=self.bits)

    def gate_count(self):
        """ Gates per full adder """
        return sum(n for _, n in self.gates)

    def path_delay(self, gates, scope='bit'):
        """
        Delay of the 'bit' (one carry stage) or 'word' (tail) part of the
        critical path, using the gate-metrics provider 'gates'
        """
        return sum(levels * gates(kind).t_gate
                   for kind, levels, s in self.critical_path if s == scope)

    def critical_delay(self, gates):
        """ Latency of the whole word """
        return self.bits * self.path_delay(gates, 'bit') + self.path_delay(gates, 'word')

    def bit_sum(self, gates, field):
        """ Sum of one GateMetrics field over the gates of a full adder """
        return sum(n * getattr(gates(kind), field) for kind, n in self.gates)


def netlist_from_dict(data, name=''):
    return Netlist(
        gates=[(g['kind'], g['count']) for g in data['gates']],
        critical_path=[(c['kind'], c['levels'], c.get('scope', 'bit'))
                       for c in data['critical_path']],
        bits=data.get('bits', 32),
        stage_boundary=data['stage_boundary'],
        hold_kind=data.get('hold_kind'),
        name=name,
    )


def load_netlist(path):
    """
    Reads and validates a netlist file.

    Parameters
    ----------
    path : str or Path

    Returns
    -------
    Netlist
    """
    path = Path(path)
    data = read_json_file(path, NETLIST_SCHEMA)
    if not any(c['levels'] > 0 for c in data['critical_path']):
        raise LibraryParseError('critical path has no levels', path, 'critical_path')
    netlist = netlist_from_dict(data, name=path.stem)
    lgr.info('Loaded netlist {n} ({g} gates per bit)'.format(
        n=netlist.name, g=netlist.gate_count()))
    return netlist


def default_netlist(style):
    """
    Shipped netlist of the circuit style 'style'
    """
    return load_netlist(NETLIST_DIR / DEFAULT_NETLISTS[CircuitStyle(style)])


def clock_event_counts(netlist, scheme):
    """
    Clock events per gate kind over one word operation, counted cycle by
    cycle.  The carry needs one cycle per bit.  With the 'constant' scheme
    every gate is clocked every cycle; with 'disable' a full adder is only
    clocked in the cycle its carry-in arrives.

    Returns
    -------
    collections.Counter
        {GateKind: events}
    """
    if scheme not in CLOCK_SCHEMES:
        raise InvalidParameterError('Unknown clock scheme',
                                    expStr=' or '.join(CLOCK_SCHEMES), gotStr=scheme)
    counts = Counter()
    for cycle in range(netlist.bits):
        for bit in range(netlist.bits):
            if scheme == 'disable' and bit != cycle:
                continue
            for kind, n in netlist.gates:
                for _ in range(n):
                    counts[kind] += 1
    return counts


def simulate_clock_events(netlist, scheme):
    """
    Total number of gate clock events over one word operation
    """
    return sum(clock_event_counts(netlist, scheme).values())


def clocked_dynamic_energy(gates, netlist, scheme):
    """
    Dynamic energy of one word operation from the clock-event counts
    """
    counts = clock_event_counts(netlist, scheme)
    return sum(n * gates(kind).E_dyn for kind, n in counts.items())
