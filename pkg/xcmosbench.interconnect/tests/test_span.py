"""   Tests for the module "span.py"   """

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from xcmosbench.base.devicelib import (DeviceParams,
                                       RepeaterParams,
                                       WireParams,
                                       load_device_library)
from xcmosbench.base.enums import DeviceClass
from xcmosbench.base.errors import InvalidParameterError
from xcmosbench.devices.gates import gate_metrics
from xcmosbench.interconnect.repeaters import wire_delay_slope
from xcmosbench.interconnect.span import (SpanResult,
                                          device_span_of_control,
                                          intrinsic_delay,
                                          span_from_slope,
                                          span_of_control)

###   Globals   ###

WIRE = WireParams(r_w=1e8, c_w=2e-10)
REPEATER = RepeaterParams(R0=1e4, C0=0.1e-15, t_p=0.0, V_dd=0.7)
DEFAULT_LIBRARY = load_device_library()
CHARGE_DEVICES = [dev.name for dev in DEFAULT_LIBRARY if dev.device_class.is_charge]


###   Tests   ###

def test_span_of_control_example():
    slope = wire_delay_slope(WIRE, REPEATER)
    assert slope == pytest.approx(3.48e-7, rel=2e-3)

    span = span_of_control(7e-12, WIRE, REPEATER, 1e-13)
    assert span.T_clk == pytest.approx(2.1e-9)
    assert span.l_max == pytest.approx(6.03e-3, rel=5e-3)
    assert span.n_gates == pytest.approx(1.14e9, rel=1e-2)
    assert span.n_gates == math.floor(math.pi * span.l_max ** 2 / 1e-13)
    assert isinstance(span.n_gates, int)

    # a custom clock rule:
    assert span_of_control(7e-12, WIRE, REPEATER, 1e-13, clock_multiple=150).l_max == \
        pytest.approx(span.l_max / 2)


def test_span_of_control_limits():
    assert span_of_control(0, WIRE, REPEATER, 1e-13) == SpanResult(0, 0.0, 0)
    with pytest.raises(InvalidParameterError):
        span_of_control(-1e-12, WIRE, REPEATER, 1e-13)
    with pytest.raises(InvalidParameterError):
        span_of_control(1e-12, WIRE, REPEATER, 0)


@given(t_int=st.floats(min_value=1e-13, max_value=1e-9),
       A_gate=st.floats(min_value=1e-15, max_value=1e-11),
       factor=st.floats(min_value=1.0, max_value=10.0))
def test_span_monotonicity(t_int, A_gate, factor):
    span = span_of_control(t_int, WIRE, REPEATER, A_gate)
    assert span_of_control(factor * t_int, WIRE, REPEATER, A_gate).n_gates >= span.n_gates
    assert span_of_control(t_int, WIRE, REPEATER, factor * A_gate).n_gates <= span.n_gates


def test_span_from_slope():
    slope = wire_delay_slope(WIRE, REPEATER)
    assert span_from_slope(7e-12, slope, 1e-13) == span_of_control(7e-12, WIRE, REPEATER, 1e-13)


def test_intrinsic_delay():
    dev = DeviceParams(name='test-FET', device_class='ChargeFET', V_dd=0.7, I_on=1e-5,
                       I_off=1e-9, C_gate=0.1e-15, A_dev=1e-14)
    # fanout-1 inverter: 2*R0*C0
    assert intrinsic_delay(dev) == pytest.approx(14e-12)
    assert intrinsic_delay(dev.replace(device_class=DeviceClass.Ferroelectric, t_p=1e-11)) == \
        pytest.approx(24e-12)

    asl = DEFAULT_LIBRARY['ASL']
    assert intrinsic_delay(asl) == gate_metrics(asl, 'MAJ3').t_gate


@pytest.mark.parametrize('name', CHARGE_DEVICES)
def test_polarization_delay_increases_span(name):
    """
    Raising t_p from 0 to 10 ps lengthens the clock period (300 t_p) more
    than it slows the repeated wire, so more gates are reachable
    """
    dev = DEFAULT_LIBRARY[name]
    fast = device_span_of_control(dev.replace(t_p=0.0), DEFAULT_LIBRARY.wire)
    slow = device_span_of_control(dev.replace(t_p=10e-12), DEFAULT_LIBRARY.wire)
    assert slow.T_clk == pytest.approx(fast.T_clk + 300 * 10e-12)
    assert slow.n_gates > fast.n_gates


def test_device_span_of_control():
    cmos = DEFAULT_LIBRARY['CMOS-HP']
    span = device_span_of_control(cmos, WIRE)
    assert span.T_clk == pytest.approx(300 * intrinsic_delay(cmos))
    assert span.n_gates > 0

    # spintronic devices reach their neighbours through spin relays
    for dev in DEFAULT_LIBRARY.by_class(DeviceClass.ASL, DeviceClass.MEMTJ):
        span = device_span_of_control(dev, WIRE)
        assert math.isfinite(span.l_max)
        assert span.n_gates >= 0
