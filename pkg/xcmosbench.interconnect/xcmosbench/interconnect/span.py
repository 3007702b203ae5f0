"""
Span of control: how many gates an optimally repeated wire reaches within
one clock period.
"""

import math

from xcmosbench.base.constants import CLOCK_MULTIPLE
from xcmosbench.base.enums import GateKind
from xcmosbench.base.errors import InvalidParameterError
from xcmosbench.devices.charge import fet_gate_metrics
from xcmosbench.devices.gates import gate_metrics

from .repeaters import wire_delay_slope
from .wires import device_wire_slope


class SpanResult(object):
    """
    Members:
    --------
    T_clk : float
        clock period (s)
    l_max : float
        distance covered by a repeated wire within T_clk (m)
    n_gates : int
        gates inside the disc of radius l_max
    """

    def __init__(self, T_clk, l_max, n_gates):
        self.T_clk = T_clk
        self.l_max = l_max
        self.n_gates = n_gates

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return 'SpanResult(T_clk={t:.4g}, l_max={l:.4g}, n_gates={n})'.format(
            t=self.T_clk, l=self.l_max, n=self.n_gates)


def span_of_control(t_int, w, r, A_gate, clock_multiple=CLOCK_MULTIPLE):
    """
    Number of gates reachable within one clock period.

    The clock period is clock_multiple times the intrinsic delay.  The whole
    period is spent on the wire, and every gate inside the disc of radius
    l_max around the driver counts.

    Parameters
    ----------
    t_int : float
        intrinsic gate delay (s)
    w : WireParams
    r : RepeaterParams
    A_gate : float
        footprint of one gate (m^2)
    clock_multiple : float

    Returns
    -------
    SpanResult
    """
    return span_from_slope(t_int, wire_delay_slope(w, r), A_gate, clock_multiple)


def span_from_slope(t_int, slope, A_gate, clock_multiple=CLOCK_MULTIPLE):
    """
    Same as span_of_control, for an interconnect of known delay per unit
    length (s/m)
    """
    if t_int < 0:
        raise InvalidParameterError('Intrinsic delay must be nonnegative', gotStr=t_int,
                                    expStr='>= 0')
    if not A_gate > 0:
        raise InvalidParameterError('Gate area must be positive', gotStr=A_gate,
                                    expStr='> 0')
    T_clk = clock_multiple * t_int
    l_max = float(T_clk / slope)
    n_gates = int(math.floor(math.pi * l_max ** 2 / A_gate))
    return SpanResult(T_clk=T_clk, l_max=l_max, n_gates=n_gates)


def intrinsic_delay(dev):
    """
    Delay of a minimum gate driving itself: a fanout-1 inverter for charge
    devices, the native gate for spintronic ones
    """
    if dev.device_class.is_charge:
        return fet_gate_metrics(dev, GateKind.INV, fanout=1).t_gate
    return gate_metrics(dev, GateKind.INV).t_gate


def device_span_of_control(dev, w, A_gate=None, clock_multiple=CLOCK_MULTIPLE):
    """
    Span of control of the device 'dev' on its own interconnect: charge
    devices drive repeaters built from themselves, spintronic devices relay
    the signal.  A_gate defaults to the NAND2 footprint.
    """
    if A_gate is None:
        A_gate = gate_metrics(dev, GateKind.NAND2).A_gate
    return span_from_slope(
        intrinsic_delay(dev), device_wire_slope(dev, w), A_gate,
        clock_multiple=clock_multiple
    )
