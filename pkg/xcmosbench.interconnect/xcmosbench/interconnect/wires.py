"""
Interconnect metrics of a technology: repeated wires for charge devices,
chains of spin relay buffers for spintronic ones.
"""

import math

from xcmosbench.base.constants import RELAY_SEGMENT_DEFAULT
from xcmosbench.base.enums import GateKind
from xcmosbench.base.errors import InvalidParameterError
from xcmosbench.devices.gates import gate_metrics

from .repeaters import (WIRE_COEFF,
                        repeated_wire_delay,
                        repeated_wire_energy,
                        repeater_params_for,
                        wire_delay_slope)


def _check_segment(segment):
    if not segment > 0:
        raise InvalidParameterError('Relay segment must be positive', gotStr=segment,
                                    expStr='> 0')


def relay_wire_metrics(gate, w, l, V_dd, segment=RELAY_SEGMENT_DEFAULT):
    """
    Delay and energy of a spin interconnect of length l relayed through a
    chain of native buffers, one every 'segment' metres.

    Parameters
    ----------
    gate : GateMetrics
        native buffer of the technology
    w : WireParams
    l : float
        wire length (m)
    V_dd : float
        supply of the wire segments (V)
    segment : float
        distance between relay buffers (m)

    Returns
    -------
    delay : float
        (s)
    energy : float
        (J)
    """
    if l < 0:
        raise InvalidParameterError('Wire length must be nonnegative', gotStr=l, expStr='>= 0')
    _check_segment(segment)
    n = math.ceil(l / segment)
    delay = n * (gate.t_gate + WIRE_COEFF * w.r_w * w.c_w * segment ** 2)
    energy = n * gate.E_dyn + 0.5 * w.c_w * l * V_dd ** 2
    return delay, energy


def relay_delay_slope(gate, w, segment=RELAY_SEGMENT_DEFAULT):
    """
    Delay per unit length of a relayed spin interconnect (s/m)
    """
    _check_segment(segment)
    return (gate.t_gate + WIRE_COEFF * w.r_w * w.c_w * segment ** 2) / segment


def device_wire_metrics(dev, w, l):
    """
    (delay, energy) of a wire of length l for the device 'dev'.  Charge
    devices drive optimally repeated wires; spintronic devices relay the
    signal (device extras 'relay_segment', default 10 um).
    """
    if dev.device_class.is_charge:
        r = repeater_params_for(dev)
        return float(repeated_wire_delay(w, r, l)), float(repeated_wire_energy(w, r, l))
    segment = dev.extra('relay_segment', RELAY_SEGMENT_DEFAULT)
    return relay_wire_metrics(gate_metrics(dev, GateKind.INV), w, l, dev.V_dd, segment)


def device_wire_slope(dev, w):
    """
    Delay per unit length of the interconnect of 'dev' (s/m)
    """
    if dev.device_class.is_charge:
        return float(wire_delay_slope(w, repeater_params_for(dev)))
    segment = dev.extra('relay_segment', RELAY_SEGMENT_DEFAULT)
    return relay_delay_slope(gate_metrics(dev, GateKind.INV), w, segment)

