"""
Purpose
----
Compose the gate metrics of one device into the delay, energy and area of a
32-bit ALU (a ripple-carry adder plus a fixed overhead) under the circuit
style the device supports, and apply ultra-deep pipelining.

Usage
----
from xcmosbench.devices.gates import DeviceGates
from xcmosbench.circuits.alu import alu32_metrics, pipeline_transform

c = alu32_metrics(DeviceGates(lib['CMOS-HP']))
p = pipeline_transform(alu32_metrics(DeviceGates(lib['CMOS-HP']), 'DominoNP'))

Author
----
xcmosbench developers

Dates
----
2026-10-16

References
----
Circuit styles:
  StaticCMOSLike     NAND-only ripple adder, switching activity 'activity'
  ComplementarySpin  same netlist, domain-wall gates
  MajoritySpin       majority adder, supply-clocked spin gates (activity 1)
  DominoNP           N-P domino adder, precharged nodes (activity 0.5)
  NdrClocked         NAND-only adder, each gate clocked once per operation;
                     the sum gate of every bit stays clocked until the word
                     completes

License
----
MIT License

Copyright (c) 2026      xcmosbench developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""

import copy
import logging
import math

from xcmosbench.base.constants import (ACTIVITY_DEFAULT,
                                       ALU_AREA_OVERHEAD,
                                       ALU_ENERGY_OVERHEAD,
                                       DOMINO_ACTIVITY,
                                       DOMINO_PIPELINE_OVERHEAD,
                                       LATCHING_PIPELINE_OVERHEAD,
                                       SPIN_ACTIVITY)
from xcmosbench.base.devicelib import DeviceParams
from xcmosbench.base.enums import (STYLE_CLASSES,
                                   CircuitStyle,
                                   DeviceClass)
from xcmosbench.base.errors import (InvalidParameterError,
                                    NotPipelinableError,
                                    StyleMismatchError)
from xcmosbench.devices.gates import DeviceGates

from .netlist import default_netlist

lgr = logging.getLogger(__name__)


class CircuitMetrics(object):
    """
    Metrics of a benchmark circuit

    Members:
    --------
    style : CircuitStyle
    t_op : float
        latency of one operation (s)
    E_op : float
        energy per operation, leakage included (J)
    A_circ : float
        circuit area (m^2)
    P_leak_total : float
        static power of the whole circuit (W)
    logic_depth : int
        pipeline stages an operation goes through (1 after ultra-deep
        pipelining)
    t_stage : float
        delay of one full adder stage (s)
    t_period : float
        time between two results (s); t_op unless pipelined
    E_dyn : float
        switching part of E_op (J)
    name : str
        device the circuit is built from
    """

    def __init__(
            self,
            style,
            t_op,
            E_op,
            A_circ,
            P_leak_total=0.0,
            logic_depth=32,
            t_stage=None,
            t_period=None,
            E_dyn=None,
            name=''
            ):
        self.style = CircuitStyle(style)
        self.t_op = float(t_op)
        self.E_op = float(E_op)
        self.A_circ = float(A_circ)
        self.P_leak_total = float(P_leak_total)
        self.logic_depth = int(logic_depth)
        self.t_stage = float(t_stage) if t_stage is not None else self.t_op
        self.t_period = float(t_period) if t_period is not None else self.t_op
        self.E_dyn = float(E_dyn) if E_dyn is not None else self.E_op
        self.name = name
        self.validate()

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return ('CircuitMetrics({s}, t_op={t:.4g}, E_op={e:.4g}, A_circ={a:.4g}, '
                'logic_depth={d})').format(s=self.style.value, t=self.t_op, e=self.E_op,
                                            a=self.A_circ, d=self.logic_depth)

    @property
    def p_density(self):
        """
        Power density when running at full rate (W/m^2)
        """
        return self.E_op / (self.t_period * self.A_circ)

    def replace(self, **changes):
        new = copy.copy(self)
        for key, value in changes.items():
            if not hasattr(new, key):
                raise AttributeError('CircuitMetrics has no field {k}'.format(k=key))
            setattr(new, key, value)
        new.validate()
        return new

    def validate(self):
        for field in ['t_op', 't_stage', 't_period', 'A_circ']:
            value = getattr(self, field)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(
                    'Circuit {f} must be finite and positive'.format(f=field),
                    expStr='> 0', gotStr=value
                )
        for field in ['E_op', 'E_dyn', 'P_leak_total']:
            value = getattr(self, field)
            if not (math.isfinite(value) and value >= 0):
                raise InvalidParameterError(
                    'Circuit {f} must be finite and nonnegative'.format(f=field),
                    expStr='>= 0', gotStr=value
                )
        if self.logic_depth < 1:
            raise InvalidParameterError('Logic depth must be at least 1',
                                        gotStr=self.logic_depth, expStr='>= 1')


def default_style(dev_class):
    """
    Circuit style of the unpipelined ALU for a device class
    """
    dev_class = DeviceClass(dev_class)
    if dev_class == DeviceClass.NDR:
        return CircuitStyle.NdrClocked
    if dev_class.is_charge:
        return CircuitStyle.StaticCMOSLike
    if dev_class == DeviceClass.mLogic:
        return CircuitStyle.ComplementarySpin
    return CircuitStyle.MajoritySpin


def pipelined_style(dev_class):
    """
    Circuit style that can be pipelined down to one full adder per stage.
    Static FET logic has no intrinsic latch, so FETs use N-P domino.
    """
    dev_class = DeviceClass(dev_class)
    if dev_class in (DeviceClass.ChargeFET, DeviceClass.Ferroelectric):
        return CircuitStyle.DominoNP
    return default_style(dev_class)


def check_style(style, dev_class):
    """
    Raises StyleMismatchError unless 'style' can be built from 'dev_class'
    """
    if DeviceClass(dev_class) not in STYLE_CLASSES[style]:
        raise StyleMismatchError(
            'Circuit style %r cannot be built from this device class',
            style.value,
            expStr=' or '.join(sorted(c.value for c in STYLE_CLASSES[style])),
            gotStr=DeviceClass(dev_class).value
        )


def alu32_metrics(
        gates,
        style=None,
        activity=ACTIVITY_DEFAULT,
        netlist=None,
        spin_activity=SPIN_ACTIVITY,
        area_overhead=ALU_AREA_OVERHEAD,
        energy_overhead=ALU_ENERGY_OVERHEAD
        ):
    """
    Delay, energy and area of a 32-bit ALU.

    The ALU is a ripple-carry adder scaled by area_overhead and
    energy_overhead.  The carry crosses the 'bit' levels of the netlist
    critical path once per bit, and the last sum crosses the 'word' levels.

    Parameters
    ----------
    gates : DeviceGates or DeviceParams
        gate-metrics provider (a DeviceParams is wrapped in DeviceGates)
    style : CircuitStyle or str or None
        defaults to default_style(device class)
    activity : float
        switching probability of the inputs and internal nodes (static
        styles only)
    netlist : Netlist or None
        defaults to the shipped netlist of the style
    spin_activity : float
        activity of supply-clocked majority logic
    area_overhead, energy_overhead : float

    Returns
    -------
    CircuitMetrics
    """
    if isinstance(gates, DeviceParams):
        gates = DeviceGates(gates)
    dev_class = getattr(gates, 'device_class', None)
    if style is None:
        if dev_class is None:
            raise InvalidParameterError('A circuit style is needed for this gate provider')
        style = default_style(dev_class)
    style = CircuitStyle(style)
    if dev_class is not None:
        check_style(style, dev_class)
    if not 0 <= activity <= 1:
        raise InvalidParameterError('Activity must be a probability', gotStr=activity,
                                    expStr='0 <= activity <= 1')
    if netlist is None:
        netlist = default_netlist(style)

    bits = netlist.bits
    t_stage = netlist.path_delay(gates, 'bit')
    t_op = netlist.critical_delay(gates)

    if style in (CircuitStyle.StaticCMOSLike, CircuitStyle.ComplementarySpin):
        node_activity = activity
    elif style == CircuitStyle.MajoritySpin:
        node_activity = spin_activity
    elif style == CircuitStyle.DominoNP:
        node_activity = DOMINO_ACTIVITY
    else:
        # every NDR gate is clocked exactly once per operation
        node_activity = 1.0

    E_dyn = bits * netlist.bit_sum(gates, 'E_dyn') * node_activity * energy_overhead
    P_leak_total = bits * netlist.bit_sum(gates, 'P_leak')
    if style == CircuitStyle.NdrClocked:
        E_static = ndr_hold_energy(gates, netlist, t_stage)
    else:
        E_static = P_leak_total * t_op

    metrics = CircuitMetrics(
        style,
        t_op=t_op,
        E_op=E_dyn + E_static,
        A_circ=bits * netlist.bit_sum(gates, 'A_gate') * area_overhead,
        P_leak_total=P_leak_total,
        logic_depth=bits,
        t_stage=t_stage,
        E_dyn=E_dyn,
        name=getattr(gates, 'name', ''),
    )
    lgr.debug('{n}: {m}'.format(n=metrics.name, m=metrics))
    return metrics


def ndr_hold_energy(gates, netlist, t_fa):
    """
    Static energy of the held sum gates: the gate of bit i (1-based) stays
    clocked for the (bits - i) full adder delays left in the operation.
    """
    kind = netlist.hold_kind if netlist.hold_kind is not None else netlist.gates[-1][0]
    bits = netlist.bits
    return sum(gates(kind, hold_time=(bits - i) * t_fa).E_hold
               for i in range(1, bits + 1))


def pipeline_transform(c, style=None, overhead=None):
    """
    Ultra-deep pipelining: one full adder per stage, so a result leaves the
    circuit every stage delay (domino: every evaluate plus precharge).  The
    energy per result does not change; the area grows by 'overhead'
    (default 1.1 for domino clocking, 1.0 for intrinsically latching
    logic).

    Parameters
    ----------
    c : CircuitMetrics
    style : CircuitStyle or str or None
        must match c.style if given
    overhead : float or None

    Returns
    -------
    CircuitMetrics
    """
    style = c.style if style is None else CircuitStyle(style)
    if style != c.style:
        raise StyleMismatchError('Circuit was built as %r', c.style.value,
                                 expStr=c.style.value, gotStr=style.value)
    if style == CircuitStyle.StaticCMOSLike:
        raise NotPipelinableError(
            'Static logic %r needs explicit latches to be pipelined', c.name,
            expStr='DominoNP, NdrClocked, MajoritySpin or ComplementarySpin',
            gotStr=style.value
        )
    if c.logic_depth == 1:
        return c

    if style == CircuitStyle.DominoNP:
        period = 2 * c.t_stage
        default_overhead = DOMINO_PIPELINE_OVERHEAD
    else:
        period = c.t_stage
        default_overhead = LATCHING_PIPELINE_OVERHEAD
    if overhead is None:
        overhead = default_overhead

    return c.replace(logic_depth=1, t_period=period, A_circ=c.A_circ * overhead)
