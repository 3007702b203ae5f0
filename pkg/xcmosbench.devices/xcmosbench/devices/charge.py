"""
Purpose
----
Gate metrics of charge-based devices: conventional and tunnel FETs,
ferroelectric FETs (one polarization delay per gate) and NDR devices
(BisFET/ITFET), whose supply is clocked and which leak while held.

Usage
----
from xcmosbench.devices.charge import fet_gate_metrics

g = fet_gate_metrics(dev, 'NAND2', fanout=1, ext_load=0.0)

Author
----
xcmosbench developers

Dates
----
2026-10-16

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

from xcmosbench.base.constants import (K_GATE,
                                       N_DEV)
from xcmosbench.base.enums import (DeviceClass,
                                   GateKind)
from xcmosbench.base.errors import InvalidParameterError

from .gates import GateMetrics


def _check_load(dev, fanout, ext_load):
    if fanout < 1:
        raise InvalidParameterError('fanout must be at least 1', dev.name,
                                    expStr='>= 1', gotStr=fanout)
    if ext_load < 0:
        raise InvalidParameterError('ext_load must be nonnegative', dev.name,
                                    expStr='>= 0', gotStr=ext_load)
    if not dev.I_on > 0:
        raise InvalidParameterError('I_on of %r must be positive', dev.name,
                                    expStr='> 0', gotStr=dev.I_on)


def drive_capacitance(dev, kind, fanout=1, ext_load=0.0, k_gate=None):
    """
    Capacitance switched by a gate: its own input devices, the inputs of
    the 'fanout' gates it drives and an external load.

        C_drive = k_gate * C_gate * (1 + fanout) + ext_load
    """
    k = (k_gate or K_GATE)[GateKind(kind)]
    return k * dev.C_gate * (1 + fanout) + ext_load


def fet_gate_metrics(dev, kind, fanout=1, ext_load=0.0, k_gate=None, n_dev=None):
    """
    Delay, energy, leakage and area of a gate built from a charge FET.

    Parameters
    ----------
    dev : DeviceParams
        ChargeFET, Ferroelectric or NDR device
    kind : GateKind or str
    fanout : int
        number of identical gates driven, >= 1
    ext_load : float
        extra load capacitance (F), >= 0
    k_gate, n_dev : dict, optional
        override the gate-kind multipliers and device counts

    Returns
    -------
    GateMetrics
        t_gate = C_drive*V_dd/I_on + t_p ; E_dyn = C_drive*V_dd^2 ;
        P_leak = n_dev*I_off*V_dd ; A_gate = n_dev*A_dev
    """
    dev.require_class(DeviceClass.ChargeFET, DeviceClass.Ferroelectric, DeviceClass.NDR)
    _check_load(dev, fanout, ext_load)
    kind = GateKind(kind)
    n = (n_dev or N_DEV)[kind]

    c_drive = drive_capacitance(dev, kind, fanout, ext_load, k_gate)
    # a gate switches its input devices together: one polarization delay per gate
    t_gate = c_drive * dev.V_dd / dev.I_on + dev.t_p
    return GateMetrics(
        kind,
        t_gate=t_gate,
        E_dyn=c_drive * dev.V_dd ** 2,
        P_leak=n * dev.I_off * dev.V_dd,
        A_gate=n * dev.A_dev
    )


def ndr_gate_metrics(dev, hold_time=0.0, kind=GateKind.INV, fanout=1, ext_load=0.0,
                     k_gate=None, n_dev=None):
    """
    Gate metrics of an NDR (BisFET/ITFET) gate.

    The supply is clocked: the gate only leaks while it is held on after
    evaluating.  The leakage is that of the one latching device,
    P_leak = I_off*V_dd, so the hold energy is P_leak*hold_time (see
    GateMetrics.E_hold).
    """
    dev.require_class(DeviceClass.NDR)
    _check_load(dev, fanout, ext_load)
    if hold_time < 0:
        raise InvalidParameterError('hold_time must be nonnegative', dev.name,
                                    expStr='>= 0', gotStr=hold_time)
    kind = GateKind(kind)
    n = (n_dev or N_DEV)[kind]

    c_drive = drive_capacitance(dev, kind, fanout, ext_load, k_gate)
    return GateMetrics(
        kind,
        t_gate=c_drive * dev.V_dd / dev.I_on,
        E_dyn=c_drive * dev.V_dd ** 2,
        P_leak=dev.I_off * dev.V_dd,
        A_gate=n * dev.A_dev,
        hold_time=hold_time
    )
