"""
Voltage-controlled spintronic devices: magnetoelectric MTJ (MEMTJ),
spin-wave devices (SWD) with ME transducers and CoMET.

All three are switched by charging a magnetoelectric (ME) capacitor
instead of driving a current through a magnet, so their switching energy
is dominated by C_ME*V_ME^2.
"""

import math

from xcmosbench.base.constants import (MAJORITY_FANIN,
                                       T_ME_SWITCH_DEFAULT)
from xcmosbench.base.enums import (DeviceClass,
                                   GateKind,
                                   MemtjVariant)
from xcmosbench.base.errors import ClassMismatchError

from .gates import GateMetrics

# 50% point of a single-pole RC step response
RC_DELAY_FACTOR = 0.69


###   MEMTJ   ###

def memtj_read(dev):
    """
    Read path of an MEMTJ: the output node sits between a parallel and an
    antiparallel MTJ.

    Returns
    -------
    t_read : float
        RC delay of the divider charging the next ME capacitor (s)
    E_read : float
        divider current during the read plus the output swing (J)
    V_swing : float
        output voltage swing, V_dd*TMR/(2 + TMR) (V)
    """
    R_MTJ = dev.extra('R_MTJ')
    TMR = dev.extra('TMR')
    C_ME = dev.extra('C_ME')

    V_swing = dev.V_dd * TMR / (2 + TMR)
    R_out = R_MTJ * (1 + TMR) / (2 + TMR)
    t_read = RC_DELAY_FACTOR * R_out * C_ME
    E_read = (dev.V_dd ** 2 * t_read / (R_MTJ * (2 + TMR))
              + C_ME * V_swing ** 2)
    return t_read, E_read, V_swing


def memtj_gate_metrics(dev, variant=None, kind=GateKind.MAJ3, fanin=MAJORITY_FANIN):
    """
    Gate metrics of an MEMTJ majority gate.

    Parameters
    ----------
    dev : DeviceParams
        MEMTJ device with the 'C_ME', 'V_ME', 'R_MTJ' and 'TMR' extras
        ('t_ME_switch' is optional)
    variant : MemtjVariant, optional
        Standard: 'fanin' paralleled devices, one per input;
        CompactSingleDomain: one single-domain device takes every input;
        Preset: Standard plus one preset ME event (and clock phase) per
        evaluation.  Defaults to the device's own variant.
    fanin : int
        number of majority inputs

    Returns
    -------
    GateMetrics
    """
    dev.require_class(DeviceClass.MEMTJ)
    variant = MemtjVariant(dev.variant if variant is None else variant)
    C_ME = dev.extra('C_ME')
    V_ME = dev.extra('V_ME')
    t_me = dev.extra('t_ME_switch', T_ME_SWITCH_DEFAULT)
    t_read, E_read, _ = memtj_read(dev)

    n_devices = 1 if variant == MemtjVariant.CompactSingleDomain else fanin
    E_me = C_ME * V_ME ** 2
    t_gate = t_me + t_read
    E_dyn = n_devices * E_me + E_read
    if variant == MemtjVariant.Preset:
        t_gate += t_me
        E_dyn += E_me

    return GateMetrics(
        kind,
        t_gate=t_gate,
        E_dyn=E_dyn,
        P_leak=0.0,
        A_gate=n_devices * dev.A_dev
    )


###   SWD and CoMET   ###

def _swd_metrics(dev, kind):
    t_gate = dev.extra('t_metastable_settle') + dev.extra('t_wave_prop')
    E_dyn = (dev.extra('C_ME') * dev.extra('V_ME') ** 2
             + dev.extra('E_clock') / dev.extra('n_cells_per_clock_driver'))
    return GateMetrics(kind, t_gate=t_gate, E_dyn=E_dyn, P_leak=0.0, A_gate=dev.A_dev)


def _comet_metrics(dev, kind):
    v_DW = dev.extra('v_DW')
    t_prop = 0.0 if math.isinf(v_DW) else dev.extra('L_prop') / v_DW
    t_gate = dev.extra('t_nucleation') + t_prop
    # inverter leakage is charged per evaluation, not reported as P_leak
    E_dyn = (dev.extra('E_transistor')
             + dev.extra('E_joule')
             + dev.extra('P_leak_inv') * t_gate)
    return GateMetrics(kind, t_gate=t_gate, E_dyn=E_dyn, P_leak=0.0, A_gate=dev.A_dev)


def me_device_metrics(dev, kind=None, gate_kind=GateKind.MAJ3):
    """
    Gate metrics of a spin-wave (SWD) or CoMET device.

    SWD:   t_gate = t_metastable_settle + t_wave_prop
           E_dyn  = C_ME*V_ME^2 + E_clock/n_cells_per_clock_driver
    CoMET: t_gate = t_nucleation + L_prop/v_DW
           E_dyn  = E_transistor + E_joule + P_leak_inv*t_gate

    'kind' (DeviceClass.SWD or DeviceClass.CoMET) defaults to the class of
    the device and must match it.
    """
    kind = dev.device_class if kind is None else DeviceClass(kind)
    if kind not in (DeviceClass.SWD, DeviceClass.CoMET):
        raise ClassMismatchError('%r is not a magnetoelectric device kind', kind.value,
                                 expStr='SWD or CoMET', gotStr=kind.value)
    dev.require_class(kind)
    if kind == DeviceClass.SWD:
        return _swd_metrics(dev, gate_kind)
    return _comet_metrics(dev, gate_kind)
