"""
Purpose
----
Models of the current-driven spintronic logic families:

 - All Spin Logic (ASL): a charge current through the input magnet
   injects spin into a non-magnetic channel; the spin current that
   reaches the output magnet switches it.
 - Charge-Spin Logic (CSL): spin-Hall write of the free magnet; four
   variants (Base, CopperCollector, Complementary, YIG).
 - mLogic: domain-wall motion in a magnetic track driven by the write
   current.

Magnet switching follows a macrospin angular-momentum balance: the
critical spin current I_c = 4*q*alpha*Delta*k_B*T/(hbar*eta) and the
switching delay t_sw = q*N_s/(I_s - I_c), with N_s = M_s*V/mu_B the number
of Bohr magnetons in the free magnet.

Usage
----
from xcmosbench.devices.spin import asl_gate_metrics

g = asl_gate_metrics(lib['ASL-HA'])

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

import logging

import numpy as np

from xcmosbench.base.constants import (CSL_AREA_FACTOR,
                                       CSL_DRIVE_DERATING,
                                       CSL_GAIN,
                                       CSL_MAGNET_SCALE,
                                       HBAR,
                                       K_B,
                                       MU_B,
                                       Q_E,
                                       SWITCHING_DELAY_CAP,
                                       THERMAL_STABILITY_MIN,
                                       THERMAL_STABILITY_RTOL)
from xcmosbench.base.enums import (CslVariant,
                                   DeviceClass,
                                   GateKind)
from xcmosbench.base.errors import (ClassMismatchError,
                                    DegenerateGeometryError,
                                    InvalidParameterError,
                                    NoMotionError,
                                    NoSwitchingError,
                                    ThermalStabilityError)

from .gates import GateMetrics

# get the module logger:
lgr = logging.getLogger(__name__)


###   Magnets   ###

def magnet_volume(m):
    return m.volume


def thermal_stability(m):
    """
    Thermal stability factor Delta = K_u*V/(k_B*T)
    """
    return m.thermal_stability


def n_bohr_magnetons(m):
    """
    Number of Bohr magnetons in the free magnet, N_s = M_s*V/mu_B
    """
    return m.M_s * m.volume / MU_B


def critical_spin_current(m):
    """
    Critical spin current of a macrospin magnet (A):

        I_c = 4*q*alpha*Delta*k_B*T / (hbar*eta)

    For in-plane magnets K_u is taken to be the effective barrier (shape
    anisotropy included), so no demagnetizing term is added here.

    Raises ThermalStabilityError if Delta < 40.  A zero damping gives
    I_c = 0 (with a warning: it is not a physical magnet).
    """
    delta = thermal_stability(m)
    if delta < THERMAL_STABILITY_MIN * (1 - THERMAL_STABILITY_RTOL):
        raise ThermalStabilityError(
            'Magnet is not thermally stable',
            expStr='Delta >= {d:g}'.format(d=THERMAL_STABILITY_MIN),
            gotStr=delta
        )
    if m.alpha == 0:
        lgr.warning('Warning: Gilbert damping alpha = 0 is unphysical; '
                    'the critical current is 0')
        return 0.0
    return 4 * Q_E * m.alpha * delta * K_B * m.T / (HBAR * m.eta)


def magnet_switching_delay(m, I_s, t_cap=SWITCHING_DELAY_CAP):
    """
    Time for a spin current I_s (A) to reverse the magnet 'm' (s):

        t_sw = q*N_s / (I_s - I_c)

    Parameters
    ----------
    m : MagnetParams
    I_s : float
        spin current delivered to the magnet (A)
    t_cap : float
        longest switching delay accepted (s)

    Returns
    -------
    t_sw : float
    """
    I_c = critical_spin_current(m)
    if not I_s > I_c:
        raise NoSwitchingError(
            'Spin current does not exceed the critical current',
            expStr='> {c:.6g} A'.format(c=I_c),
            gotStr=I_s
        )
    t_sw = Q_E * n_bohr_magnetons(m) / (I_s - I_c)
    if t_sw > t_cap:
        raise NoSwitchingError(
            'Switching delay is beyond the cap (drive too close to I_c)',
            expStr='<= {t:g} s'.format(t=t_cap),
            gotStr=t_sw
        )
    return t_sw


###   ASL   ###

def asl_spin_current_density(ch, J_c):
    """
    Spin current density received at the output magnet of an ASL channel.

        J_s = beta*J_c / [ sinh(l_c/l_sf)*cosh(l_g/l_sf)/sinh(l_g/l_sf)
                           + cosh(l_c/l_sf) ]

    Parameters
    ----------
    ch : SpinChannelParams
    J_c : float or array
        charge current density at the injector (A/m^2), >= 0

    Returns
    -------
    J_s : float or np.ndarray
    """
    if not ch.l_g > 0:
        raise DegenerateGeometryError(
            'Ground path length must be positive (the spin current would vanish)',
            expStr='l_g > 0', gotStr=ch.l_g
        )
    J_c = np.asarray(J_c, dtype=float)
    if np.any(J_c < 0):
        raise InvalidParameterError('Charge current density must be nonnegative')

    x = ch.l_c / ch.l_sf
    y = ch.l_g / ch.l_sf
    # cosh(x)*(1 + tanh(x)/tanh(y)): long channels give J_s = 0, not inf/inf
    with np.errstate(over='ignore'):
        denominator = np.cosh(x) * (1.0 + np.tanh(x) / np.tanh(y))
    J_s = ch.beta * J_c / denominator
    if J_s.ndim == 0:
        return float(J_s)
    return J_s


def asl_gate_metrics(dev, kind=GateKind.MAJ3, t_cap=SWITCHING_DELAY_CAP):
    """
    ASL majority gate.  The supply drives I_on through the input magnet;
    the drive is held for the switching time of the output magnet.
    """
    dev.require_class(DeviceClass.ASL)
    ch = dev.channel
    J_c = dev.I_on / ch.cross_section
    I_s = asl_spin_current_density(ch, J_c) * ch.cross_section
    try:
        t_gate = magnet_switching_delay(dev.magnet, I_s, t_cap=t_cap)
    except NoSwitchingError as e:
        raise NoSwitchingError(e.msg + ' in %r', dev.name, e.expStr, e.gotStr)
    return GateMetrics(
        kind,
        t_gate=t_gate,
        E_dyn=dev.I_on * dev.V_dd * t_gate,
        P_leak=0.0,
        A_gate=dev.A_dev
    )


###   CSL   ###

def _require_csl(dev):
    dev.require_class(DeviceClass.CSL)
    if dev.magnet is None or dev.channel is None:
        raise ClassMismatchError('CSL device %r needs a magnet and a channel', dev.name)


def csl_magnet(dev, variant):
    """
    Free magnet of a CSL variant.  Base and CopperCollector magnets are
    made bigger to fit the two read MTJs.
    """
    variant = CslVariant(variant)
    return dev.magnet.scaled(CSL_MAGNET_SCALE[variant])


def csl_spin_current(dev, variant, I_drive=None):
    """
    Effective spin current written into the free magnet (A):
    I_s = g(variant) * spin_hall_gain * derating * I_drive
    """
    variant = CslVariant(variant)
    if I_drive is None:
        I_drive = dev.I_on
    base = (dev.extra('spin_hall_gain')
            * dev.extra('drive_derating', CSL_DRIVE_DERATING)
            * I_drive)
    return CSL_GAIN[variant] * base


def _csl_energy(dev, I_drive, t_gate):
    R_write = dev.extra('R_write', dev.channel.resistance)
    C_clock = dev.extra('C_clock', dev.C_gate)
    return I_drive ** 2 * R_write * t_gate + C_clock * dev.V_dd ** 2


def csl_gate_metrics(dev, variant=None, I_drive=None, kind=GateKind.MAJ3,
                     t_cap=SWITCHING_DELAY_CAP):
    """
    Gate metrics of a CSL device.

    Parameters
    ----------
    dev : DeviceParams
        CSL device, with magnet, channel and the 'spin_hall_gain' extra
    variant : CslVariant, optional
        defaults to the device's own variant
    I_drive : float, optional
        write current (A), defaults to I_on

    Returns
    -------
    GateMetrics
        t_gate = switching delay of the (variant-sized) magnet under the
        effective spin current; E_dyn = I_drive^2*R_write*t_gate +
        C_clock*V_dd^2 (Joule heating plus clocking)
    """
    _require_csl(dev)
    variant = CslVariant(dev.variant if variant is None else variant)
    if I_drive is None:
        I_drive = dev.I_on

    I_s = csl_spin_current(dev, variant, I_drive)
    try:
        t_gate = magnet_switching_delay(csl_magnet(dev, variant), I_s, t_cap=t_cap)
    except NoSwitchingError as e:
        raise NoSwitchingError(
            e.msg + ' in %r ({v})'.format(v=variant.value), dev.name, e.expStr, e.gotStr
        )
    return GateMetrics(
        kind,
        t_gate=t_gate,
        E_dyn=_csl_energy(dev, I_drive, t_gate),
        P_leak=0.0,
        A_gate=dev.A_dev * CSL_AREA_FACTOR[variant]
    )


def csl_drive_for_delay(dev, variant, t_target):
    """
    Write current (A) that switches the CSL magnet in exactly t_target (s)
    """
    _require_csl(dev)
    variant = CslVariant(variant)
    if not t_target > 0:
        raise InvalidParameterError('Target delay must be positive', dev.name,
                                    expStr='> 0', gotStr=t_target)
    m = csl_magnet(dev, variant)
    I_s = critical_spin_current(m) + Q_E * n_bohr_magnetons(m) / t_target
    per_amp = csl_spin_current(dev, variant, I_drive=1.0)
    return I_s / per_amp


def csl_energy_at_delay(dev, variant, t_target):
    """
    Switching energy (J) of a CSL variant driven to switch in t_target (s)
    """
    I_drive = csl_drive_for_delay(dev, variant, t_target)
    return _csl_energy(dev, I_drive, t_target)


###   mLogic   ###

def domain_wall_velocity(dev, J):
    """
    Linear domain-wall velocity law v = mu_dw*(J - J_c0) (m/s).
    Raises NoMotionError when J <= J_c0.
    """
    J_c0 = dev.extra('J_c0')
    if not J > J_c0:
        raise NoMotionError(
            'Current density does not move the domain wall in %r', dev.name,
            expStr='> {j:.6g} A/m^2'.format(j=J_c0), gotStr=J
        )
    return dev.extra('mu_dw') * (J - J_c0)


def domain_wall_transit_time(dev, I_write=None, J=None):
    """
    Time (s) for a domain wall to cross the track of 'dev'.

    Parameters
    ----------
    dev : DeviceParams
        device with the 'mu_dw', 'J_c0', 'L_track' and
        'track_cross_section' extras
    I_write : float, optional
        write current (A), defaults to I_on
    J : float, optional
        current density (A/m^2); overrides I_write
    """
    if J is None:
        if I_write is None:
            I_write = dev.I_on
        J = I_write / dev.extra('track_cross_section')
    return dev.extra('L_track') / domain_wall_velocity(dev, J)


def mlogic_gate_metrics(dev, I_write=None, J=None, kind=GateKind.NAND2):
    """
    mLogic gate: the write current moves a domain wall along the track;
    t_gate = L_track/v, E_dyn = I_write^2*R_w*t_gate + C_out*V_dd^2.
    C_out defaults to C_gate.
    """
    dev.require_class(DeviceClass.mLogic)
    if I_write is None:
        I_write = dev.I_on
    t_gate = domain_wall_transit_time(dev, I_write=I_write, J=J)
    C_out = dev.extra('C_out', dev.C_gate)
    return GateMetrics(
        kind,
        t_gate=t_gate,
        E_dyn=I_write ** 2 * dev.extra('R_w') * t_gate + C_out * dev.V_dd ** 2,
        P_leak=0.0,
        A_gate=dev.A_dev
    )
