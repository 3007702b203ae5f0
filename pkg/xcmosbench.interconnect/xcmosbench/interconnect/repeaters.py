"""
Purpose
----
Delay and energy of optimally repeated interconnects: the closed forms
used for benchmarking, and a brute-force Elmore optimizer over the number
and size of the repeaters that checks them.

Usage
----
from xcmosbench.interconnect.repeaters import (repeated_wire_delay,
                                               repeater_params_for)

r = repeater_params_for(lib['CMOS-HP'])
t = repeated_wire_delay(lib.wire, r, 100e-6)

Author
----
xcmosbench developers

Dates
----
2026-10-16

References
----
Elmore delay of a distributed RC line driven through n equal repeater
stages: 0.7 for the lumped driver terms, 0.4 for the distributed
wire-wire term.

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
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar

from xcmosbench.base.devicelib import RepeaterParams
from xcmosbench.base.errors import InvalidParameterError

lgr = logging.getLogger(__name__)

# Elmore coefficients
DRIVER_COEFF = 0.7
WIRE_COEFF = 0.4

# search range of the repeater size, in log(s)
_LOG_SIZE_BOUNDS = (-40.0, 40.0)


def _check_length(l):
    if np.any(np.asarray(l) < 0):
        raise InvalidParameterError('Wire length must be nonnegative', gotStr=l,
                                    expStr='>= 0')


def wire_delay_slope(w, r):
    """
    Delay per unit length (s/m) of an optimally repeated wire
    """
    rc = w.r_w * w.c_w
    R0C0 = r.R0 * r.C0
    return (
        1.4 * np.sqrt(R0C0 * rc)
        + 2 * np.sqrt((DRIVER_COEFF * R0C0 + r.t_p) * WIRE_COEFF * rc)
    )


def repeated_wire_delay(w, r, l):
    """
    Delay of an optimally repeated wire of length l:

      t = 1.4*sqrt(R0*C0*r_w*c_w)*l + 2*sqrt((0.7*R0*C0 + t_p)*0.4*r_w*c_w)*l

    Parameters
    ----------
    w : WireParams
    r : RepeaterParams
    l : float or np.ndarray
        wire length (m)

    Returns
    -------
    t : float or np.ndarray
        delay (s)
    """
    _check_length(l)
    return wire_delay_slope(w, r) * l


def repeater_energy_share(r):
    """
    Repeater-charging energy as a fraction of the wire-charging energy.
    It vanishes for slow (t_p >> R0*C0) repeaters, which are inserted
    sparsely.
    """
    R0C0 = r.R0 * r.C0
    return float(np.sqrt(WIRE_COEFF * R0C0 / (DRIVER_COEFF * R0C0 + r.t_p)))


def repeated_wire_energy(w, r, l):
    """
    Switching energy of an optimally repeated wire of length l:

      E = 1/2 * c_w * l * (1 + sqrt(0.4*R0*C0 / (0.7*R0*C0 + t_p))) * V_dd^2

    Returns
    -------
    E : float or np.ndarray
        energy (J)
    """
    _check_length(l)
    return 0.5 * w.c_w * l * (1 + repeater_energy_share(r)) * r.V_dd ** 2


def repeated_wire_energy_split(w, r, l):
    """
    Returns (wire-charging energy, repeater-charging energy), which add up
    to repeated_wire_energy(w, r, l)
    """
    _check_length(l)
    E_wire = 0.5 * w.c_w * l * r.V_dd ** 2
    return E_wire, E_wire * repeater_energy_share(r)


def elmore_repeated_delay(w, r, l, n, s):
    """
    Elmore delay of a wire of length l cut into n equal segments, each
    driven by a repeater s times the minimum size
    """
    h = l / n
    return n * (
        DRIVER_COEFF * (r.R0 / s) * (s * r.C0 + w.c_w * h)
        + w.r_w * h * (WIRE_COEFF * w.c_w * h + DRIVER_COEFF * s * r.C0)
    )


def repeater_oracle_minimize(w, r, l):
    """
    Brute-force optimal repeater insertion: minimizes the Elmore delay of
    the repeated wire over the integer number of segments n >= 1 and the
    real repeater size s > 0.

    For a given n the delay is convex in log(s), so s is found with a
    bounded Brent search; the best delay is convex in n, so n is found by
    doubling up to a bracket and then an integer ternary search.  Only
    repeaters with t_p = 0 are handled: the polarization delay is not part
    of the Elmore model.

    Parameters
    ----------
    w : WireParams
    r : RepeaterParams
    l : float
        wire length (m), > 0

    Returns
    -------
    n_opt : int
    s_opt : float
    t_opt : float
        delay (s)
    """
    if not l > 0:
        raise InvalidParameterError('Wire length must be positive', gotStr=l, expStr='> 0')
    if r.t_p != 0:
        lgr.warning('Warning: the Elmore repeater model ignores t_p = {t:g} s'.format(t=r.t_p))

    @lru_cache(maxsize=None)
    def best_size(n):
        res = minimize_scalar(
            lambda u: elmore_repeated_delay(w, r, l, n, np.exp(u)),
            bounds=_LOG_SIZE_BOUNDS,
            method='bounded',
            options={'xatol': 1e-9}
        )
        return float(np.exp(res.x)), float(res.fun)

    def delay(n):
        return best_size(n)[1]

    # bracket the optimum:
    hi = 1
    while delay(2 * hi) < delay(hi):
        hi *= 2
    lo, hi = max(1, hi // 2), 2 * hi

    # integer ternary search on the convex delay(n):
    while hi - lo > 2:
        m1 = lo + (hi - lo) // 3
        m2 = hi - (hi - lo) // 3
        if delay(m1) <= delay(m2):
            hi = m2
        else:
            lo = m1
    n_opt = min(range(lo, hi + 1), key=delay)
    s_opt, t_opt = best_size(n_opt)
    return n_opt, s_opt, t_opt


def repeater_params_for(dev):
    """
    Minimum repeater built from the device 'dev': R0 = V_dd/I_on,
    C0 = C_gate, and the device's polarization delay and supply
    """
    if not dev.I_on > 0:
        raise InvalidParameterError('Device %r has nonpositive I_on', dev.name)
    return RepeaterParams(
        R0=dev.V_dd / dev.I_on,
        C0=dev.C_gate,
        t_p=dev.t_p,
        V_dd=dev.V_dd
    )
