"""
Finite-difference solution of the 1D spin diffusion equation in an ASL
channel, used to check the closed-form spin current.

Geometry: the ground branch spans [-l_g, 0], the channel spans [0, l_c].
Spin is injected at x = 0 (spin current beta*J_c), the far end of the
ground branch is grounded and the output magnet at x = l_c is an ideal
absorber, so the spin accumulation mu vanishes at both ends.  In between

    mu'' = mu / l_sf^2

and the received spin current density is -mu'(l_c).
"""

import numpy as np
from scipy.linalg import solve_banded

from xcmosbench.base.errors import (DegenerateGeometryError,
                                    InvalidParameterError)


def solve_spin_diffusion_fd(ch, J_c, n_points=10**4):
    """
    Spin current density (A/m^2) received at the output magnet, from a
    finite-difference solution on 'n_points' intervals.

    Parameters
    ----------
    ch : SpinChannelParams
    J_c : float
        charge current density at the injector (A/m^2)
    n_points : int
        number of grid intervals, split between the ground branch and the
        channel in proportion to their lengths

    Returns
    -------
    J_s : float
    """
    if not ch.l_g > 0 or not ch.l_c > 0:
        raise DegenerateGeometryError(
            'Both the channel and the ground branch must have a positive length',
            expStr='l_c > 0 and l_g > 0', gotStr=(ch.l_c, ch.l_g)
        )
    if n_points < 4:
        raise InvalidParameterError('Too few grid points', expStr='>= 4', gotStr=n_points)

    n_g = int(round(n_points * ch.l_g / (ch.l_g + ch.l_c)))
    n_g = min(max(n_g, 2), n_points - 2)
    n_c = n_points - n_g
    h_g = ch.l_g / n_g
    h_c = ch.l_c / n_c
    lam2 = ch.l_sf ** 2

    # unknowns: nodes 1 .. n_points-1 (node 0 and node n_points are grounded);
    # the injector is node n_g, i.e. unknown n_g-1
    n_unknowns = n_points - 1
    k = n_g - 1

    diag = np.empty(n_unknowns)
    diag[:k] = -(2 + h_g ** 2 / lam2)
    diag[k + 1:] = -(2 + h_c ** 2 / lam2)
    # half cells on each side of the injector
    diag[k] = -(1 / h_c + 1 / h_g + (h_c + h_g) / (2 * lam2))

    upper = np.ones(n_unknowns)
    upper[k] = 1 / h_c
    lower = np.ones(n_unknowns)
    lower[k] = 1 / h_g

    ab = np.zeros((3, n_unknowns))
    ab[0, 1:] = upper[:-1]
    ab[1, :] = diag
    ab[2, :-1] = lower[1:]

    # the problem is linear in the source: solve for a unit injected current
    rhs = np.zeros(n_unknowns)
    rhs[k] = -1.0
    mu = solve_banded((1, 1), ab, rhs)

    return ch.beta * float(J_c) * mu[-1] / h_c
