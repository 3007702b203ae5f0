"""   Tests for the module "diffusion.py"   """

import numpy as np
import pytest

from xcmosbench.base.devicelib import SpinChannelParams
from xcmosbench.base.errors import DegenerateGeometryError
from xcmosbench.devices.diffusion import solve_spin_diffusion_fd
from xcmosbench.devices.spin import asl_spin_current_density

###   Globals   ###

NM = 1e-9
J_C = 1e10          # A/m^2
N_TUPLES = 50
SEED = 20261016


def channel(l_c, l_g, l_sf, beta=0.8):
    return SpinChannelParams(beta=beta, l_sf=l_sf, l_c=l_c, l_g=l_g,
                             rho=1e-8, cross_section=1e-15)


###   Tests   ###

def test_fd_matches_closed_form():
    """
    Closed-form spin current within 1% of the finite-difference solution
    (10^4 grid points) for random geometries
    """
    rng = np.random.default_rng(SEED)
    l_c = rng.uniform(20 * NM, 1000 * NM, N_TUPLES)
    l_g = rng.uniform(20 * NM, 1000 * NM, N_TUPLES)
    l_sf = rng.uniform(50 * NM, 2000 * NM, N_TUPLES)

    for i in range(N_TUPLES):
        ch = channel(l_c[i], l_g[i], l_sf[i])
        fd = solve_spin_diffusion_fd(ch, J_C, n_points=10**4)
        analytic = asl_spin_current_density(ch, J_C)
        np.testing.assert_allclose(fd, analytic, rtol=1e-2)


def test_fd_limits():
    # long diffusion length: resistive divider between channel and ground
    ch = channel(100 * NM, 200 * NM, 1e4 * 100 * NM)
    fd = solve_spin_diffusion_fd(ch, J_C)
    assert fd == pytest.approx(0.8 * J_C / 1.5, rel=1e-3)

    # very short channel: (almost) all the spin current gets through
    ch = channel(1e-4 * NM, 100 * NM, 100 * NM)
    fd = solve_spin_diffusion_fd(ch, J_C)
    assert fd == pytest.approx(0.8 * J_C, rel=1e-3)


def test_fd_is_linear_in_the_injected_current():
    ch = channel(300 * NM, 100 * NM, 200 * NM)
    assert solve_spin_diffusion_fd(ch, 2 * J_C) == pytest.approx(
        2 * solve_spin_diffusion_fd(ch, J_C), rel=1e-12)
    assert solve_spin_diffusion_fd(ch, 0) == 0


def test_fd_errors():
    with pytest.raises(DegenerateGeometryError):
        solve_spin_diffusion_fd(channel(100 * NM, 0, 100 * NM), J_C)
    with pytest.raises(DegenerateGeometryError):
        solve_spin_diffusion_fd(channel(0, 100 * NM, 100 * NM), J_C)
