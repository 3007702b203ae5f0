"""   Tests for the module "spin.py"   """

import logging
import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from xcmosbench.base.constants import (K_B,
                                       MU_B,
                                       Q_E)
from xcmosbench.base.devicelib import (DeviceParams,
                                       MagnetParams,
                                       SpinChannelParams)
from xcmosbench.base.enums import (CslVariant,
                                   DeviceClass,
                                   GateKind)
from xcmosbench.base.errors import (ClassMismatchError,
                                    DegenerateGeometryError,
                                    InvalidParameterError,
                                    NoMotionError,
                                    NoSwitchingError,
                                    ThermalStabilityError)
from xcmosbench.devices.spin import (asl_gate_metrics,
                                     asl_spin_current_density,
                                     critical_spin_current,
                                     csl_drive_for_delay,
                                     csl_energy_at_delay,
                                     csl_gate_metrics,
                                     csl_magnet,
                                     csl_spin_current,
                                     domain_wall_transit_time,
                                     magnet_switching_delay,
                                     magnet_volume,
                                     mlogic_gate_metrics,
                                     n_bohr_magnetons,
                                     thermal_stability)

###   Globals   ###

NM = 1e-9
MAGNET_DIMS = (60 * NM, 30 * NM, 2 * NM)
MAGNET_VOLUME = 60 * 30 * 2 * NM ** 3

lengths = st.floats(min_value=20 * NM, max_value=1000 * NM)
diffusion_lengths = st.floats(min_value=50 * NM, max_value=2000 * NM)


def channel(l_c=100 * NM, l_g=100 * NM, l_sf=100 * NM, beta=0.8):
    return SpinChannelParams(beta=beta, l_sf=l_sf, l_c=l_c, l_g=l_g,
                             rho=1e-8, cross_section=1e-15)


###   Fixtures   ###

@pytest.fixture
def magnet():
    """   In-plane magnet, well above the thermal stability floor   """
    return MagnetParams(M_s=1e6, K_u=1e5, alpha=0.01, eta=0.8, dims=MAGNET_DIMS)


@pytest.fixture
def asl(magnet):
    return DeviceParams(
        name='test-ASL', device_class='ASL', V_dd=0.1, I_on=335e-6, I_off=0,
        C_gate=1e-17, A_dev=1e-15, magnet=magnet,
        channel=channel(l_sf=300 * NM)
    )


@pytest.fixture
def csl():
    return DeviceParams(
        name='test-CSL', device_class='CSL', V_dd=0.1, I_on=40e-6, I_off=0,
        C_gate=1e-17, A_dev=1e-15,
        magnet=MagnetParams(M_s=1.2e6, K_u=1.2e5, alpha=0.01, eta=0.8,
                            dims=(40 * NM, 20 * NM, 2 * NM)),
        channel=channel(),
        extras={'spin_hall_gain': 2.0, 'R_write': 1e3}
    )


@pytest.fixture
def mlogic():
    return DeviceParams(
        name='test-mLogic', device_class='mLogic', V_dd=0.1, I_on=300e-6, I_off=0,
        C_gate=1e-17, A_dev=1e-15,
        extras={'mu_dw': 1e-10, 'J_c0': 1e12, 'L_track': 100 * NM,
                'R_w': 500.0, 'track_cross_section': 1e-16}
    )


###   Tests   ###

def test_magnet_helpers(magnet):
    assert magnet_volume(magnet) == pytest.approx(MAGNET_VOLUME, rel=1e-12)
    assert thermal_stability(magnet) == pytest.approx(1e5 * MAGNET_VOLUME / (K_B * 300))
    # about 3.88e5 Bohr magnetons:
    assert n_bohr_magnetons(magnet) == pytest.approx(3.88e5, rel=1e-2)
    assert n_bohr_magnetons(magnet) == pytest.approx(1e6 * MAGNET_VOLUME / MU_B)


def test_critical_spin_current(caplog, magnet):
    # Delta = 40 exactly:
    m = magnet.replace(K_u=40 * K_B * 300 / MAGNET_VOLUME, eta=1.0)
    I_c = critical_spin_current(m)
    assert I_c == pytest.approx(10.1e-6, rel=5e-3)

    # eta halved -> I_c doubled
    assert critical_spin_current(m.replace(eta=0.5)) == pytest.approx(2 * I_c, rel=1e-12)

    # alpha = 0 -> I_c = 0, with a warning
    caplog.clear()
    with caplog.at_level(logging.WARNING):
        assert critical_spin_current(m.replace(alpha=0.0)) == 0
    assert 'Warning: ' in caplog.text
    assert 'alpha' in caplog.text

    # thermally unstable magnet:
    with pytest.raises(ThermalStabilityError):
        critical_spin_current(m.replace(K_u=m.K_u * 0.9))


def test_magnet_switching_delay(magnet):
    I_c = critical_spin_current(magnet)
    t_sw = magnet_switching_delay(magnet, I_c + 100e-6)
    assert t_sw == pytest.approx(0.62e-9, rel=5e-3)
    assert t_sw == pytest.approx(Q_E * n_bohr_magnetons(magnet) / 100e-6, rel=1e-9)

    # subcritical drive:
    for I_s in [0, I_c / 2, I_c]:
        with pytest.raises(NoSwitchingError):
            magnet_switching_delay(magnet, I_s)

    # just above threshold the delay is beyond the cap:
    I_slow = I_c + Q_E * n_bohr_magnetons(magnet) / 2e-3
    with pytest.raises(NoSwitchingError) as e_info:
        magnet_switching_delay(magnet, I_slow)
    assert 'cap' in str(e_info.value)
    # ... unless the cap is raised:
    assert magnet_switching_delay(magnet, I_slow, t_cap=1.0) == pytest.approx(2e-3, rel=1e-6)


def test_switching_delay_scales_with_volume(magnet):
    """   Halving the volume at fixed I_s - I_c halves the delay   """
    half = magnet.replace(dims=(30 * NM, 30 * NM, 2 * NM), K_u=4e5)
    dI = 50e-6
    t_full = magnet_switching_delay(magnet, critical_spin_current(magnet) + dI)
    t_half = magnet_switching_delay(half, critical_spin_current(half) + dI)
    assert t_half == pytest.approx(t_full / 2, rel=1e-9)


@given(dI=st.floats(min_value=1e-6, max_value=1e-3),
       extra=st.floats(min_value=1e-7, max_value=1e-3))
def test_switching_delay_decreases_with_current(dI, extra):
    m = MagnetParams(M_s=1e6, K_u=1e5, alpha=0.01, eta=0.8, dims=MAGNET_DIMS)
    I_c = critical_spin_current(m)
    assert magnet_switching_delay(m, I_c + dI + extra) < magnet_switching_delay(m, I_c + dI)


def test_asl_spin_current_density():
    # numerical example: denominator = sinh(1)coth(1) + cosh(1) = 2 cosh(1)
    J_s = asl_spin_current_density(channel(), 1e10)
    assert J_s == pytest.approx(0.8e10 / (2 * math.cosh(1)), rel=1e-12)
    assert J_s == pytest.approx(2.59e9, rel=1e-3)

    # l_c -> 0: all the injected spin current reaches the output
    assert asl_spin_current_density(channel(l_c=0.0), 1e10) == 0.8 * 1e10

    # very long diffusion length: the current splits as a resistive divider
    ch = channel(l_c=100 * NM, l_g=200 * NM, l_sf=1e4 * 100 * NM)
    assert asl_spin_current_density(ch, 1e10) == pytest.approx(0.8e10 / 1.5, rel=1e-3)

    # arrays are evaluated elementwise:
    J_c = np.array([0, 1e9, 1e10])
    np.testing.assert_allclose(asl_spin_current_density(channel(), J_c),
                               J_c * J_s / 1e10, rtol=1e-12)

    # zero injected current, no spin current
    assert asl_spin_current_density(channel(), 0) == 0


def test_asl_spin_current_density_errors():
    with pytest.raises(DegenerateGeometryError):
        asl_spin_current_density(channel(l_g=0.0), 1e10)
    with pytest.raises(InvalidParameterError):
        asl_spin_current_density(channel(), -1.0)


@given(l_c=lengths, l_g=lengths, l_sf=diffusion_lengths,
       beta=st.floats(min_value=0.05, max_value=1.0))
def test_spin_current_bounds(l_c, l_g, l_sf, beta):
    J_c = 1e10
    J_s = asl_spin_current_density(channel(l_c, l_g, l_sf, beta), J_c)
    assert 0 <= J_s <= beta * J_c


@given(l_c=lengths, l_g=lengths, l_sf=diffusion_lengths)
def test_spin_current_monotonicity(l_c, l_g, l_sf):
    """
    The received spin current decreases with the channel length and
    increases with the diffusion and ground-path lengths
    """
    J_s = asl_spin_current_density(channel(l_c, l_g, l_sf), 1e10)
    assert asl_spin_current_density(channel(1.1 * l_c, l_g, l_sf), 1e10) < J_s
    assert asl_spin_current_density(channel(l_c, l_g, 1.1 * l_sf), 1e10) > J_s
    # (far beyond l_sf the ground branch looks infinitely long)
    assume(1.1 * l_g <= 5 * l_sf)
    assert asl_spin_current_density(channel(l_c, 1.1 * l_g, l_sf), 1e10) > J_s


def test_asl_gate_metrics(asl):
    g = asl_gate_metrics(asl)
    assert g.kind == GateKind.MAJ3
    assert g.t_gate == pytest.approx(0.62e-9, rel=2e-2)
    assert g.E_dyn == pytest.approx(asl.I_on * asl.V_dd * g.t_gate, rel=1e-12)
    assert g.P_leak == 0
    assert g.A_gate == asl.A_dev

    # not enough current to switch:
    with pytest.raises(NoSwitchingError) as e_info:
        asl_gate_metrics(asl.replace(I_on=50e-6))
    assert 'test-ASL' in str(e_info.value)

    with pytest.raises(ClassMismatchError):
        asl_gate_metrics(asl.replace(device_class=DeviceClass.CSL))


def test_csl_variant_ordering(csl):
    delays = {v: csl_gate_metrics(csl, v).t_gate for v in CslVariant}
    assert delays[CslVariant.YIG] < delays[CslVariant.CopperCollector] < delays[CslVariant.Base]
    # the device's own variant is used by default:
    assert csl_gate_metrics(csl) == csl_gate_metrics(csl, CslVariant.Base)


@given(I_drive=st.floats(min_value=30e-6, max_value=1e-3))
def test_csl_variant_ordering_any_drive(I_drive):
    """   Any drive for which the Base variant switches   """
    dev = DeviceParams(
        name='test-CSL', device_class='CSL', V_dd=0.1, I_on=40e-6, I_off=0,
        C_gate=1e-17, A_dev=1e-15,
        magnet=MagnetParams(M_s=1.2e6, K_u=1.2e5, alpha=0.01, eta=0.8,
                            dims=(40 * NM, 20 * NM, 2 * NM)),
        channel=channel(),
        extras={'spin_hall_gain': 2.0, 'R_write': 1e3}
    )
    t = [csl_gate_metrics(dev, v, I_drive=I_drive).t_gate
         for v in ['YIG', 'CopperCollector', 'Base']]
    assert t[0] < t[1] < t[2]


def test_csl_threshold(csl):
    """
    Base spin current exactly at the critical current: only the variants
    with extra spin injection switch
    """
    I_c = critical_spin_current(csl_magnet(csl, 'Base'))
    I_drive = I_c / 2     # spin_hall_gain = 2
    assert csl_spin_current(csl, 'Base', I_drive) == I_c
    with pytest.raises(NoSwitchingError) as e_info:
        csl_gate_metrics(csl, 'Base', I_drive=I_drive)
    assert 'Base' in str(e_info.value)
    assert csl_gate_metrics(csl, 'CopperCollector', I_drive=I_drive).t_gate > 0


def test_csl_magnet_and_area(csl):
    assert csl_magnet(csl, 'Base').volume == pytest.approx(3 * csl.magnet.volume)
    assert csl_magnet(csl, 'YIG') == csl.magnet
    assert csl_gate_metrics(csl, 'Complementary').A_gate == pytest.approx(1.5 * csl.A_dev)
    assert csl_gate_metrics(csl, 'YIG').A_gate == csl.A_dev


def test_csl_energy(csl):
    g = csl_gate_metrics(csl, 'CopperCollector')
    expected = csl.I_on ** 2 * 1e3 * g.t_gate + csl.C_gate * csl.V_dd ** 2
    assert g.E_dyn == pytest.approx(expected, rel=1e-12)

    # R_write defaults to the channel resistance:
    no_r = csl.replace(extras={'spin_hall_gain': 2.0})
    g = csl_gate_metrics(no_r, 'CopperCollector')
    expected = csl.I_on ** 2 * csl.channel.resistance * g.t_gate + csl.C_gate * csl.V_dd ** 2
    assert g.E_dyn == pytest.approx(expected, rel=1e-12)

    # the spin-Hall gain is required:
    with pytest.raises(InvalidParameterError):
        csl_gate_metrics(csl.replace(extras={}), 'Base')


def test_csl_equal_delay(csl):
    t_target = 1e-9
    for variant in CslVariant:
        I_drive = csl_drive_for_delay(csl, variant, t_target)
        g = csl_gate_metrics(csl, variant, I_drive=I_drive)
        assert g.t_gate == pytest.approx(t_target, rel=1e-9)
        assert csl_energy_at_delay(csl, variant, t_target) == pytest.approx(g.E_dyn, rel=1e-9)

    assert csl_energy_at_delay(csl, 'YIG', t_target) < csl_energy_at_delay(csl, 'Base', t_target)

    with pytest.raises(InvalidParameterError):
        csl_drive_for_delay(csl, 'Base', 0)


def test_mlogic_gate_metrics(mlogic):
    # J = 2 J_c0 and mu_dw*J_c0 = 100 m/s -> v = 100 m/s, 100 nm in 1 ns
    g = mlogic_gate_metrics(mlogic, J=2e12)
    assert g.t_gate == pytest.approx(1e-9, rel=1e-12)

    longer = mlogic.replace(extras=dict(mlogic.extras, L_track=200 * NM))
    assert mlogic_gate_metrics(longer, J=2e12).t_gate == pytest.approx(2e-9, rel=1e-12)

    with pytest.raises(NoMotionError):
        mlogic_gate_metrics(mlogic, J=1e12)

    # default drive: I_on through the track (J = 3 J_c0 -> 200 m/s)
    g = mlogic_gate_metrics(mlogic)
    assert g.t_gate == pytest.approx(0.5e-9, rel=1e-12)
    expected = mlogic.I_on ** 2 * 500 * g.t_gate + mlogic.C_gate * mlogic.V_dd ** 2
    assert g.E_dyn == pytest.approx(expected, rel=1e-12)
    assert domain_wall_transit_time(mlogic) == g.t_gate
    assert domain_wall_transit_time(mlogic, I_write=200e-6) == pytest.approx(1e-9, rel=1e-12)

    with pytest.raises(InvalidParameterError):
        mlogic_gate_metrics(mlogic.replace(extras={}))
