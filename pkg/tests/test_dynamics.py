import math
from dataclasses import replace

import numpy as np
import pytest

from aerodstt import dynamics as dyn
from aerodstt.models import (
    DynamicsDomainError,
    ModelSet,
    NONDIMENSIONAL,
    StateVector,
    default_models,
)
from aerodstt.propagation import IntegratorConfig, aero_system, flow_nd
from aerodstt.qoi import specific_energy


def nd_state(r=1.05, theta=0.3, phi=-0.17, V=1.5, gamma=-0.2, psi=0.8, zeta=-1.166):
    return StateVector(r, theta, phi, V, gamma, psi, zeta, frame=NONDIMENSIONAL)


# ---------------------------------------------------------------------------
# gravity


def test_gravity_point_mass(models):
    planet = replace(models.planet, J2=0.0)
    g_r, g_phi = dyn.gravity(3.0e7, 0.4, planet)
    assert g_phi == 0.0
    assert g_r == pytest.approx(planet.mu / 3.0e7**2, rel=1e-15)


def test_gravity_equator(models):
    p = models.planet
    g_r, g_phi = dyn.gravity(p.Rp * 1.1, 0.0, p)
    assert g_phi == 0.0
    expected = p.mu / (p.Rp * 1.1) ** 2 * (1.0 + 1.5 * p.J2 / 1.1**2)
    assert g_r == pytest.approx(expected, rel=1e-14)


def test_gravity_pole(models):
    p = models.planet
    g_r, g_phi = dyn.gravity(p.Rp * 1.2, math.pi / 2, p)
    assert abs(g_phi) < 1e-18 * g_r
    expected = p.mu / (p.Rp * 1.2) ** 2 * (1.0 - 3.0 * p.J2 / 1.2**2)
    assert g_r == pytest.approx(expected, rel=1e-14)


def test_gravity_rejects_nonpositive_radius(models):
    with pytest.raises(DynamicsDomainError):
        dyn.gravity(-1.0, 0.0, models.planet)


# ---------------------------------------------------------------------------
# atmosphere and aero accelerations


def test_density_reference_value(models):
    # rho0 at the reference height
    assert dyn.density(0.0, models.atmosphere) == pytest.approx(6.40e-3, rel=1e-12)


def test_density_one_scale_height(models):
    atmo = models.atmosphere
    assert dyn.density(atmo.h0 + atmo.H, atmo) == pytest.approx(
        atmo.rho0 / math.e, rel=1e-14
    )


def test_density_half(models):
    atmo = models.atmosphere
    assert dyn.density(atmo.h0 + atmo.H * math.log(2.0), atmo) == pytest.approx(
        atmo.rho0 / 2.0, rel=1e-14
    )


def test_aero_accels_disabled(models):
    atmo = replace(models.atmosphere, enabled=False)
    assert dyn.aero_accels(-5.0, 1e4, models.vehicle, atmo) == (0.0, 0.0)


def test_aero_lift_drag_ratio(models):
    lift, drag = dyn.aero_accels(-8.0, 1.2e4, models.vehicle, models.atmosphere)
    assert lift / drag == pytest.approx(0.25, rel=1e-15)


def test_aero_linear_in_density(models):
    # doubling rho means adding ln 2 to zeta
    l1, d1 = dyn.aero_accels(-8.0, 1.2e4, models.vehicle, models.atmosphere)
    l2, d2 = dyn.aero_accels(-8.0 + math.log(2.0), 1.2e4, models.vehicle, models.atmosphere)
    assert l2 == pytest.approx(2.0 * l1, rel=1e-12)
    assert d2 == pytest.approx(2.0 * d1, rel=1e-12)


# ---------------------------------------------------------------------------
# equations of motion


def test_eom_circular_vacuum_orbit(vacuum_models):
    # V^2/r balances gravity: no radial, speed, or path-angle rate
    r = 1.05
    x = nd_state(r=r, phi=0.2, V=math.sqrt(1.0 / r), gamma=0.0)
    dx = dyn.eom(x, vacuum_models)
    assert abs(dx[0]) < 1e-15
    assert abs(dx[3]) < 1e-15
    assert abs(dx[4]) < 1e-15


def test_eom_vertical_dive():
    m = default_models()
    x = nd_state(gamma=-math.pi / 2)
    dx = dyn.eom(x, m)
    assert dx[0] == pytest.approx(-x.V, rel=1e-15)


def test_eom_matches_integrated_flow_derivative(models, entry_state):
    # centered difference of the integrated flow at t = 0
    sys = aero_system(models)
    x0 = entry_state.nondimensionalized(models.scales).to_array()
    f = dyn.eom(entry_state.nondimensionalized(models.scales), models)
    dt = 1e-6
    cfg = IntegratorConfig(rtol=1e-13, atol=1e-13)
    xp = flow_nd(x0, (0.0, dt), sys, cfg).y[:, -1]
    xm = flow_nd(x0, (0.0, -dt), sys, cfg).y[:, -1]
    fd = (xp - xm) / (2.0 * dt)
    assert np.max(np.abs(f - fd)) / np.max(np.abs(fd)) < 1e-8


def test_eom_rejects_zero_speed(models):
    with pytest.raises(DynamicsDomainError):
        dyn.eom(nd_state(V=1e-15), models)


def test_eom_rejects_polar_singularity(models):
    with pytest.raises(DynamicsDomainError):
        dyn.eom(nd_state(phi=math.pi / 2), models)


def test_dimensional_nondimensional_agreement(models, rng):
    # both frames express the same physics after unit conversion
    sc = models.scales
    factors = sc.state_factors()
    for _ in range(100):
        x_nd = np.array(
            [
                rng.uniform(1.0, 1.2),
                rng.uniform(-2.0, 2.0),
                rng.uniform(-1.2, 1.2),
                rng.uniform(0.3, 2.0),
                rng.uniform(-1.0, 1.0),
                rng.uniform(-2.0, 2.0),
                rng.uniform(-1.5, -0.5),
            ]
        )
        sv_nd = StateVector.from_array(x_nd, frame=NONDIMENSIONAL)
        sv_dim = sv_nd.redimensionalized(sc)
        d_nd = dyn.eom(sv_nd, models)
        d_dim = dyn.eom(sv_dim, models)
        back = d_dim / factors * sc.time_ref
        assert np.max(np.abs(back - d_nd)) / np.max(np.abs(d_nd)) < 1e-12


# ---------------------------------------------------------------------------
# conservative / dissipative split


def test_decompose_sums_exactly(models, rng):
    for _ in range(20):
        x = nd_state(
            r=rng.uniform(1.0, 1.1),
            phi=rng.uniform(-0.8, 0.8),
            V=rng.uniform(0.5, 1.8),
            gamma=rng.uniform(-0.6, 0.6),
            psi=rng.uniform(-2.0, 2.0),
            zeta=rng.uniform(-1.5, -0.4),
        )
        f_c, f_d = dyn.decompose_eom(x, models)
        f = dyn.eom(x, models)
        assert np.array_equal(f_c + f_d, f)


def test_decompose_vacuum_dissipative_rows(models):
    m = models.with_aero_disabled()
    _, f_d = dyn.decompose_eom(nd_state(), m)
    assert f_d[3] == 0.0 and f_d[4] == 0.0 and f_d[5] == 0.0
    # log-density kinematics stays in the dissipative component
    assert f_d[6] != 0.0


def test_decompose_conservative_zeta_row_zero(models, rng):
    for _ in range(20):
        x = nd_state(V=rng.uniform(0.5, 1.8), gamma=rng.uniform(-0.6, 0.6))
        f_c, _ = dyn.decompose_eom(x, models)
        assert f_c[6] == 0.0


# ---------------------------------------------------------------------------
# frame conversions


def test_inertial_relative_identity_without_rotation(models):
    planet = replace(models.planet, Omega=0.0)
    pos = (models.planet.Rp + 5e5, 0.1, -0.2)
    V, gamma = dyn.inertial_to_relative(2.2e4, -0.15, 0.7, pos, planet)
    assert V == pytest.approx(2.2e4, rel=1e-15)
    assert gamma == pytest.approx(-0.15, rel=1e-12)


def test_inertial_relative_roundtrip(models, rng):
    planet = models.planet
    for _ in range(50):
        pos = (planet.Rp * rng.uniform(1.0, 1.2), 0.0, rng.uniform(-1.2, 1.2))
        V = rng.uniform(5e3, 3e4)
        gamma = rng.uniform(-1.0, 1.0)
        psi = rng.uniform(-math.pi, math.pi)
        v_i, g_i, _ = dyn.relative_to_inertial(V, gamma, psi, pos, planet)
        V2, gamma2 = dyn.inertial_to_relative(v_i, g_i, psi, pos, planet)
        assert V2 == pytest.approx(V, rel=1e-12)
        assert gamma2 == pytest.approx(gamma, abs=1e-12)


def test_equatorial_due_east_flight(models):
    # independent vector-geometry oracle: at phi = 0, heading due east and
    # level flight, the atmosphere speed subtracts directly
    planet = models.planet
    r = 26_559_000.0
    v_inertial = 20_000.0
    atmosphere_speed = planet.Omega * r  # 2688.66... m/s at the equator
    V, gamma = dyn.inertial_to_relative(
        v_inertial, 0.0, math.pi / 2, (r, 0.0, 0.0), planet
    )
    assert V == pytest.approx(v_inertial - atmosphere_speed, rel=1e-14)
    assert gamma == pytest.approx(0.0, abs=1e-15)


def test_inertial_to_relative_rejects_degenerate(models):
    planet = models.planet
    r = planet.Rp
    w = planet.Omega * r
    # inertial speed below the atmosphere speed going due east: no solution
    with pytest.raises(DynamicsDomainError):
        dyn.inertial_to_relative(0.5 * w, 0.0, math.pi / 2, (r, 0.0, 0.0), planet)


# ---------------------------------------------------------------------------
# dynamic pressure and acceleration ratio


def test_dynamic_pressure_vacuum_is_zero(models):
    m = models.with_aero_disabled()
    assert dyn.dynamic_pressure(nd_state(), m) == 0.0
    assert dyn.accel_ratio(nd_state(), m) == 0.0


def test_dynamic_pressure_quadratic_in_speed(models):
    p1 = dyn.dynamic_pressure(nd_state(V=0.7), models)
    p2 = dyn.dynamic_pressure(nd_state(V=1.4), models)
    assert p2 == pytest.approx(4.0 * p1, rel=1e-12)


def test_accel_ratio_profile_crosses_one(ctx):
    # above 1 only inside the peak-pressure window, below at entry and exit
    ratios = np.array(
        [
            dyn.accel_ratio(StateVector.from_array(x, frame=NONDIMENSIONAL), ctx.models)
            for x in ctx.grid.states
        ]
    )
    assert ratios[0] < 1.0 and ratios[-1] < 1.0
    assert ratios.max() > 1.0


# ---------------------------------------------------------------------------
# vacuum energy conservation


def test_vacuum_energy_conservation(vacuum_models, entry_state):
    sc = vacuum_models.scales
    sys = aero_system(vacuum_models)
    x0 = entry_state.nondimensionalized(sc).to_array()
    t_eval = np.linspace(0.0, 780.0 / sc.time_ref, 40)
    sol = flow_nd(x0, (0.0, t_eval[-1]), sys, IntegratorConfig(), t_eval=t_eval)
    energies = [
        specific_energy(StateVector.from_array(sol.y[:, k], frame=NONDIMENSIONAL), vacuum_models)
        for k in range(sol.y.shape[1])
    ]
    assert np.max(np.abs(np.diff(energies))) / abs(energies[0]) < 1e-10
