import math

import numpy as np
import pytest

from aerodstt.propagation import (
    DynamicsSystem,
    IntegratorConfig,
    IntervalMismatchError,
    SttSet,
    aero_system,
    compose_chain,
    compose_stts,
    flow_nd,
    integrate_stt_nd,
    integrate_stts,
    integrate_trajectory,
    load_stts,
    propagate_perturbation_stt,
    save_stts,
    symmetrize_trailing,
)
from aerodstt.models import NONDIMENSIONAL, StateVector


def zero_system(n=3):
    return DynamicsSystem(
        n=n,
        rhs=lambda x: np.zeros(n),
        partials=lambda x, order: (
            np.zeros((n, n)),
            np.zeros((n, n, n)) if order >= 2 else None,
            np.zeros((n, n, n, n)) if order >= 3 else None,
        ),
    )


def toy_system():
    """3-state polynomial dynamics with hand-coded partials."""
    n = 3

    def rhs(x):
        return np.array([x[1], -x[0] + 0.3 * x[0] * x[0], 0.2 * x[0] * x[1] * x[2]])

    def partials(x, order):
        A = np.array(
            [
                [0.0, 1.0, 0.0],
                [-1.0 + 0.6 * x[0], 0.0, 0.0],
                [0.2 * x[1] * x[2], 0.2 * x[0] * x[2], 0.2 * x[0] * x[1]],
            ]
        )
        B = np.zeros((n, n, n))
        if order >= 2:
            B[1, 0, 0] = 0.6
            B[2, 0, 1] = B[2, 1, 0] = 0.2 * x[2]
            B[2, 0, 2] = B[2, 2, 0] = 0.2 * x[1]
            B[2, 1, 2] = B[2, 2, 1] = 0.2 * x[0]
        C = np.zeros((n, n, n, n))
        if order >= 3:
            for p in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
                C[(2,) + p] = 0.2
        return A, (B if order >= 2 else None), (C if order >= 3 else None)

    return DynamicsSystem(n=n, rhs=rhs, partials=partials)


# ---------------------------------------------------------------------------
# variational integration


def test_zero_dynamics_gives_identity_stt():
    stt, x_end = integrate_stt_nd(np.array([1.0, 2.0, 3.0]), (0.0, 1.0), zero_system(), 3)
    assert np.array_equal(stt.phi1, np.eye(3))
    assert not stt.phi2.any()
    assert not stt.phi3.any()
    assert np.array_equal(x_end, [1.0, 2.0, 3.0])


def test_degenerate_interval_is_identity():
    stt, _ = integrate_stt_nd(np.array([0.4, 0.1, -0.2]), (0.5, 0.5), toy_system(), 3)
    assert np.array_equal(stt.phi1, np.eye(3))
    assert not stt.phi2.any() and not stt.phi3.any()


def test_phi1_matches_flow_differences(ctx):
    # one grid interval against column-wise flow differences
    grid, stts = ctx.grid_and_stts()
    k = 25
    stt = stts[k]
    x0 = grid.states[k]
    h = 1e-7
    fd = np.zeros((7, 7))
    for a in range(7):
        xp, xm = x0.copy(), x0.copy()
        xp[a] += h
        xm[a] -= h
        fp = flow_nd(xp, (stt.t_from, stt.t_to), ctx.system).y[:, -1]
        fm = flow_nd(xm, (stt.t_from, stt.t_to), ctx.system).y[:, -1]
        fd[:, a] = (fp - fm) / (2.0 * h)
    assert np.max(np.abs(stt.phi1 - fd)) / np.max(np.abs(fd)) < 1e-4


def test_phi2_matches_phi1_differences(ctx):
    # second-order tensor against differences of the first-order one
    grid, stts = ctx.grid_and_stts()
    k = 25
    stt = stts[k]
    x0 = grid.states[k]
    h = 1e-6
    fd = np.zeros((7, 7, 7))
    for a in range(7):
        xp, xm = x0.copy(), x0.copy()
        xp[a] += h
        xm[a] -= h
        sp, _ = integrate_stt_nd(xp, (stt.t_from, stt.t_to), ctx.system, 1)
        sm, _ = integrate_stt_nd(xm, (stt.t_from, stt.t_to), ctx.system, 1)
        fd[:, :, a] = (sp.phi1 - sm.phi1) / (2.0 * h)
    fd = symmetrize_trailing(fd)
    assert np.max(np.abs(stt.phi2 - fd)) / np.max(np.abs(fd)) < 1e-3


# ---------------------------------------------------------------------------
# composition


def test_compose_with_identity():
    sys = toy_system()
    stt, _ = integrate_stt_nd(np.array([0.4, 0.1, -0.2]), (0.0, 0.8), sys, 3)
    left = compose_stts(SttSet.identity(0.0, 3), stt)
    right = compose_stts(stt, SttSet.identity(0.8, 3))
    for combined in (left, right):
        assert np.allclose(combined.phi1, stt.phi1, atol=1e-15)
        assert np.allclose(combined.phi2, stt.phi2, atol=1e-15)
        assert np.allclose(combined.phi3, stt.phi3, atol=1e-15)


def test_compose_matches_direct_integration():
    sys = toy_system()
    x0 = np.array([0.4, 0.1, -0.2])
    s01, x1 = integrate_stt_nd(x0, (0.0, 0.6), sys, 3)
    s12, _ = integrate_stt_nd(x1, (0.6, 1.2), sys, 3)
    direct, _ = integrate_stt_nd(x0, (0.0, 1.2), sys, 3)
    comp = compose_stts(s01, s12)
    for a, b in ((comp.phi1, direct.phi1), (comp.phi2, direct.phi2), (comp.phi3, direct.phi3)):
        assert np.linalg.norm((a - b).ravel()) / np.linalg.norm(b.ravel()) < 1e-8


def test_compose_order1_is_matrix_product():
    sys = toy_system()
    x0 = np.array([0.4, 0.1, -0.2])
    s01, x1 = integrate_stt_nd(x0, (0.0, 0.5), sys, 1)
    s12, _ = integrate_stt_nd(x1, (0.5, 1.0), sys, 1)
    comp = compose_stts(s01, s12)
    assert np.allclose(comp.phi1, s12.phi1 @ s01.phi1, atol=1e-15)
    assert comp.phi2 is None


def test_compose_rejects_interval_mismatch():
    a = SttSet.identity(0.0, 3)
    b = SttSet.identity(1.0, 3)
    with pytest.raises(IntervalMismatchError):
        compose_stts(a, b)


def test_composition_associativity(ctx):
    stts = ctx.stts[:3]
    left = compose_stts(compose_stts(stts[0], stts[1]), stts[2])
    right = compose_stts(stts[0], compose_stts(stts[1], stts[2]))
    for a, b in ((left.phi1, right.phi1), (left.phi2, right.phi2), (left.phi3, right.phi3)):
        assert np.linalg.norm((a - b).ravel()) / np.linalg.norm(b.ravel()) < 1e-10


# ---------------------------------------------------------------------------
# perturbation propagation


def test_propagate_zero_perturbation(ctx):
    out = propagate_perturbation_stt(ctx.full_span_stt, np.zeros(7))
    assert np.array_equal(out, np.zeros(7))


def test_propagate_first_order_is_stm(ctx, rng):
    stt = ctx.full_span_stt
    dx = 1e-5 * rng.standard_normal(7)
    assert np.array_equal(propagate_perturbation_stt(stt, dx, 1), stt.phi1 @ dx)


def test_propagate_rejects_excess_order(ctx):
    grid, stts = ctx.grid_and_stts("conservative", order=1)
    with pytest.raises(ValueError):
        propagate_perturbation_stt(stts[0], np.zeros(7), 2)


def test_taylor_remainder_ordering(ctx):
    # fixed small perturbation: each added order tightens the prediction
    dx = np.full(7, 3e-5 / math.sqrt(7.0))
    truth = flow_nd(
        ctx.x0_nd + dx, (0.0, ctx.t_final_nd), ctx.system, IntegratorConfig(1e-13, 1e-13)
    ).y[:, -1]
    errs = [
        np.linalg.norm(ctx.xf_nd + propagate_perturbation_stt(ctx.full_span_stt, dx, m) - truth)
        for m in (1, 2, 3)
    ]
    assert errs[0] > errs[1] > errs[2]


# ---------------------------------------------------------------------------
# trajectory-level behavior


def test_vacuum_circular_orbit_radius_constant(vacuum_models):
    sc = vacuum_models.scales
    r_nd = 1.1
    v_circ = math.sqrt(1.0 / r_nd)
    x0 = StateVector(
        r_nd * sc.length_ref, 0.0, 0.1, v_circ * sc.speed_ref, 0.0, 1.0, -23.0
    )
    period_s = 2.0 * math.pi * math.sqrt(r_nd**3) * sc.time_ref
    grid = integrate_trajectory(
        x0, (0.0, period_s), vacuum_models, dt_grid_s=period_s / 50.0
    )
    assert np.max(np.abs(grid.states[:, 0] - r_nd)) / r_nd < 1e-9


def test_reference_loses_energy(ctx):
    from aerodstt.qoi import specific_energy

    e0 = specific_energy(StateVector.from_array(ctx.grid.states[0], frame=NONDIMENSIONAL), ctx.models)
    ef = specific_energy(StateVector.from_array(ctx.grid.states[-1], frame=NONDIMENSIONAL), ctx.models)
    assert ef < e0


def test_tolerance_self_convergence(ctx, entry_state):
    loose = integrate_trajectory(
        entry_state, (0.0, 780.0), ctx.models, IntegratorConfig(rtol=1e-9, atol=1e-9)
    )
    tight = integrate_trajectory(
        entry_state, (0.0, 780.0), ctx.models, IntegratorConfig(rtol=4.5e-10, atol=4.5e-10)
    )
    diff = np.max(np.abs(loose.states[-1] - tight.states[-1]))
    assert diff < 10.0 * 1e-9 * np.max(np.abs(tight.states[-1]))


def test_grid_covers_span(ctx):
    grid = ctx.grid
    assert grid.times[0] == 0.0
    assert grid.times[-1] == pytest.approx(ctx.t_final_nd, rel=1e-15)
    assert grid.n_intervals == 78


# ---------------------------------------------------------------------------
# serialization


def test_sttset_roundtrip(ctx, tmp_path):
    stts = ctx.stts[:2]
    path = tmp_path / "stts.json"
    save_stts(path, stts, meta={"note": "test"})
    loaded, meta = load_stts(path)
    assert meta["note"] == "test"
    for a, b in zip(stts, loaded):
        assert a.t_from == b.t_from and a.t_to == b.t_to and a.order == b.order
        assert np.array_equal(a.phi1, b.phi1)
        assert np.array_equal(a.phi2, b.phi2)
        assert np.array_equal(a.phi3, b.phi3)
