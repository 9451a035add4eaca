"""Finite-difference validation of the generated closed-form partials.

The oracle differentiates the right-hand side directly (Richardson-
extrapolated central differences), fully independent of the generated
expressions.
"""

import numpy as np
import pytest

from aerodstt import dynamics as dyn
from aerodstt.models import NONDIMENSIONAL, StateVector
from aerodstt.partials import dynamics_partials, eval_partials

REL_TOL = {1: 1e-6, 2: 1e-5, 3: 1e-4}


def rhs_func(models, which):
    prm = dyn.build_params(models)
    core = {
        "full": dyn.eom_nd,
        "conservative": dyn.eom_cons_nd,
        "dissipative": dyn.eom_diss_nd,
    }[which]

    def f(x):
        out = np.empty(7)
        core(x, prm, out)
        return out

    return f


def fd_jacobian(f, x, h):
    J = np.zeros((7, 7))
    for a in range(7):
        xp, xm = x.copy(), x.copy()
        xp[a] += h
        xm[a] -= h
        J[:, a] = (f(xp) - f(xm)) / (2.0 * h)
    return J


def fd_hessian(f, x, h):
    H = np.zeros((7, 7, 7))
    for a in range(7):
        xp, xm = x.copy(), x.copy()
        xp[a] += h
        xm[a] -= h
        H[:, :, a] = (fd_jacobian(f, xp, h) - fd_jacobian(f, xm, h)) / (2.0 * h)
    return H


def fd_third(f, x, h):
    T = np.zeros((7, 7, 7, 7))
    for a in range(7):
        xp, xm = x.copy(), x.copy()
        xp[a] += h
        xm[a] -= h
        T[:, :, :, a] = (fd_hessian(f, xp, h) - fd_hessian(f, xm, h)) / (2.0 * h)
    return T


def richardson(g, h):
    return (4.0 * g(h / 2.0) - g(h)) / 3.0


def rel_err(a, b):
    return np.max(np.abs(a - b)) / max(1e-300, np.max(np.abs(b)))


@pytest.fixture(scope="module")
def reference_states(ctx):
    # entry state plus 20 states spread along the reference trajectory
    idx = np.linspace(0, len(ctx.grid.states) - 1, 20).astype(int)
    return [ctx.grid.states[i] for i in idx]


@pytest.mark.parametrize("which", ["full", "conservative", "dissipative"])
def test_partials_match_fd_at_entry(ctx, which):
    x = ctx.x0_nd
    f = rhs_func(ctx.models, which)
    prm = dyn.build_params(ctx.models)
    A, B, C = eval_partials(x, prm, 3, which)
    assert rel_err(A, richardson(lambda h: fd_jacobian(f, x, h), 1e-5)) < REL_TOL[1]
    assert rel_err(B, richardson(lambda h: fd_hessian(f, x, h), 2e-4)) < REL_TOL[2]
    assert rel_err(C, fd_third(f, x, 5e-4)) < REL_TOL[3]


@pytest.mark.parametrize("which", ["full", "conservative", "dissipative"])
def test_partials_match_fd_along_reference(ctx, reference_states, which):
    f = rhs_func(ctx.models, which)
    prm = dyn.build_params(ctx.models)
    for x in reference_states:
        A, B, C = eval_partials(x, prm, 3, which)
        assert rel_err(A, richardson(lambda h: fd_jacobian(f, x, h), 1e-5)) < REL_TOL[1]
        assert rel_err(B, richardson(lambda h: fd_hessian(f, x, h), 2e-4)) < REL_TOL[2]
        assert rel_err(C, fd_third(f, x, 5e-4)) < REL_TOL[3]


def test_full_equals_sum_of_components(ctx, reference_states):
    prm = dyn.build_params(ctx.models)
    for x in reference_states[:5]:
        Af, Bf, Cf = eval_partials(x, prm, 3, "full")
        Ac, Bc, Cc = eval_partials(x, prm, 3, "conservative")
        Ad, Bd, Cd = eval_partials(x, prm, 3, "dissipative")
        assert np.array_equal(Af, Ac + Ad)
        assert np.array_equal(Bf, Bc + Bd)
        assert np.array_equal(Cf, Cc + Cd)


def test_conservative_has_no_density_coupling(ctx):
    # no rho dependence anywhere in the conservative block
    prm = dyn.build_params(ctx.models)
    A, B, C = eval_partials(ctx.x0_nd, prm, 3, "conservative")
    assert np.all(A[:, 6] == 0.0) and np.all(A[6, :] == 0.0)
    assert np.all(B[:, 6, :] == 0.0) and np.all(B[:, :, 6] == 0.0)
    assert np.all(C[6] == 0.0)


def test_trailing_symmetry_exact(ctx):
    prm = dyn.build_params(ctx.models)
    _, B, C = eval_partials(ctx.x0_nd, prm, 3, "full")
    assert np.array_equal(B, B.transpose(0, 2, 1))
    assert np.array_equal(C, C.transpose(0, 1, 3, 2))
    assert np.array_equal(C, C.transpose(0, 3, 2, 1))


def test_dynamics_partials_wrapper(ctx, models):
    sv = StateVector.from_array(ctx.x0_nd, frame=NONDIMENSIONAL)
    dp = dynamics_partials(sv, models, order=2)
    assert dp.A.shape == (7, 7)
    assert dp.B.shape == (7, 7, 7)
    assert dp.C is None
    with pytest.raises(ValueError):
        dynamics_partials(sv, models, order=4)
    with pytest.raises(ValueError):
        dynamics_partials(sv, models, which="frictional")
