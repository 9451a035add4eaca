import numpy as np
import pytest

from aerodstt.eigen import (
    EigenSolveError,
    SSHopmConfig,
    canonical_sign,
    max_eigenpair,
    ss_hopm,
)
from aerodstt.kernels import tensor_apply
from aerodstt.tensors import second_order_cgt, symmetrize


def test_matrix_case_matches_dense_eigensolver(rng):
    A = rng.standard_normal((6, 6))
    A = 0.5 * (A + A.T)
    v0 = rng.standard_normal(6)
    ep = ss_hopm(A, v0 / np.linalg.norm(v0))
    w, vecs = np.linalg.eigh(A)
    # shifted power iteration climbs to the algebraically largest eigenvalue
    assert abs(ep.lam - w[-1]) < 1e-10
    assert abs(abs(ep.v @ vecs[:, -1]) - 1.0) < 1e-8
    assert ep.converged


def test_rank_one_tensor_fixed_point(rng):
    a = rng.standard_normal(5)
    a /= np.linalg.norm(a)
    T = np.einsum("i,j,k->ijk", a, a, a)
    ep = ss_hopm(T, a.copy())
    assert ep.lam == pytest.approx(1.0, abs=1e-12)
    assert abs(abs(ep.v @ a) - 1.0) < 1e-12


def test_diagonal_tensor_candidates():
    # analytic z-eigenpairs of diag(3, 1) at order 3: e1 with 3, e2 with 1,
    # and the mixed branch (1/sqrt(10), 3/sqrt(10)) with 3/sqrt(10)
    T = np.zeros((2, 2, 2))
    T[0, 0, 0] = 3.0
    T[1, 1, 1] = 1.0
    best, kept = max_eigenpair(T, n_starts=50, seed=2)
    lams = sorted(round(k.lam, 6) for k in kept)
    assert best.lam == pytest.approx(3.0, abs=1e-12)
    assert abs(abs(best.v[0]) - 1.0) < 1e-10
    assert 1.0 in lams and 3.0 in lams
    assert round(3.0 / np.sqrt(10.0), 6) in lams


def test_max_eigenpair_matrix_matches_eigh(rng):
    A = rng.standard_normal((7, 7))
    A = 0.5 * (A + A.T)
    best, _ = max_eigenpair(A, n_starts=30, seed=3)
    assert abs(best.lam - np.linalg.eigvalsh(A)[-1]) < 1e-10


def test_deduplication_collapses_repeats(rng):
    a = rng.standard_normal(4)
    a /= np.linalg.norm(a)
    T = np.einsum("i,j,k->ijk", a, a, a)
    best, kept = max_eigenpair(T, n_starts=40, dedup_angle=1e-3, seed=4)
    # every kept pair of directions is separated by more than the threshold
    for i in range(len(kept)):
        for j in range(i + 1, len(kept)):
            assert abs(kept[i].v @ kept[j].v) <= np.cos(1e-3)


def test_residual_certificate_on_random_tensors(rng):
    for s in range(5):
        T = symmetrize(np.random.default_rng(s).standard_normal((5, 5, 5)))
        _, kept = max_eigenpair(T, n_starts=50, seed=s)
        scale = np.max(np.abs(T))
        for ep in kept:
            assert ep.converged
            assert ep.residual < 1e-10 * max(1.0, scale)


def test_nonconvergence_raises_with_diagnostics():
    T = symmetrize(np.random.default_rng(0).standard_normal((5, 5, 5)))
    cfg = SSHopmConfig(max_iter=1, tol_residual=1e-300, certify_residual=1e-300)
    with pytest.raises(EigenSolveError, match="no SS-HOPM start converged"):
        max_eigenpair(T, n_starts=5, seed=0, config=cfg)


def test_single_start_nonconvergence_flagged():
    T = symmetrize(np.random.default_rng(1).standard_normal((5, 5, 5)))
    ep = ss_hopm(T, np.eye(5)[0], SSHopmConfig(max_iter=1, certify_residual=1e-300))
    assert not ep.converged


def test_fixed_shift_mode(rng):
    A = rng.standard_normal((5, 5))
    A = 0.5 * (A + A.T)
    ep = ss_hopm(A, rng.standard_normal(5), SSHopmConfig(shift=2.0 + np.max(np.abs(A))))
    assert abs(ep.lam - np.linalg.eigvalsh(A)[-1]) < 1e-9


def test_odd_order_reports_nonnegative_branch(rng):
    # eigenpairs come in sign twins at odd order; the reported one has
    # lambda >= 0 so maximal-eigenvalue selection is unambiguous
    for s in range(5):
        T = symmetrize(np.random.default_rng(100 + s).standard_normal((4, 4, 4)))
        _, kept = max_eigenpair(T, n_starts=40, seed=s)
        assert all(k.lam >= 0.0 for k in kept)


def test_canonical_sign():
    v = np.array([0.1, -0.9, 0.3])
    out = canonical_sign(v)
    assert out[1] > 0.0
    assert np.array_equal(out, -v)


def test_zero_tensor_degenerate():
    ep = ss_hopm(np.zeros((3, 3, 3)), np.array([1.0, 0.0, 0.0]))
    assert ep.lam == 0.0 and ep.converged


def test_cgt_families_are_psd_on_reference(ctx):
    # order-2 members are Gram forms: smallest eigenvalue can only be
    # rounding-negative
    from aerodstt.tensors import scgt_coeffs, qcgt_coeffs, SelectionMatrix

    stt = ctx.full_span_stt
    sel = SelectionMatrix.from_indices([0, 3, 4], 7)
    mats = {
        "cgt2": second_order_cgt(stt.phi1),
        "scgt2": scgt_coeffs(stt, sel, 2),
        "qcgt2-energy": qcgt_coeffs(stt, ctx.qoi_at(ctx.xf_nd, "energy"), 2),
        "qcgt2-apoapsis": qcgt_coeffs(stt, ctx.qoi_at(ctx.xf_nd, "apoapsis"), 2),
    }
    for name, c in mats.items():
        w = np.linalg.eigvalsh(0.5 * (c + c.T))
        assert w[0] > -1e-12 * np.linalg.norm(c), name
