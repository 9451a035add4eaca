import numpy as np
import pytest

from aerodstt.kernels import tensor_apply
from aerodstt.propagation import SttSet, symmetrize_trailing
from aerodstt.qoi import QoiPartials
from aerodstt.tensors import (
    SelectionMatrix,
    hocgt_coeffs,
    qcgt_coeffs,
    qoi_taylor_coeffs,
    scgt_coeffs,
    second_order_cgt,
    symmetrize,
    vector_angle,
)


def random_sttset(n=3, seed=0, scale2=0.5, scale3=0.3) -> SttSet:
    rng = np.random.default_rng(seed)
    p1 = 0.8 * rng.standard_normal((n, n))
    p2 = symmetrize_trailing(scale2 * rng.standard_normal((n, n, n)))
    p3 = symmetrize_trailing(scale3 * rng.standard_normal((n, n, n, n)))
    return SttSet(0.0, 1.0, 3, p1, p2, p3)


def polynomial_coeffs_by_interpolation(stt, weight, dx, orders=(2, 3, 4)):
    """Independent oracle: extract the coefficients of ||weight @ x_z(eps*dx)||^2
    as a polynomial in eps by exact Vandermonde interpolation.

    Only evaluates the Taylor map; never touches the coefficient formulas.
    """
    from aerodstt.propagation import propagate_perturbation_stt

    deg = 6  # squared norm of a cubic map
    eps = np.linspace(0.05, 0.65, deg + 1)
    vals = []
    for e in eps:
        xz = propagate_perturbation_stt(stt, e * dx, 3)
        w = weight @ xz
        vals.append(float(w @ w))
    coef = np.linalg.solve(np.vander(eps, deg + 1, increasing=True), np.array(vals))
    return {k: coef[k] for k in orders}


# ---------------------------------------------------------------------------
# second-order


def test_cgt_identity():
    c = second_order_cgt(np.eye(5))
    assert np.array_equal(c, np.eye(5))
    assert np.allclose(np.linalg.eigvalsh(c), 1.0)


def test_cgt_diagonal_stretch():
    phi = np.diag([2.0, 1.0, 1.0, 1.0])
    c = second_order_cgt(phi)
    w, v = np.linalg.eigh(c)
    assert w[-1] == pytest.approx(4.0)
    assert abs(v[0, -1]) == pytest.approx(1.0)


def test_cgt_eigenvalues_are_squared_singular_values(rng):
    phi = rng.standard_normal((7, 7))
    w = np.sort(np.linalg.eigvalsh(second_order_cgt(phi)))
    s = np.sort(np.linalg.svd(phi, compute_uv=False)) ** 2
    assert np.max(np.abs(w - s)) / s.max() < 1e-10


def test_cgt_rejects_nonsquare():
    with pytest.raises(ValueError):
        second_order_cgt(np.ones((3, 4)))


# ---------------------------------------------------------------------------
# ordinary higher-order family


def test_hocgt_zero_phi2():
    stt = random_sttset()
    stt = SttSet(0.0, 1.0, 3, stt.phi1, np.zeros((3, 3, 3)), stt.phi3)
    assert not hocgt_coeffs(stt, 3).any()


def test_hocgt_scalar_case():
    a, b = 1.7, -0.6
    stt = SttSet(0.0, 1.0, 2, np.array([[a]]), np.array([[[b]]]))
    assert hocgt_coeffs(stt, 3)[0, 0, 0] == pytest.approx(a * b, rel=1e-15)


def test_hocgt_insufficient_order():
    stt = SttSet(0.0, 1.0, 1, np.eye(3))
    with pytest.raises(ValueError):
        hocgt_coeffs(stt, 3)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_hocgt_matches_polynomial_expansion(seed, rng):
    stt = random_sttset(seed=seed)
    c2 = second_order_cgt(stt.phi1)
    f3 = hocgt_coeffs(stt, 3)
    f4 = hocgt_coeffs(stt, 4)
    for _ in range(3):
        dx = rng.standard_normal(3)
        oracle = polynomial_coeffs_by_interpolation(stt, np.eye(3), dx)
        for order, tensor in ((2, c2), (3, f3), (4, f4)):
            pred = float(tensor_apply(tensor, dx, order))
            assert pred == pytest.approx(oracle[order], rel=1e-10, abs=1e-10)


# ---------------------------------------------------------------------------
# selective family


def test_scgt_identity_selection_reduces_to_hocgt():
    stt = random_sttset(seed=5)
    sel = SelectionMatrix.from_indices(range(3), 3)
    assert np.allclose(scgt_coeffs(stt, sel, 2), second_order_cgt(stt.phi1), atol=1e-14)
    assert np.allclose(scgt_coeffs(stt, sel, 3), hocgt_coeffs(stt, 3), atol=1e-14)
    assert np.allclose(scgt_coeffs(stt, sel, 4), hocgt_coeffs(stt, 4), atol=1e-14)


def test_scgt_single_coordinate_is_row_gram():
    stt = random_sttset(seed=6)
    sel = SelectionMatrix.from_indices([1], 3)
    row = stt.phi1[1]
    assert np.allclose(scgt_coeffs(stt, sel, 2), np.outer(row, row), atol=1e-15)


@pytest.mark.parametrize("seed", [3, 4])
def test_scgt_matches_polynomial_expansion(seed, rng):
    stt = random_sttset(seed=seed)
    sel = SelectionMatrix.from_indices([0, 2], 3)
    tensors = {m: scgt_coeffs(stt, sel, m) for m in (2, 3, 4)}
    for _ in range(3):
        dx = rng.standard_normal(3)
        oracle = polynomial_coeffs_by_interpolation(stt, sel.S, dx)
        for order in (2, 3, 4):
            pred = float(tensor_apply(tensors[order], dx, order))
            assert pred == pytest.approx(oracle[order], rel=1e-10, abs=1e-10)


def test_selection_matrix_validation():
    with pytest.raises(ValueError):
        SelectionMatrix(np.array([[1.0, 1.0, 0.0]]))
    with pytest.raises(ValueError):
        SelectionMatrix(np.array([[1.0, 0.0, 0.0], [1.0, 0.0, 0.0]]))
    sel = SelectionMatrix.from_indices([2, 0], 4)
    assert sel.indices == (2, 0)


# ---------------------------------------------------------------------------
# quantity-of-interest family


def test_qcgt_identity_quantity_collapses_to_hocgt():
    stt = random_sttset(seed=7)
    eta = QoiPartials.identity(3)
    assert np.allclose(qcgt_coeffs(stt, eta, 2), second_order_cgt(stt.phi1), atol=1e-14)
    assert np.allclose(qcgt_coeffs(stt, eta, 3), hocgt_coeffs(stt, 3), atol=1e-14)
    assert np.allclose(qcgt_coeffs(stt, eta, 4), hocgt_coeffs(stt, 4), atol=1e-14)


def test_qcgt_linear_scalar_quantity():
    stt = random_sttset(seed=8)
    c = np.array([0.3, -1.1, 0.7])
    eta = QoiPartials(
        kind="linear", value=0.0, eta1=c, eta2=np.zeros((3, 3)), eta3=np.zeros((3, 3, 3))
    )
    q2 = qcgt_coeffs(stt, eta, 2)
    row = c @ stt.phi1
    assert np.allclose(q2, np.outer(row, row), atol=1e-14)


def test_qcgt_energy_series_order(ctx):
    # D-coefficient Taylor series of the terminal energy against the
    # integrate-then-evaluate oracle: remainder scales as |dx|^4
    from aerodstt.propagation import IntegratorConfig, flow_nd
    from aerodstt.validation import fit_loglog_slope

    stt = ctx.full_span_stt
    eta = ctx.qoi_at(ctx.xf_nd, "energy")
    D1, D2, D3 = qoi_taylor_coeffs(stt, eta, 3)
    rng = np.random.default_rng(3)
    u = rng.standard_normal(7)
    u /= np.linalg.norm(u)
    cfg = IntegratorConfig(rtol=1e-13, atol=1e-13)
    mags = [1e-5, 3e-5, 1e-4, 3e-4]
    errs = []
    for mag in mags:
        dx = mag * u
        xf = flow_nd(ctx.x0_nd + dx, (0.0, ctx.t_final_nd), ctx.system, cfg).y[:, -1]
        from aerodstt import _partials_gen as gen

        prm_q = np.array([ctx.models.planet.Omega * ctx.scales.time_ref])
        dq_true = float(gen.qoi_value_energy(xf, prm_q)) - eta.value
        series = (
            float(D1[0] @ dx)
            + 0.5 * float(tensor_apply(D2[0], dx, 2))
            + float(tensor_apply(D3[0], dx, 3)) / 6.0
        )
        errs.append(abs(series - dq_true))
    slope, used = fit_loglog_slope(mags, errs, floor=1e-16)
    assert used >= 3
    assert slope == pytest.approx(4.0, abs=0.4)


def test_qcgt_missing_higher_partials():
    stt = random_sttset(seed=9)
    eta = QoiPartials(kind="linear", value=0.0, eta1=np.ones(3))
    with pytest.raises(ValueError):
        qcgt_coeffs(stt, eta, 3)


# ---------------------------------------------------------------------------
# symmetrization


def test_symmetrize_fixed_point():
    t = symmetrize(np.random.default_rng(1).standard_normal((4, 4, 4)))
    assert np.allclose(symmetrize(t), t, atol=1e-15)


def test_symmetrize_single_entry():
    t = np.zeros((3, 3, 3))
    t[0, 1, 2] = 6.0
    s = symmetrize(t)
    for p in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        assert s[p] == pytest.approx(1.0)
    assert np.count_nonzero(s) == 6


def test_symmetrize_preserves_contraction(rng):
    for m in (3, 4):
        t = rng.standard_normal((5,) * m)
        s = symmetrize(t)
        for _ in range(250):
            x = rng.standard_normal(5)
            x /= np.linalg.norm(x)
            assert abs(tensor_apply(t, x, m) - tensor_apply(s, x, m)) < 1e-12


# ---------------------------------------------------------------------------
# angles


def test_vector_angle_parallel_and_antiparallel():
    v = np.array([1.0, 2.0, -0.5])
    assert vector_angle(v, v) == pytest.approx(0.0, abs=1e-7)
    assert vector_angle(v, -v) == pytest.approx(0.0, abs=1e-7)


def test_vector_angle_orthogonal():
    assert vector_angle(np.array([1.0, 0.0]), np.array([0.0, -2.0])) == pytest.approx(90.0)


def test_vector_angle_zero_vector_raises():
    with pytest.raises(ValueError):
        vector_angle(np.zeros(3), np.ones(3))
