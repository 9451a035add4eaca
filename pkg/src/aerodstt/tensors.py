"""Cauchy-Green tensors, their higher-order and augmented variants.

The squared norm of a Taylor-propagated perturbation is a polynomial in
the initial perturbation; the coefficient tensors of that polynomial are
the stretching tensors built here:

  * ordinary family: objective ||dx_z||^2 (order 2 is Phi^T Phi),
  * selective family: objective ||S dx_z||^2 for a state-selection S,
  * quantity-of-interest family: objective ||dq||^2 for q a function of
    the final state, with coefficients assembled from the q partials and
    the flow partials by the chain rule.

Orders 3 and 4 are not index-symmetric as constructed and must be run
through :func:`symmetrize` before eigenanalysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .propagation import SttSet


@dataclass(frozen=True)
class SelectionMatrix:
    """w x n matrix whose rows are distinct Cartesian basis vectors."""

    S: np.ndarray

    def __post_init__(self):
        S = np.asarray(self.S, float)
        w, n = S.shape
        if w > n:
            raise ValueError("more selected states than states")
        rows = []
        for row in S:
            nz = np.nonzero(row)[0]
            if len(nz) != 1 or row[nz[0]] != 1.0:
                raise ValueError("rows must be Cartesian basis vectors")
            rows.append(nz[0])
        if len(set(rows)) != len(rows):
            raise ValueError("selected states must be distinct")
        object.__setattr__(self, "S", S)

    @classmethod
    def from_indices(cls, indices, n: int) -> "SelectionMatrix":
        S = np.zeros((len(indices), n))
        for k, i in enumerate(indices):
            S[k, i] = 1.0
        return cls(S)

    @property
    def indices(self):
        return tuple(int(np.nonzero(r)[0][0]) for r in self.S)


def symmetrize(T: np.ndarray) -> np.ndarray:
    """Average over all index permutations; contraction with x^m is preserved."""
    m = T.ndim
    if m < 2:
        return np.asarray(T, float)
    acc = np.zeros_like(T, dtype=float)
    perms = list(permutations(range(m)))
    for p in perms:
        acc += T.transpose(p)
    return acc / len(perms)


def second_order_cgt(phi1: np.ndarray) -> np.ndarray:
    """Phi^T Phi: symmetric PSD; its top eigenvector maximizes linear stretching."""
    phi1 = np.asarray(phi1, float)
    if phi1.ndim != 2 or phi1.shape[0] != phi1.shape[1]:
        raise ValueError("phi1 must be square")
    return phi1.T @ phi1


def _require_order(stt: SttSet, needed: int):
    if stt.order < needed:
        raise ValueError(f"SttSet order {stt.order} < required {needed}")


def hocgt_coeffs(stt: SttSet, m: int) -> np.ndarray:
    """Non-symmetric order-m coefficient tensor of ||dx_z||^2, m in {3, 4}."""
    if m == 3:
        _require_order(stt, 2)
        return np.einsum("ia,ibc->abc", stt.phi1, stt.phi2)
    if m == 4:
        _require_order(stt, 3)
        return (
            np.einsum("ia,ibcd->abcd", stt.phi1, stt.phi3) / 3.0
            + np.einsum("iab,icd->abcd", stt.phi2, stt.phi2) / 4.0
        )
    raise ValueError("m must be 3 or 4")


def scgt_coeffs(stt: SttSet, sel: SelectionMatrix, m: int) -> np.ndarray:
    """Non-symmetric order-m coefficient tensor of ||S dx_z||^2, m in {2, 3, 4}.

    Same structure as the ordinary family with every flow partial
    premultiplied by S (independent contraction indices in each factor,
    so order 2 reduces to the Gram form (S Phi)^T (S Phi)).
    """
    S = sel.S
    s1 = S @ stt.phi1
    if m == 2:
        return s1.T @ s1
    if m == 3:
        _require_order(stt, 2)
        s2 = np.tensordot(S, stt.phi2, axes=([1], [0]))
        return np.einsum("ia,ibc->abc", s1, s2)
    if m == 4:
        _require_order(stt, 3)
        s2 = np.tensordot(S, stt.phi2, axes=([1], [0]))
        s3 = np.tensordot(S, stt.phi3, axes=([1], [0]))
        return (
            np.einsum("ia,ibcd->abcd", s1, s3) / 3.0
            + np.einsum("iab,icd->abcd", s2, s2) / 4.0
        )
    raise ValueError("m must be 2, 3 or 4")


def _eta_matrices(eta):
    """Promote scalar-QoI partial arrays to vector-QoI shapes (q, n, ...)."""
    e1 = np.asarray(eta.eta1, float)
    e2 = np.asarray(eta.eta2, float) if eta.eta2 is not None else None
    e3 = np.asarray(eta.eta3, float) if eta.eta3 is not None else None
    if e1.ndim == 1:
        e1 = e1[None, :]
        e2 = e2[None] if e2 is not None else None
        e3 = e3[None] if e3 is not None else None
    return e1, e2, e3


def qoi_taylor_coeffs(stt: SttSet, eta, order: int):
    """D_[1..order]: derivative tensors of q(x_z(x_y)) with respect to x_y.

    dq = D1 dx + (1/2) D2 dx^2 + (1/6) D3 dx^3. The factorials are not
    folded in.
    """
    e1, e2, e3 = _eta_matrices(eta)
    p1, p2, p3 = stt.phi1, stt.phi2, stt.phi3
    D1 = e1 @ p1
    out = [D1]
    if order >= 2:
        if e2 is None:
            raise ValueError("eta supplies no second partials")
        _require_order(stt, 2)
        D2 = np.einsum("ijl,lb,ja->iab", e2, p1, p1) + np.tensordot(
            e1, p2, axes=([1], [0])
        )
        out.append(D2)
    if order >= 3:
        if e3 is None:
            raise ValueError("eta supplies no third partials")
        _require_order(stt, 3)
        D3 = (
            np.einsum("ijlm,mc,lb,ja->iabc", e3, p1, p1, p1)
            + np.einsum("ijl,lbc,ja->iabc", e2, p2, p1)
            + np.einsum("ijl,lb,jac->iabc", e2, p1, p2)
            + np.einsum("ijl,lc,jab->iabc", e2, p1, p2)
            + np.tensordot(e1, p3, axes=([1], [0]))
        )
        out.append(D3)
    return out


def qcgt_coeffs(stt: SttSet, eta, m: int) -> np.ndarray:
    """Non-symmetric order-m coefficient tensor of ||dq||^2, m in {2, 3, 4}."""
    if m == 2:
        (D1,) = qoi_taylor_coeffs(stt, eta, 1)
        return np.einsum("ia,ib->ab", D1, D1)
    if m == 3:
        D1, D2 = qoi_taylor_coeffs(stt, eta, 2)
        return np.einsum("ia,ibc->abc", D1, D2)
    if m == 4:
        D1, D2, D3 = qoi_taylor_coeffs(stt, eta, 3)
        return (
            np.einsum("ia,ibcd->abcd", D1, D3) / 3.0
            + np.einsum("iab,icd->abcd", D2, D2) / 4.0
        )
    raise ValueError("m must be 2, 3 or 4")


def vector_angle(v1: np.ndarray, v2: np.ndarray) -> float:
    """Sign-insensitive angle between directions, in degrees within [0, 90]."""
    v1 = np.asarray(v1, float)
    v2 = np.asarray(v2, float)
    n1, n2 = np.linalg.norm(v1), np.linalg.norm(v2)
    if n1 == 0.0 or n2 == 0.0:
        raise ValueError("zero vector has no direction")
    c = abs(float(np.dot(v1, v2))) / (n1 * n2)
    return float(np.degrees(np.arccos(min(1.0, c))))
