"""Directional STTs: reduced-basis higher-order tensors plus the full STM.

The higher-order flow partials are projected onto per-order row bases
R_[2], R_[3] (orthonormal rows, possibly different per order); propagation
keeps the full first-order map and contracts the projected tensors with
the reduced perturbation y = R dx. With a single latent dimension the
higher-order terms collapse to scalar-weighted vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import Eigenpair, SSHopmConfig, canonical_sign, max_eigenpair
from .propagation import IntervalMismatchError, SttSet
from .tensors import (
    SelectionMatrix,
    hocgt_coeffs,
    qcgt_coeffs,
    scgt_coeffs,
    second_order_cgt,
    symmetrize,
)

BASIS_METHODS = ("cgt2-top-l", "hocgt", "scgt", "qcgt-energy", "qcgt-apoapsis")

ORTHONORMAL_TOL = 1e-12


@dataclass(frozen=True)
class RotationBasis:
    """Per-order projection rows over one interval; rows are orthonormal."""

    R2: np.ndarray  # (l2, n)
    R3: np.ndarray  # (l3, n)
    method: str
    t_from: float
    t_to: float

    def __post_init__(self):
        for R in (self.R2, self.R3):
            R = np.asarray(R, float)
            if not 1 <= R.shape[0] <= R.shape[1]:
                raise ValueError("need 1 <= l <= n basis rows")
            gram = R @ R.T
            if np.max(np.abs(gram - np.eye(R.shape[0]))) > ORTHONORMAL_TOL:
                raise ValueError("basis rows are not orthonormal")


@dataclass(frozen=True)
class DsttSet:
    """Projected second/third-order tensors plus the retained full STM."""

    t_from: float
    t_to: float
    phi1: np.ndarray  # (n, n), identical to the source SttSet's
    psi2: np.ndarray  # (n, l2, l2)
    psi3: np.ndarray | None  # (n, l3, l3, l3)
    basis: RotationBasis

    def to_dict(self) -> dict:
        d = {
            "t_from": self.t_from,
            "t_to": self.t_to,
            "method": self.basis.method,
            "phi1": self.phi1.tolist(),
            "psi2": self.psi2.tolist(),
            "R2": self.basis.R2.tolist(),
            "R3": self.basis.R3.tolist(),
        }
        if self.psi3 is not None:
            d["psi3"] = self.psi3.tolist()
        return d


def _orthonormalize_rows(R: np.ndarray) -> np.ndarray:
    q, _ = np.linalg.qr(R.T)
    out = q.T[: R.shape[0]]
    # keep each row pointing the way the input row did
    for k in range(out.shape[0]):
        if np.dot(out[k], R[k]) < 0.0:
            out[k] = -out[k]
        out[k] = canonical_sign(out[k])
    return out


def cgt2_top_l(phi1: np.ndarray, l: int) -> np.ndarray:
    """Rows: eigenvectors of the l largest eigenvalues of Phi^T Phi.

    Ordered by descending eigenvalue (stable under ties), each row
    sign-normalized so its largest-magnitude component is positive.
    """
    c2 = second_order_cgt(phi1)
    w, vecs = np.linalg.eigh(c2)
    order = np.argsort(-w, kind="stable")
    rows = np.array([canonical_sign(vecs[:, j]) for j in order[:l]])
    return rows


def build_basis(
    method: str,
    stt: SttSet,
    l: int = 1,
    aux=None,
    seed: int = 0,
    n_starts: int = 100,
    dedup_angle: float = 1e-3,
    sshopm: SSHopmConfig | None = None,
) -> RotationBasis:
    """Stretching-direction basis for one interval.

    cgt2-top-l shares one l-row basis across both orders; the augmented
    methods use the maximal eigenvector of the order-3 tensor for R2 and
    of the order-4 tensor for R3 (single row each). aux carries the
    SelectionMatrix (scgt) or QoiPartials (qcgt-*).
    """
    if method == "cgt2-top-l":
        rows = cgt2_top_l(stt.phi1, l)
        if l > 1:
            rows = _orthonormalize_rows(rows)
        return RotationBasis(rows, rows, method, stt.t_from, stt.t_to)

    if method not in BASIS_METHODS:
        raise ValueError(f"unknown basis method {method!r}")
    if stt.order < 3:
        raise ValueError(f"{method} basis needs order-3 STTs")

    if method == "hocgt":
        t3 = hocgt_coeffs(stt, 3)
        t4 = hocgt_coeffs(stt, 4)
    elif method == "scgt":
        if not isinstance(aux, SelectionMatrix):
            raise TypeError("scgt basis needs a SelectionMatrix aux")
        t3 = scgt_coeffs(stt, aux, 3)
        t4 = scgt_coeffs(stt, aux, 4)
    else:  # qcgt-energy / qcgt-apoapsis
        if aux is None or not hasattr(aux, "eta1"):
            raise TypeError(f"{method} basis needs QoiPartials aux")
        t3 = qcgt_coeffs(stt, aux, 3)
        t4 = qcgt_coeffs(stt, aux, 4)

    ep3, _ = max_eigenpair(symmetrize(t3), n_starts, dedup_angle, seed, sshopm)
    ep4, _ = max_eigenpair(symmetrize(t4), n_starts, dedup_angle, seed, sshopm)
    r2 = canonical_sign(ep3.v)[None, :]
    r3 = canonical_sign(ep4.v)[None, :]
    return RotationBasis(r2, r3, method, stt.t_from, stt.t_to)


def construct_dstt(stt: SttSet, basis: RotationBasis) -> DsttSet:
    """Project the higher-order flow partials onto the basis rows."""
    if stt.order < 2:
        raise ValueError("DSTT construction needs at least order-2 STTs")
    if basis.R2.shape[1] != stt.n or basis.R3.shape[1] != stt.n:
        raise ValueError("basis dimension does not match the STT")
    psi2 = np.einsum("ikl,ak,bl->iab", stt.phi2, basis.R2, basis.R2)
    psi3 = None
    if stt.order >= 3:
        psi3 = np.einsum("iklm,ak,bl,cm->iabc", stt.phi3, basis.R3, basis.R3, basis.R3)
    return DsttSet(
        t_from=stt.t_from, t_to=stt.t_to, phi1=stt.phi1.copy(),
        psi2=psi2, psi3=psi3, basis=basis,
    )


def propagate_perturbation_dstt(dstt: DsttSet, dx: np.ndarray, m: int = 3) -> np.ndarray:
    """Full STM term plus projected higher-order terms through order m."""
    if m not in (2, 3):
        raise ValueError("m must be 2 or 3")
    dx = np.asarray(dx, float)
    out = dstt.phi1 @ dx
    y2 = dstt.basis.R2 @ dx
    out = out + 0.5 * np.einsum("iab,a,b->i", dstt.psi2, y2, y2)
    if m >= 3:
        if dstt.psi3 is None:
            raise ValueError("DSTT stores no third-order tensor")
        y3 = dstt.basis.R3 @ dx
        out = out + np.einsum("iabc,a,b,c->i", dstt.psi3, y3, y3, y3) / 6.0
    return out


def reconstruct_stt(dstt: DsttSet) -> SttSet:
    """Map the projected tensors back to full dimension through the same rows."""
    phi2 = np.einsum("iab,ak,bl->ikl", dstt.psi2, dstt.basis.R2, dstt.basis.R2)
    phi3 = None
    order = 2
    if dstt.psi3 is not None:
        phi3 = np.einsum(
            "iabc,ak,bl,cm->iklm", dstt.psi3, dstt.basis.R3, dstt.basis.R3, dstt.basis.R3
        )
        order = 3
    return SttSet(
        t_from=dstt.t_from, t_to=dstt.t_to, order=order,
        phi1=dstt.phi1.copy(), phi2=phi2, phi3=phi3,
    )


@dataclass(frozen=True)
class FrobeniusError:
    """Normalized reconstruction errors per order, with the source norms.

    eps is NaN and the low_nonlinearity flag set where the source tensor
    norm vanishes (no direction to reconstruct).
    """

    eps2: float
    eps3: float
    phi2_norm: float
    phi3_norm: float
    low_nonlinearity2: bool = False
    low_nonlinearity3: bool = False


def frobenius_error(stt: SttSet, dstt: DsttSet) -> FrobeniusError:
    """||phi_p - reconstruction_p||_F / ||phi_p||_F for p = 2, 3."""
    if abs(stt.t_from - dstt.t_from) > 1e-12 or abs(stt.t_to - dstt.t_to) > 1e-12:
        raise IntervalMismatchError("STT and DSTT cover different intervals")
    recon = reconstruct_stt(dstt)

    def one(phi, rec):
        nrm = float(np.linalg.norm(phi.ravel()))
        if nrm == 0.0:
            return float("nan"), nrm, True
        return float(np.linalg.norm((phi - rec).ravel()) / nrm), nrm, False

    eps2, n2, flag2 = one(stt.phi2, recon.phi2)
    if stt.order >= 3 and recon.phi3 is not None:
        eps3, n3, flag3 = one(stt.phi3, recon.phi3)
    else:
        eps3, n3, flag3 = float("nan"), 0.0, True
    return FrobeniusError(eps2, eps3, n2, n3, flag2, flag3)
