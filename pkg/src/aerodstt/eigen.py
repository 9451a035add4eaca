"""Symmetric-tensor z-eigenpairs via the shifted higher-order power method.

An eigenpair (lambda, v) of a symmetric order-m tensor satisfies
T v^{m-1} = lambda * v with ||v|| = 1. The power iteration maps
v <- normalize(T v^{m-1} + alpha v); the shift alpha is chosen each step
from the smallest eigenvalue of the local Hessian m(m-1) T v^{m-2} so the
underlying objective T v^m increases monotonically, or held fixed when
configured. Convergence is local only, so the multi-start driver runs a
batch of seeded random starts (vectorized over the batch) and
deduplicates the surviving directions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import tensor_apply


class EigenSolveError(RuntimeError):
    pass


@dataclass(frozen=True)
class SSHopmConfig:
    tol_lambda: float = 1e-14
    tol_residual: float = 1e-12  # relative to max|T|
    max_iter: int = 2000
    shift: float | str = "adaptive"  # or a fixed non-negative float
    hessian_margin: float = 1e-6
    # converged means: residual below this times max|T|
    certify_residual: float = 1e-10


@dataclass(frozen=True)
class Eigenpair:
    lam: float
    v: np.ndarray
    residual: float
    converged: bool
    start_index: int = -1
    iterations: int = 0


def canonical_sign(v: np.ndarray) -> np.ndarray:
    """Flip sign so the largest-magnitude component is positive."""
    i = int(np.argmax(np.abs(v)))
    return -v if v[i] < 0.0 else v


def _batch_gradient(Tn: np.ndarray, X: np.ndarray) -> np.ndarray:
    """g[s] = Tn X[s]^{m-1} for a batch of unit rows X."""
    m = Tn.ndim
    if m == 2:
        return X @ Tn.T
    if m == 3:
        return np.einsum("iab,sa,sb->si", Tn, X, X, optimize=True)
    return np.einsum("iabc,sa,sb,sc->si", Tn, X, X, X, optimize=True)


def _batch_shift(Tn: np.ndarray, X: np.ndarray, margin: float) -> np.ndarray:
    """Per-start shift from the smallest local-Hessian eigenvalue."""
    m = Tn.ndim
    if m == 2:
        lo = float(np.linalg.eigvalsh(2.0 * Tn)[0])
        return np.full(X.shape[0], max(0.0, (margin - lo) / m))
    if m == 3:
        H = 6.0 * np.einsum("iab,sb->sia", Tn, X, optimize=True)
    else:
        H = 12.0 * np.einsum("iabc,sb,sc->sia", Tn, X, X, optimize=True)
    lo = np.linalg.eigvalsh(H)[:, 0]
    return np.maximum(0.0, (margin - lo) / m)


def _iterate_batch(Tn: np.ndarray, X: np.ndarray, config: SSHopmConfig):
    """Run the shifted power iteration on a batch of unit starts.

    Returns (lam, X, residual, converged, iterations); converged starts
    freeze in place while the rest keep iterating. The per-start adaptive
    shift is evaluated at the start point and re-evaluated only for
    starts whose objective stops ascending (the local Hessian bound
    drifts slowly along the iterate path, and the residual certificate
    below does not depend on the shift schedule).
    """
    m = Tn.ndim
    s = X.shape[0]
    lam_prev = np.full(s, -np.inf)
    resid = np.full(s, np.inf)
    done = np.zeros(s, dtype=bool)
    iters = np.zeros(s, dtype=int)
    fixed = None if config.shift == "adaptive" else float(config.shift)
    if fixed is not None:
        alpha = np.full(s, fixed)
    else:
        alpha = _batch_shift(Tn, X, config.hessian_margin)
    lam = np.zeros(s)
    for _ in range(config.max_iter):
        act = ~done
        if not np.any(act):
            break
        Xa = X[act]
        g = _batch_gradient(Tn, Xa)
        lam_a = np.sum(g * Xa, axis=1)
        res_a = np.linalg.norm(g - lam_a[:, None] * Xa, axis=1)
        lam[act] = lam_a
        resid[act] = res_a
        iters[act] += 1
        dlam = lam_a - lam_prev[act]
        newly = (res_a < config.tol_residual) & (np.abs(dlam) < config.tol_lambda)
        if fixed is None:
            stalled = dlam < -1e-15
            if np.any(stalled):
                idx = np.flatnonzero(act)[stalled]
                alpha[idx] = _batch_shift(Tn, X[idx], config.hessian_margin)
        lam_prev[act] = lam_a
        if np.any(newly):
            done[np.flatnonzero(act)[newly]] = True
            act = ~done
            if not np.any(act):
                break
            Xa = X[act]
            g = g[~newly]
        Xn = g + alpha[act][:, None] * Xa
        nrm = np.linalg.norm(Xn, axis=1)
        nrm[nrm == 0.0] = 1.0
        X[act] = Xn / nrm[:, None]
    return lam, X, resid, done, iters


def ss_hopm(
    T: np.ndarray,
    v0: np.ndarray,
    config: SSHopmConfig | None = None,
    start_index: int = -1,
) -> Eigenpair:
    """One power-method solve from unit start v0.

    The tensor is rescaled to unit max-magnitude internally; reported
    lambda and residual are in the original scale. Non-convergence is
    flagged, not raised.
    """
    config = config or SSHopmConfig()
    T = np.asarray(T, float)
    m = T.ndim
    scale = float(np.max(np.abs(T)))
    if scale == 0.0:
        v = np.asarray(v0, float)
        return Eigenpair(0.0, canonical_sign(v / np.linalg.norm(v)), 0.0, True, start_index, 0)
    Tn = T / scale
    x = np.asarray(v0, float)
    X = (x / np.linalg.norm(x))[None, :].copy()
    lam, X, resid, done, iters = _iterate_batch(Tn, X, config)
    lam0, v = _representative(Tn, X[0])
    res0 = float(np.linalg.norm(tensor_apply(Tn, v, m - 1) - lam0 * v))
    return Eigenpair(
        lam=lam0 * scale,
        v=v,
        residual=res0 * scale,
        converged=bool(res0 < config.certify_residual),
        start_index=start_index,
        iterations=int(iters[0]),
    )


def _representative(Tn: np.ndarray, x: np.ndarray):
    """Pick the reported sign of a converged direction.

    Odd-order eigenpairs come in (lambda, v)/(-lambda, -v) twins; the
    non-negative-lambda twin is reported so the maximal-eigenvalue search
    is sign-unambiguous. At even order lambda is sign-blind and the
    largest-magnitude component is made positive instead.
    """
    m = Tn.ndim
    v = canonical_sign(x)
    lam = float(tensor_apply(Tn, v, m))
    if m % 2 == 1 and lam < 0.0:
        v = -v
        lam = -lam
    return lam, v


def _dedup(pairs: list[Eigenpair], dedup_angle: float) -> list[Eigenpair]:
    """Drop candidates whose direction repeats a kept one (sign-insensitive)."""
    cos_thr = np.cos(dedup_angle)
    kept: list[Eigenpair] = []
    for ep in sorted(pairs, key=lambda e: e.lam, reverse=True):
        if all(abs(float(ep.v @ k.v)) <= cos_thr for k in kept):
            kept.append(ep)
    return kept


def max_eigenpair(
    T: np.ndarray,
    n_starts: int = 100,
    dedup_angle: float = 1e-3,
    seed: int = 0,
    config: SSHopmConfig | None = None,
) -> tuple[Eigenpair, list[Eigenpair]]:
    """Best eigenpair over seeded random unit starts, plus the deduplicated list.

    Odd-order tensors are started from both +/- of every sample since the
    two signs explore the two sign classes of eigenpairs (lambda flips
    sign with v at odd order). Raises EigenSolveError if no start
    converges.
    """
    config = config or SSHopmConfig()
    T = np.asarray(T, float)
    m, n = T.ndim, T.shape[0]
    scale = float(np.max(np.abs(T)))
    rng = np.random.default_rng(seed)
    starts = rng.standard_normal((n_starts, n))
    starts /= np.linalg.norm(starts, axis=1, keepdims=True)
    if scale == 0.0:
        ep = Eigenpair(0.0, canonical_sign(starts[0]), 0.0, True, 0, 0)
        return ep, [ep]
    if m % 2 == 1:
        starts = np.vstack([starts, -starts])
    Tn = T / scale
    lam, X, resid, done, iters = _iterate_batch(Tn, starts.copy(), config)

    candidates = []
    for k in range(X.shape[0]):
        lam_k, v = _representative(Tn, X[k])
        res_k = float(np.linalg.norm(tensor_apply(Tn, v, m - 1) - lam_k * v))
        if res_k < config.certify_residual:
            candidates.append(
                Eigenpair(
                    lam=lam_k * scale,
                    v=v,
                    residual=res_k * scale,
                    converged=True,
                    start_index=k % n_starts,
                    iterations=int(iters[k]),
                )
            )
    if not candidates:
        raise EigenSolveError(
            f"no SS-HOPM start converged in {config.max_iter} iterations "
            f"(order {m}, dim {n}, {n_starts} starts)"
        )
    kept = _dedup(candidates, dedup_angle)
    return kept[0], kept
