"""Hot tensor-contraction kernels with numba and pure-numpy implementations.

The variational right-hand side and the power-iteration contractions
dominate runtime. Each kernel exists twice: an njit loop version and a
tensordot version. The module-level names dispatch on the JIT flag (see
:mod:`aerodstt._jit`); both implementations stay importable so they can
be cross-checked and benchmarked against each other.
"""

from __future__ import annotations

import numpy as np

from ._jit import NUMBA_ENABLED, njit


# ---------------------------------------------------------------------------
# variational right-hand sides
#
# p1[a, y] = dx_a/dx0_y and so on; A, B, C are the dynamics partials at the
# current reference state. d1 = A p1; d2 and d3 follow the chain rule with
# trailing-index-symmetric second/third tensors.


def _var_rhs_numpy(A, B, C, p1, p2, p3, d1, d2, d3, order):
    n = A.shape[0]
    d1[:] = A @ p1
    if order >= 2:
        t = np.tensordot(B, p1, axes=([1], [0]))  # [i, be, a]
        w2 = np.tensordot(t, p1, axes=([1], [0]))  # [i, a, b]
        d2[:] = (A @ p2.reshape(n, -1)).reshape(n, n, n) + w2
    if order >= 3:
        m = np.tensordot(B, p2, axes=([1], [0]))  # [i, be, a, b]
        term = np.tensordot(m, p1, axes=([1], [0]))  # [i, a, b, c]
        u = np.tensordot(C, p1, axes=([1], [0]))
        u = np.tensordot(u, p1, axes=([1], [0]))
        u = np.tensordot(u, p1, axes=([1], [0]))  # [i, a, b, c]
        d3[:] = (
            (A @ p3.reshape(n, -1)).reshape(n, n, n, n)
            + term
            + term.transpose(0, 1, 3, 2)
            + term.transpose(0, 3, 1, 2)
            + u
        )


@njit(cache=True)
def _var_rhs_loops(A, B, C, p1, p2, p3, d1, d2, d3, order):
    n = A.shape[0]
    for i in range(n):
        for a in range(n):
            s = 0.0
            for al in range(n):
                s += A[i, al] * p1[al, a]
            d1[i, a] = s
    if order >= 2:
        t = np.empty((n, n, n))
        for i in range(n):
            for be in range(n):
                for a in range(n):
                    s = 0.0
                    for al in range(n):
                        s += B[i, al, be] * p1[al, a]
                    t[i, be, a] = s
        for i in range(n):
            for a in range(n):
                for b in range(n):
                    s = 0.0
                    for al in range(n):
                        s += A[i, al] * p2[al, a, b]
                    for be in range(n):
                        s += t[i, be, a] * p1[be, b]
                    d2[i, a, b] = s
    if order >= 3:
        m = np.empty((n, n, n, n))
        for i in range(n):
            for be in range(n):
                for a in range(n):
                    for b in range(n):
                        s = 0.0
                        for al in range(n):
                            s += B[i, al, be] * p2[al, a, b]
                        m[i, be, a, b] = s
        term = np.empty((n, n, n, n))
        for i in range(n):
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        s = 0.0
                        for be in range(n):
                            s += m[i, be, a, b] * p1[be, c]
                        term[i, a, b, c] = s
        u1 = np.empty((n, n, n, n))
        for i in range(n):
            for be in range(n):
                for gm in range(n):
                    for a in range(n):
                        s = 0.0
                        for al in range(n):
                            s += C[i, al, be, gm] * p1[al, a]
                        u1[i, be, gm, a] = s
        u2 = np.empty((n, n, n, n))
        for i in range(n):
            for gm in range(n):
                for a in range(n):
                    for b in range(n):
                        s = 0.0
                        for be in range(n):
                            s += u1[i, be, gm, a] * p1[be, b]
                        u2[i, gm, a, b] = s
        for i in range(n):
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        s = 0.0
                        for al in range(n):
                            s += A[i, al] * p3[al, a, b, c]
                        for gm in range(n):
                            s += u2[i, gm, a, b] * p1[gm, c]
                        s += term[i, a, b, c] + term[i, a, c, b] + term[i, b, c, a]
                        d3[i, a, b, c] = s


variational_rhs = _var_rhs_loops if NUMBA_ENABLED else _var_rhs_numpy


# ---------------------------------------------------------------------------
# symmetric-tensor contractions (shared by the eigensolver and CGT checks)


def _apply_numpy(T, v, k):
    out = T
    for _ in range(k):
        out = np.tensordot(out, v, axes=([out.ndim - 1], [0]))
    return out


@njit(cache=True)
def _apply3_loops(T, v):
    n = T.shape[0]
    out = np.zeros(n)
    for i in range(n):
        s = 0.0
        for a in range(n):
            va = v[a]
            for b in range(n):
                s += T[i, a, b] * va * v[b]
        out[i] = s
    return out


@njit(cache=True)
def _apply4_loops(T, v):
    n = T.shape[0]
    out = np.zeros(n)
    for i in range(n):
        s = 0.0
        for a in range(n):
            va = v[a]
            for b in range(n):
                vab = va * v[b]
                for c in range(n):
                    s += T[i, a, b, c] * vab * v[c]
        out[i] = s
    return out


def tensor_apply(T: np.ndarray, v: np.ndarray, k: int) -> np.ndarray:
    """Contract the last k indices of T with copies of v."""
    m = T.ndim
    if NUMBA_ENABLED and k == m - 1:
        if m == 3:
            return _apply3_loops(T, v)
        if m == 4:
            return _apply4_loops(T, v)
    return _apply_numpy(T, v, k)
