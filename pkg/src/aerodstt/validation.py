"""Flow-based validation oracles for the variational tensors.

Everything here checks the integrated flow only -- no partial-derivative
code is reused -- so it stays an independent reference for the
variational-equation results. Nested central differences of the flow
recover the first three orders of flow partials; a memoized flow
evaluator keeps the stencil cost down, and Richardson extrapolation
removes the leading step-size error at orders one and two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .propagation import DynamicsSystem, IntegratorConfig, flow_nd


class _FlowCache:
    """Memoized endpoint of the flow from offsets of a base state."""

    def __init__(self, x0, interval, system, config):
        self.x0 = np.asarray(x0, float)
        self.interval = interval
        self.system = system
        self.config = config
        self._seen: dict = {}

    def at(self, offset: np.ndarray) -> np.ndarray:
        key = tuple(offset.tolist())
        if key not in self._seen:
            sol = flow_nd(self.x0 + offset, self.interval, self.system, self.config)
            self._seen[key] = sol.y[:, -1]
        return self._seen[key]

    @property
    def n_evaluations(self) -> int:
        return len(self._seen)


def _fd_phi1(cache: _FlowCache, n: int, h: float) -> np.ndarray:
    out = np.zeros((n, n))
    for a in range(n):
        e = np.zeros(n)
        e[a] = h
        out[:, a] = (cache.at(e) - cache.at(-e)) / (2.0 * h)
    return out


def _fd_phi2(cache: _FlowCache, n: int, h: float) -> np.ndarray:
    out = np.zeros((n, n, n))
    f0 = cache.at(np.zeros(n))
    for a in range(n):
        ea = np.zeros(n)
        ea[a] = h
        out[:, a, a] = (cache.at(ea) - 2.0 * f0 + cache.at(-ea)) / h**2
        for b in range(a + 1, n):
            eb = np.zeros(n)
            eb[b] = h
            v = (
                cache.at(ea + eb) - cache.at(ea - eb) - cache.at(-ea + eb) + cache.at(-ea - eb)
            ) / (4.0 * h**2)
            out[:, a, b] = v
            out[:, b, a] = v
    return out


def _fd_phi3(cache: _FlowCache, n: int, h: float) -> np.ndarray:
    """Third partials: central difference (in c) of the second-partial stencil."""
    out = np.zeros((n, n, n, n))

    def second(base, a, b):
        ea = np.zeros(n)
        ea[a] = h
        if a == b:
            return (cache.at(base + ea) - 2.0 * cache.at(base) + cache.at(base - ea)) / h**2
        eb = np.zeros(n)
        eb[b] = h
        return (
            cache.at(base + ea + eb)
            - cache.at(base + ea - eb)
            - cache.at(base - ea + eb)
            + cache.at(base - ea - eb)
        ) / (4.0 * h**2)

    for a in range(n):
        for b in range(a, n):
            for c in range(b, n):
                ec = np.zeros(n)
                ec[c] = h
                v = (second(ec, a, b) - second(-ec, a, b)) / (2.0 * h)
                for idx in {(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)}:
                    out[(slice(None),) + idx] = v
    return out


@dataclass(frozen=True)
class FdSteps:
    h1: float = 1e-6
    h2: float = 1e-4
    h3: float = 4e-4
    richardson: bool = True


def flow_fd_partials(
    x0_nd: np.ndarray,
    interval: tuple,
    system: DynamicsSystem,
    order: int = 3,
    steps: FdSteps | None = None,
    config: IntegratorConfig | None = None,
):
    """(phi1, phi2, phi3) of the flow over `interval` by nested differences.

    Returns a tuple padded with None beyond `order`, plus the number of
    flow integrations spent.
    """
    steps = steps or FdSteps()
    config = config or IntegratorConfig()
    n = len(x0_nd)
    cache = _FlowCache(x0_nd, interval, system, config)

    def rich(fn, h):
        if not steps.richardson:
            return fn(cache, n, h)
        return (4.0 * fn(cache, n, h / 2.0) - fn(cache, n, h)) / 3.0

    phi1 = rich(_fd_phi1, steps.h1)
    phi2 = rich(_fd_phi2, steps.h2) if order >= 2 else None
    phi3 = _fd_phi3(cache, n, steps.h3) if order >= 3 else None
    return (phi1, phi2, phi3), cache.n_evaluations


def tensor_rel_error(approx: np.ndarray, oracle: np.ndarray) -> float:
    """Max abs deviation normalized by the oracle's largest entry."""
    scale = float(np.max(np.abs(oracle)))
    if scale == 0.0:
        return float(np.max(np.abs(approx)))
    return float(np.max(np.abs(approx - oracle)) / scale)


def fit_loglog_slope(magnitudes, errors, floor: float):
    """Least-squares slope of log(error) vs log(magnitude) above a noise floor.

    Flow-integration noise puts a floor under the measurable Taylor
    remainder; points at or below the floor carry no order information
    and are excluded. Returns (slope, n_points_used); slope is NaN when
    fewer than three points survive.
    """
    mags = np.asarray(magnitudes, float)
    errs = np.asarray(errors, float)
    keep = errs > floor
    if keep.sum() < 3:
        return float("nan"), int(keep.sum())
    lx, ly = np.log10(mags[keep]), np.log10(errs[keep])
    slope = float(np.polyfit(lx, ly, 1)[0])
    return slope, int(keep.sum())
