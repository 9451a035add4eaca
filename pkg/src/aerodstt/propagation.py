"""Reference-trajectory and variational integration, STT algebra.

State transition tensors over an interval (t_from, t_to) collect the
partials of the solution flow at t_to with respect to the state at
t_from, to third order. Per-interval tensors integrate the variational
equations jointly with the reference state in one augmented system
(identity/zero initial conditions at the interval start); maps over wider
spans are produced algebraically by composition.

Everything here is nondimensional and dimension-generic; the aerocapture
system is one provider among possible test systems.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from . import dynamics
from .kernels import tensor_apply, variational_rhs
from .models import ModelSet, StateVector, NONDIMENSIONAL

_DUMMY2 = np.zeros((1, 1, 1))
_DUMMY3 = np.zeros((1, 1, 1, 1))


class IntegrationError(RuntimeError):
    """Adaptive integration failed; `t_fail` is the time reached."""

    def __init__(self, message: str, t_fail: float):
        super().__init__(f"{message} (t = {t_fail:.6g})")
        self.t_fail = t_fail


class IntervalMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class IntegratorConfig:
    rtol: float = 1e-12
    atol: float = 1e-12
    max_step: float = math.inf
    method: str = "DOP853"
    dense_output: bool = False

    def __post_init__(self):
        if self.rtol <= 0.0 or self.atol <= 0.0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class DynamicsSystem:
    """Reference dynamics plus the partials driving the variational equations.

    ``rhs`` always drives the reference trajectory; ``partials`` may
    belong to a component of the dynamics (decomposed variational
    integration runs along the full-dynamics reference).
    """

    n: int
    rhs: Callable[[np.ndarray], np.ndarray]
    partials: Callable[[np.ndarray, int], tuple]


def aero_system(models: ModelSet, which: str = "full") -> DynamicsSystem:
    """Aerocapture dynamics, with partials for the selected component."""
    from .partials import eval_partials

    prm = dynamics.build_params(models)

    def rhs(x):
        out = np.empty(7)
        dynamics.eom_nd(x, prm, out)
        return out

    def parts(x, order):
        return eval_partials(x, prm, order, which)

    return DynamicsSystem(n=7, rhs=rhs, partials=parts)


@dataclass(frozen=True)
class TrajectoryGrid:
    """Reference trajectory sampled on a uniform nondimensional time grid."""

    times: np.ndarray
    states: np.ndarray  # (len(times), n)
    dt_grid: float
    dense: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if np.any(np.diff(self.times) <= 0.0):
            raise ValueError("grid times must be strictly increasing")

    def state_at(self, t: float) -> np.ndarray:
        if self.dense is None:
            raise ValueError("trajectory was integrated without dense output")
        return self.dense(t)

    @property
    def n_intervals(self) -> int:
        return len(self.times) - 1


@dataclass(frozen=True)
class SttSet:
    """Flow partials over (t_from, t_to): phi1 is the STM; phi2/phi3 are
    trailing-index symmetric. Orders above ``order`` are None."""

    t_from: float
    t_to: float
    order: int
    phi1: np.ndarray
    phi2: np.ndarray | None = None
    phi3: np.ndarray | None = None

    @property
    def n(self) -> int:
        return self.phi1.shape[0]

    @classmethod
    def identity(cls, t: float, n: int, order: int = 3) -> "SttSet":
        return cls(
            t_from=t,
            t_to=t,
            order=order,
            phi1=np.eye(n),
            phi2=np.zeros((n, n, n)) if order >= 2 else None,
            phi3=np.zeros((n, n, n, n)) if order >= 3 else None,
        )

    def to_dict(self) -> dict:
        """JSON-ready form; tensor entries in row-major (C) index order."""
        d = {
            "t_from": self.t_from,
            "t_to": self.t_to,
            "order": self.order,
            "n": self.n,
            "phi1": self.phi1.tolist(),
        }
        if self.phi2 is not None:
            d["phi2"] = self.phi2.tolist()
        if self.phi3 is not None:
            d["phi3"] = self.phi3.tolist()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SttSet":
        return cls(
            t_from=d["t_from"],
            t_to=d["t_to"],
            order=d["order"],
            phi1=np.array(d["phi1"]),
            phi2=np.array(d["phi2"]) if "phi2" in d else None,
            phi3=np.array(d["phi3"]) if "phi3" in d else None,
        )


def save_stts(path, stts, meta: dict | None = None):
    payload = {"meta": meta or {}, "stts": [s.to_dict() for s in stts]}
    with open(path, "w") as fh:
        json.dump(payload, fh)


def load_stts(path):
    with open(path) as fh:
        payload = json.load(fh)
    return [SttSet.from_dict(d) for d in payload["stts"]], payload["meta"]


def symmetrize_trailing(T: np.ndarray) -> np.ndarray:
    """Average over permutations of all indices after the first."""
    k = T.ndim - 1
    if k < 2:
        return T
    acc = np.zeros_like(T)
    perms = list(permutations(range(1, T.ndim)))
    for p in perms:
        acc += T.transpose((0,) + p)
    return acc / len(perms)


# ---------------------------------------------------------------------------
# integration


def _solve(rhs, t_span, y0, config: IntegratorConfig, t_eval=None, dense=False):
    sol = solve_ivp(
        rhs,
        t_span,
        y0,
        method=config.method,
        rtol=config.rtol,
        atol=config.atol,
        max_step=config.max_step,
        t_eval=t_eval,
        dense_output=dense,
    )
    if not sol.success:
        raise IntegrationError(sol.message, float(sol.t[-1]) if len(sol.t) else t_span[0])
    return sol


def flow_nd(
    x0_nd: np.ndarray,
    t_span: tuple,
    system: DynamicsSystem,
    config: IntegratorConfig | None = None,
    t_eval=None,
    dense: bool = False,
):
    """Integrate the plain state flow; returns the scipy solution object."""
    config = config or IntegratorConfig()
    return _solve(lambda t, x: system.rhs(x), t_span, np.asarray(x0_nd, float),
                  config, t_eval=t_eval, dense=dense)


def _grid_times(t_span: tuple, dt: float) -> np.ndarray:
    t0, tf = t_span
    n_int = max(1, int(math.ceil((tf - t0) / dt - 1e-9)))
    times = t0 + dt * np.arange(n_int + 1)
    times[-1] = tf
    return times


def integrate_trajectory(
    x0: StateVector,
    t_span_s: tuple,
    models: ModelSet,
    config: IntegratorConfig | None = None,
    dt_grid_s: float = 10.0,
) -> TrajectoryGrid:
    """Reference trajectory over t_span_s (seconds), sampled every dt_grid_s.

    The trajectory is stored nondimensionally; a dense interpolant is kept
    for oracle evaluations between grid points.
    """
    config = config or IntegratorConfig()
    sc = models.scales
    system = aero_system(models)
    x0_nd = x0.nondimensionalized(sc).to_array()
    dynamics._check_domain(x0_nd)
    t_span = (t_span_s[0] / sc.time_ref, t_span_s[1] / sc.time_ref)
    dt = dt_grid_s / sc.time_ref
    times = _grid_times(t_span, dt)
    sol = _solve(lambda t, x: system.rhs(x), t_span, x0_nd, config,
                 t_eval=times, dense=True)
    return TrajectoryGrid(times=sol.t, states=sol.y.T.copy(), dt_grid=dt, dense=sol.sol)


def _augmented_rhs(system: DynamicsSystem, order: int):
    n = system.n
    n2, n3 = n * n, n * n * n

    def rhs(t, y):
        x = y[:n]
        A, B, C = system.partials(x, order)
        p1 = y[n : n + n2].reshape(n, n)
        p2 = y[n + n2 : n + n2 + n3].reshape(n, n, n) if order >= 2 else _DUMMY2
        p3 = y[n + n2 + n3 :].reshape(n, n, n, n) if order >= 3 else _DUMMY3
        d1 = np.empty((n, n))
        d2 = np.empty((n, n, n)) if order >= 2 else _DUMMY2
        d3 = np.empty((n, n, n, n)) if order >= 3 else _DUMMY3
        variational_rhs(
            A,
            B if B is not None else _DUMMY2,
            C if C is not None else _DUMMY3,
            p1,
            p2,
            p3,
            d1,
            d2,
            d3,
            order,
        )
        out = [system.rhs(x), d1.ravel()]
        if order >= 2:
            out.append(d2.ravel())
        if order >= 3:
            out.append(d3.ravel())
        return np.concatenate(out)

    return rhs


def integrate_stt_nd(
    x0_nd: np.ndarray,
    interval: tuple,
    system: DynamicsSystem,
    order: int = 3,
    config: IntegratorConfig | None = None,
):
    """One SttSet over `interval` with identity/zero initial conditions.

    Returns (stt, x_end) where x_end is the reference state at the end of
    the interval.
    """
    if not 1 <= order <= 3:
        raise ValueError("order must be 1, 2 or 3")
    config = config or IntegratorConfig()
    n = system.n
    if interval[0] == interval[1]:
        return SttSet.identity(interval[0], n, order), np.asarray(x0_nd, float).copy()
    y0 = [np.asarray(x0_nd, float), np.eye(n).ravel()]
    if order >= 2:
        y0.append(np.zeros(n**3))
    if order >= 3:
        y0.append(np.zeros(n**4))
    sol = _solve(_augmented_rhs(system, order), interval, np.concatenate(y0), config)
    yf = sol.y[:, -1]
    phi1 = yf[n : n + n * n].reshape(n, n).copy()
    phi2 = phi3 = None
    if order >= 2:
        phi2 = yf[n + n * n : n + n * n + n**3].reshape(n, n, n)
        phi2 = symmetrize_trailing(phi2)
    if order >= 3:
        phi3 = yf[n + n * n + n**3 :].reshape(n, n, n, n)
        phi3 = symmetrize_trailing(phi3)
    stt = SttSet(
        t_from=interval[0], t_to=interval[1], order=order,
        phi1=phi1, phi2=phi2, phi3=phi3,
    )
    return stt, yf[:n].copy()


def integrate_stts(
    x0: StateVector,
    t_span_s: tuple,
    models: ModelSet,
    order: int = 3,
    dt_grid_s: float = 10.0,
    config: IntegratorConfig | None = None,
    which: str = "full",
) -> tuple[TrajectoryGrid, list[SttSet]]:
    """Per-interval SttSets over consecutive grid intervals.

    The variational equations for the selected dynamics component are
    integrated along the full-dynamics reference trajectory; tensors
    restart from identity/zero at every grid point.
    """
    config = config or IntegratorConfig()
    sc = models.scales
    system = aero_system(models, which=which)
    x0_nd = x0.nondimensionalized(sc).to_array()
    dynamics._check_domain(x0_nd)
    t_span = (t_span_s[0] / sc.time_ref, t_span_s[1] / sc.time_ref)
    dt = dt_grid_s / sc.time_ref
    times = _grid_times(t_span, dt)

    stts = []
    states = [x0_nd]
    x = x0_nd
    for k in range(len(times) - 1):
        stt, x = integrate_stt_nd(x, (times[k], times[k + 1]), system, order, config)
        stts.append(stt)
        states.append(x)
    grid = TrajectoryGrid(times=times, states=np.array(states), dt_grid=dt)
    return grid, stts


# ---------------------------------------------------------------------------
# algebra


def compose_stts(ab: SttSet, bc: SttSet) -> SttSet:
    """Chain two maps (t_a -> t_b) and (t_b -> t_c) into (t_a -> t_c)."""
    if ab.order != bc.order:
        raise IntervalMismatchError("orders differ")
    if abs(ab.t_to - bc.t_from) > 1e-12 * max(1.0, abs(ab.t_to)):
        raise IntervalMismatchError(
            f"junction mismatch: {ab.t_to!r} vs {bc.t_from!r}"
        )
    n, order = ab.n, ab.order
    d1 = np.empty((n, n))
    d2 = np.empty((n, n, n)) if order >= 2 else _DUMMY2
    d3 = np.empty((n, n, n, n)) if order >= 3 else _DUMMY3
    # the composition contractions coincide with the variational structure:
    # (A, B, C) <- later map, (p1, p2, p3) <- earlier map
    variational_rhs(
        bc.phi1,
        bc.phi2 if bc.phi2 is not None else _DUMMY2,
        bc.phi3 if bc.phi3 is not None else _DUMMY3,
        ab.phi1,
        ab.phi2 if ab.phi2 is not None else _DUMMY2,
        ab.phi3 if ab.phi3 is not None else _DUMMY3,
        d1,
        d2,
        d3,
        order,
    )
    return SttSet(
        t_from=ab.t_from,
        t_to=bc.t_to,
        order=order,
        phi1=d1,
        phi2=symmetrize_trailing(d2) if order >= 2 else None,
        phi3=symmetrize_trailing(d3) if order >= 3 else None,
    )


def compose_chain(stts: list[SttSet]) -> SttSet:
    """Compose consecutive per-interval maps left to right."""
    acc = stts[0]
    for s in stts[1:]:
        acc = compose_stts(acc, s)
    return acc


def propagate_perturbation_stt(stt: SttSet, dx: np.ndarray, m: int | None = None) -> np.ndarray:
    """Taylor propagation: sum_p (1/p!) phi_p contracted with dx p times."""
    m = stt.order if m is None else m
    if m > stt.order:
        raise ValueError(f"m={m} exceeds stored order {stt.order}")
    dx = np.asarray(dx, float)
    out = stt.phi1 @ dx
    if m >= 2:
        out = out + 0.5 * tensor_apply(stt.phi2, dx, 2)
    if m >= 3:
        out = out + tensor_apply(stt.phi3, dx, 3) / 6.0
    return out
