"""Aerocapture quantities of interest: specific orbital energy and apoapsis radius.

Both are orbital quantities and are evaluated from the inertial velocity
reconstructed from the planet-relative state (capture is judged in the
inertial frame). Closed-form partials with respect to the nondimensional
state come from the generated module and feed the quantity-of-interest
stretching tensors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _partials_gen as gen
from .models import (
    DIMENSIONAL,
    N_STATES,
    DynamicsDomainError,
    ModelSet,
    StateVector,
)

# margin on the nondimensional ellipticity denominator 2/r - V_i^2
CAPTURE_MARGIN = 1e-6
# margin on the apoapsis discriminant for partial evaluation
DISC_MARGIN = 1e-10


class NotCapturedError(ValueError):
    """State is hyperbolic or parabolic: no apoapsis exists."""


@dataclass(frozen=True)
class QoiPartials:
    """Value and partials of a scalar quantity at a reference final state.

    eta1/eta2/eta3 are the first/second/third partials with respect to
    the nondimensional state; eta2 and eta3 are fully symmetric. Entries
    beyond the requested order are None.
    """

    kind: str
    value: float
    eta1: np.ndarray
    eta2: np.ndarray | None = None
    eta3: np.ndarray | None = None

    @classmethod
    def identity(cls, n: int = N_STATES) -> "QoiPartials":
        """The vector-valued identity quantity q(x) = x (collapses the
        quantity-of-interest tensors onto the ordinary family)."""
        return cls(
            kind="identity",
            value=0.0,
            eta1=np.eye(n),
            eta2=np.zeros((n, n, n)),
            eta3=np.zeros((n, n, n, n)),
        )


def _qoi_prm(models: ModelSet) -> np.ndarray:
    return np.array([models.planet.Omega * models.scales.time_ref])


def _nd_state(x: StateVector, models: ModelSet) -> np.ndarray:
    return x.nondimensionalized(models.scales).to_array()


def specific_energy(x: StateVector, models: ModelSet) -> float:
    """Specific orbital energy V_i^2/2 - mu/r using the inertial speed.

    Returned in the frame of ``x``: J/kg for a dimensional state,
    nondimensional otherwise.
    """
    e_nd = float(gen.qoi_value_energy(_nd_state(x, models), _qoi_prm(models)))
    if x.frame == DIMENSIONAL:
        return e_nd * models.scales.speed_ref**2
    return e_nd


def _apsis_pieces_nd(x_nd: np.ndarray, prm_q: np.ndarray) -> tuple[float, float]:
    """(denominator 2/r - V_i^2, discriminant 1 - V_i^2 r^2 cos^2(g_i)/a)."""
    e_nd = float(gen.qoi_value_energy(x_nd, prm_q))
    r = x_nd[0]
    vi2 = 2.0 * (e_nd + 1.0 / r)
    up = x_nd[3] * math.sin(x_nd[4])  # vertical speed, frame-invariant
    hor2 = vi2 - up * up
    denom = 2.0 / r - vi2
    disc = 1.0 - hor2 * r * r * denom
    return denom, disc


def semi_major_axis(x: StateVector, models: ModelSet) -> float:
    """a = mu / (2*mu/r - V_i^2); negative for hyperbolic states."""
    x_nd = _nd_state(x, models)
    denom, _ = _apsis_pieces_nd(x_nd, _qoi_prm(models))
    if denom == 0.0:
        raise NotCapturedError("parabolic state: semi-major axis undefined")
    a_nd = 1.0 / denom
    return a_nd * models.scales.length_ref if x.frame == DIMENSIONAL else a_nd


def apoapsis_radius(x: StateVector, models: ModelSet, margin: float = 0.0) -> float:
    """r_a = a(1 + sqrt(1 - V_i^2 r^2 cos^2(gamma_i)/(mu a))).

    Raises NotCapturedError unless 2*mu/r - V_i^2 > margin (the state must
    be elliptical); a slightly negative discriminant (within rounding of
    a circular orbit) is clamped, and anything lower is a domain error.
    """
    x_nd = _nd_state(x, models)
    denom, disc = _apsis_pieces_nd(x_nd, _qoi_prm(models))
    if denom <= margin:
        raise NotCapturedError(
            f"not captured: 2*mu/r - V_i^2 = {denom:.3e} (nondimensional) <= {margin:.1e}"
        )
    if disc < -DISC_MARGIN:
        raise DynamicsDomainError(f"apoapsis discriminant {disc:.3e} is negative")
    ra_nd = (1.0 + math.sqrt(max(disc, 0.0))) / denom
    return ra_nd * models.scales.length_ref if x.frame == DIMENSIONAL else ra_nd


_QOI_FILLS = {
    "energy": (gen.qoi_value_energy, gen.fill_qoi1_energy, gen.fill_qoi2_energy, gen.fill_qoi3_energy),
    "apoapsis": (gen.qoi_value_apoapsis, gen.fill_qoi1_apoapsis, gen.fill_qoi2_apoapsis, gen.fill_qoi3_apoapsis),
}


def qoi_partials(
    x_z: StateVector,
    kind: str,
    models: ModelSet,
    order: int = 3,
    margin: float = CAPTURE_MARGIN,
) -> QoiPartials:
    """Closed-form partials of the quantity at the reference final state x_z.

    Value and partials are nondimensional (per unit nondimensional state).
    The apoapsis kind refuses states that are hyperbolic within ``margin``
    or too close to circular for the square root to be differentiable.
    """
    if kind not in _QOI_FILLS:
        raise ValueError(f"kind must be one of {tuple(_QOI_FILLS)}, got {kind!r}")
    if not 1 <= order <= 3:
        raise ValueError("order must be 1, 2 or 3")
    x_nd = _nd_state(x_z, models)
    prm_q = _qoi_prm(models)
    if kind == "apoapsis":
        denom, disc = _apsis_pieces_nd(x_nd, prm_q)
        if denom <= margin:
            raise NotCapturedError(
                f"apoapsis partials at non-elliptical state: "
                f"2*mu/r - V_i^2 = {denom:.3e} <= margin {margin:.1e} "
                f"(r = {x_nd[0]:.6f}, V = {x_nd[3]:.6f} nondimensional)"
            )
        if disc <= DISC_MARGIN:
            raise DynamicsDomainError(
                "apoapsis partials singular near a circular orbit"
            )
    value_fn, f1, f2, f3 = _QOI_FILLS[kind]
    n = N_STATES
    eta1 = np.zeros(n)
    f1(x_nd, prm_q, eta1.reshape(1, n))
    eta2 = eta3 = None
    if order >= 2:
        eta2 = np.zeros((n, n))
        f2(x_nd, prm_q, eta2.reshape(1, n, n))
    if order >= 3:
        eta3 = np.zeros((n, n, n))
        f3(x_nd, prm_q, eta3.reshape(1, n, n, n))
    return QoiPartials(
        kind=kind, value=float(value_fn(x_nd, prm_q)), eta1=eta1, eta2=eta2, eta3=eta3
    )
