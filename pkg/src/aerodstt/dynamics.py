"""3DOF entry dynamics over a rotating oblate planet with exponential atmosphere.

State: x = [r, theta, phi, V, gamma, psi, zeta] with V the planet-relative
speed, gamma the flight path angle (negative descending), psi the heading,
and zeta = ln(density) used as a state so atmosphere variation rides along
in perturbations. The right-hand side splits exactly into a conservative
part (kinematics, gravity, rotation) and a dissipative part (lift, drag,
and the log-density equation); the full dynamics are always evaluated as
their sum so the decomposition identity holds to the last bit.

All core evaluations are nondimensional; the public wrappers accept either
frame and convert.
"""

from __future__ import annotations

import math

import numpy as np

from ._jit import njit
from .models import (
    IR,
    ITH,
    IPH,
    IV,
    IGA,
    IPS,
    IZE,
    N_STATES,
    DIMENSIONAL,
    NONDIMENSIONAL,
    DynamicsDomainError,
    ModelSet,
    PlanetModel,
    StateVector,
)

# prm layout shared by the EOM and partial-derivative kernels
NPRM = 8
PJ2, POM, PCD, PLD, PCSG, PSSG, PHFAC, PZREF = range(NPRM)

# domain guards (nondimensional)
COS_PHI_TOL = 1e-9
V_TOL = 1e-12


def build_params(models: ModelSet) -> np.ndarray:
    """Pack the nondimensional dynamics constants used by the kernels."""
    planet, atmo, veh = models.planet, models.atmosphere, models.vehicle
    sc = models.scales
    c_drag = 0.5 * planet.Rp / veh.beta if atmo.enabled else 0.0
    return np.array(
        [
            planet.J2,
            planet.Omega * sc.time_ref,
            c_drag,
            veh.lift_to_drag,
            math.cos(veh.sigma),
            math.sin(veh.sigma),
            1.0 / ((atmo.H / planet.Rp) * atmo.zeta_ref),
            atmo.zeta_ref,
        ]
    )


@njit(cache=True)
def eom_cons_nd(x, prm, out):
    """Conservative right-hand side (gravity, rotation, kinematics), in place."""
    r = x[0]
    phi = x[2]
    V = x[3]
    gamma = x[4]
    psi = x[5]
    J2 = prm[0]
    Om = prm[1]

    sph = math.sin(phi)
    cph = math.cos(phi)
    sga = math.sin(gamma)
    cga = math.cos(gamma)
    sps = math.sin(psi)
    cps = math.cos(psi)

    r2 = r * r
    j2r2 = J2 / r2
    g_r = (1.0 + j2r2 * (1.5 - 4.5 * sph * sph)) / r2
    g_ph = (j2r2 * 3.0 * sph * cph) / r2
    om2r = Om * Om * r

    out[0] = V * sga
    out[1] = V * cga * sps / (r * cph)
    out[2] = V * cga * cps / r
    out[3] = -g_r * sga - g_ph * cga * cps + om2r * cph * (sga * cph - cga * sph * cps)
    out[4] = (
        (V * V / r - g_r) * cga
        + g_ph * sga * cps
        + 2.0 * Om * V * cph * sps
        + om2r * cph * (cga * cph + sga * cps * sph)
    ) / V
    out[5] = (
        (V * V / r) * cga * sps * sph / cph
        + g_ph * sps / cga
        - 2.0 * Om * V * (sga / cga * cps * cph - sph)
        + om2r * sps * sph * cph / cga
    ) / V
    out[6] = 0.0


@njit(cache=True)
def eom_diss_nd(x, prm, out):
    """Dissipative right-hand side (lift, drag, log-density), in place."""
    V = x[3]
    gamma = x[4]
    zeta = x[6]

    sga = math.sin(gamma)
    cga = math.cos(gamma)

    rho = math.exp(zeta * prm[7])
    drag = prm[2] * rho * V * V
    lift = prm[3] * drag

    out[0] = 0.0
    out[1] = 0.0
    out[2] = 0.0
    out[3] = -drag
    out[4] = lift * prm[4] / V
    out[5] = lift * prm[5] / (V * cga)
    out[6] = -V * sga * prm[6]


@njit(cache=True)
def eom_nd(x, prm, out):
    """Full right-hand side as the exact sum of the two components."""
    tmp = np.empty(7)
    eom_cons_nd(x, prm, out)
    eom_diss_nd(x, prm, tmp)
    for i in range(7):
        out[i] = out[i] + tmp[i]


def _check_domain(x_nd: np.ndarray):
    if x_nd[IV] <= V_TOL:
        raise DynamicsDomainError(f"speed {x_nd[IV]:.3e} below tolerance")
    if abs(math.cos(x_nd[IPH])) < COS_PHI_TOL:
        raise DynamicsDomainError("phi too close to +/-90 deg (polar singularity)")


def _as_nd_array(x: StateVector, models: ModelSet) -> np.ndarray:
    x_nd = x.nondimensionalized(models.scales).to_array()
    _check_domain(x_nd)
    return x_nd


def _deriv_to_frame(dx_nd: np.ndarray, frame: str, models: ModelSet) -> np.ndarray:
    if frame == NONDIMENSIONAL:
        return dx_nd
    sc = models.scales
    return dx_nd * sc.state_factors() / sc.time_ref


def eom(x: StateVector, models: ModelSet) -> np.ndarray:
    """State derivative [dr, dtheta, dphi, dV, dgamma, dpsi, dzeta].

    Returned in the same frame as ``x`` (per-second when dimensional).
    Raises DynamicsDomainError for V <= 0 or |cos phi| below tolerance.
    """
    x_nd = _as_nd_array(x, models)
    prm = build_params(models)
    out = np.empty(N_STATES)
    eom_nd(x_nd, prm, out)
    return _deriv_to_frame(out, x.frame, models)


def decompose_eom(x: StateVector, models: ModelSet) -> tuple[np.ndarray, np.ndarray]:
    """(f_C, f_D): conservative and dissipative components, summing to eom(x)."""
    x_nd = _as_nd_array(x, models)
    prm = build_params(models)
    f_c = np.empty(N_STATES)
    f_d = np.empty(N_STATES)
    eom_cons_nd(x_nd, prm, f_c)
    eom_diss_nd(x_nd, prm, f_d)
    return (
        _deriv_to_frame(f_c, x.frame, models),
        _deriv_to_frame(f_d, x.frame, models),
    )


def gravity(r: float, phi: float, planet: PlanetModel) -> tuple[float, float]:
    """(g_r, g_phi) of the J2 gravity field at radius r [m] and angle phi [rad]."""
    if r <= 0.0:
        raise DynamicsDomainError("r must be positive")
    sph = math.sin(phi)
    cph = math.cos(phi)
    base = planet.mu / (r * r)
    j2term = planet.J2 * (planet.Rp / r) ** 2
    g_r = base * (1.0 + j2term * (1.5 - 4.5 * sph * sph))
    g_phi = base * (j2term * 3.0 * sph * cph)
    return g_r, g_phi


def density(h: float, atmo) -> float:
    """Exponential-atmosphere density [kg/m^3] at altitude h [m]."""
    return atmo.rho0 * math.exp((atmo.h0 - h) / atmo.H)


def aero_accels(zeta: float, V: float, vehicle, atmo) -> tuple[float, float]:
    """(L, D) accelerations [m/s^2] from log-density zeta [ln(kg/m^3)] and V [m/s].

    D = rho*V^2/(2*beta) with rho = exp(zeta); L = (L/D)*D. Returns (0, 0)
    when the atmosphere model is disabled.
    """
    if not atmo.enabled:
        return 0.0, 0.0
    drag = math.exp(zeta) * V * V / (2.0 * vehicle.beta)
    return vehicle.lift_to_drag * drag, drag


def dynamic_pressure(x: StateVector, models: ModelSet) -> float:
    """0.5*rho*V^2 [Pa] at the given state (either frame).

    Zero when the atmosphere model is disabled (the vacuum configuration
    stands in for the rho -> 0 limit).
    """
    if not models.atmosphere.enabled:
        return 0.0
    xd = x.redimensionalized(models.scales)
    return 0.5 * math.exp(xd.zeta) * xd.V**2


def accel_ratio(x: StateVector, models: ModelSet) -> float:
    """sqrt(L^2+D^2)/sqrt(g_r^2+g_phi^2): aero-to-gravity acceleration ratio."""
    xd = x.redimensionalized(models.scales)
    lift, drag = aero_accels(xd.zeta, xd.V, models.vehicle, models.atmosphere)
    g_r, g_phi = gravity(xd.r, xd.phi, models.planet)
    return math.hypot(lift, drag) / math.hypot(g_r, g_phi)


def relative_to_inertial(
    V: float, gamma: float, psi: float, x_position, planet: PlanetModel
):
    """Map planet-relative (V, gamma) to inertial (V_i, gamma_i, psi_i).

    x_position is (r, theta, phi) in meters/radians. The atmosphere moves
    eastward at Omega*r*cos(phi); its velocity adds to the relative
    velocity expressed in the local (up, east, north) frame.
    """
    r, _, phi = x_position
    w = planet.Omega * r * math.cos(phi)
    up = V * math.sin(gamma)
    east = V * math.cos(gamma) * math.sin(psi) + w
    north = V * math.cos(gamma) * math.cos(psi)
    v_i = math.sqrt(up * up + east * east + north * north)
    gamma_i = math.atan2(up, math.hypot(east, north))
    psi_i = math.atan2(east, north)
    return v_i, gamma_i, psi_i


def inertial_to_relative(
    V_inertial: float,
    gamma_inertial: float,
    psi: float,
    x_position,
    planet: PlanetModel,
):
    """Map inertial (V, gamma) to planet-relative (V, gamma) at fixed relative heading.

    Inverse of relative_to_inertial when the relative heading psi is known:
    the vertical component is frame-invariant and the horizontal relative
    speed c solves c^2 + 2*c*sin(psi)*w + w^2 = (V_i*cos(gamma_i))^2 with
    w = Omega*r*cos(phi). Degenerate (no real or positive root) states
    raise DynamicsDomainError.
    """
    if V_inertial <= 0.0:
        raise DynamicsDomainError("inertial speed must be positive")
    r, _, phi = x_position
    w = planet.Omega * r * math.cos(phi)
    up = V_inertial * math.sin(gamma_inertial)
    h_i = V_inertial * math.cos(gamma_inertial)
    sps = math.sin(psi)
    disc = (w * sps) ** 2 - w * w + h_i * h_i
    if disc < 0.0:
        raise DynamicsDomainError("no relative velocity matches the given heading")
    c = -w * sps + math.sqrt(disc)
    if c <= 0.0:
        raise DynamicsDomainError("degenerate zero relative horizontal speed")
    V = math.hypot(c, up)
    gamma = math.atan2(up, c)
    return V, gamma
