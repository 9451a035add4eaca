"""Domain models: planet, atmosphere, vehicle, scaling, and the 7-state vector.

All model fields are SI (meters, seconds, kilograms, radians). The state
vector carries a ``frame`` flag distinguishing dimensional SI values from
the nondimensional form used by the numerics:

    r / length_ref, angles unchanged, V / speed_ref, zeta / zeta_ref

with length_ref = Rp, speed_ref = sqrt(mu/Rp), time_ref = Rp/speed_ref,
and zeta = ln(density in kg/m^3) divided by the fixed normalization
factor zeta_ref.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
import yaml

N_STATES = 7
# state component indices
IR, ITH, IPH, IV, IGA, IPS, IZE = range(N_STATES)

STATE_NAMES = ("r", "theta", "phi", "V", "gamma", "psi", "zeta")

DIMENSIONAL = "dimensional"
NONDIMENSIONAL = "nondimensional"


class DynamicsDomainError(ValueError):
    """State outside the domain where the dynamics are well defined."""


@dataclass(frozen=True)
class PlanetModel:
    """Rotating oblate planet: mu [m^3/s^2], Rp [m], Omega [rad/s], J2 [-]."""

    mu: float
    Rp: float
    Omega: float
    J2: float

    def __post_init__(self):
        if self.mu <= 0.0 or self.Rp <= 0.0:
            raise ValueError("mu and Rp must be positive")
        if self.Omega < 0.0:
            raise ValueError("Omega must be non-negative")


@dataclass(frozen=True)
class AtmosphereModel:
    """Exponential atmosphere rho0*exp((h0-h)/H) with log-density scaling.

    rho0 [kg/m^3], h0 [m], H [m]; zeta_ref is the dimensionless factor
    dividing ln(rho). ``enabled=False`` zeroes lift and drag in the
    dynamics (vacuum configuration) without touching the state layout.
    """

    rho0: float
    h0: float
    H: float
    zeta_ref: float = 20.0
    enabled: bool = True

    def __post_init__(self):
        if self.rho0 <= 0.0 or self.H <= 0.0 or self.zeta_ref <= 0.0:
            raise ValueError("rho0, H and zeta_ref must be positive")


@dataclass(frozen=True)
class VehicleModel:
    """Lift-to-drag ratio [-], ballistic coefficient beta [kg/m^2], bank sigma [rad]."""

    lift_to_drag: float
    beta: float
    sigma: float

    def __post_init__(self):
        if self.beta <= 0.0:
            raise ValueError("beta must be positive")


@dataclass(frozen=True)
class Scales:
    """Nondimensionalization constants (SI)."""

    length_ref: float
    time_ref: float
    speed_ref: float
    zeta_ref: float

    def __post_init__(self):
        for v in (self.length_ref, self.time_ref, self.speed_ref, self.zeta_ref):
            if v <= 0.0:
                raise ValueError("scale constants must be positive")

    @classmethod
    def for_planet(cls, planet: PlanetModel, zeta_ref: float = 20.0) -> "Scales":
        speed = math.sqrt(planet.mu / planet.Rp)
        return cls(
            length_ref=planet.Rp,
            time_ref=planet.Rp / speed,
            speed_ref=speed,
            zeta_ref=zeta_ref,
        )

    def state_factors(self) -> np.ndarray:
        """Per-component divisors taking a dimensional state to nondimensional."""
        return np.array(
            [self.length_ref, 1.0, 1.0, self.speed_ref, 1.0, 1.0, self.zeta_ref]
        )

    def nondimensionalize(self, x_dim: np.ndarray) -> np.ndarray:
        return np.asarray(x_dim, dtype=float) / self.state_factors()

    def redimensionalize(self, x_nd: np.ndarray) -> np.ndarray:
        return np.asarray(x_nd, dtype=float) * self.state_factors()


@dataclass(frozen=True)
class StateVector:
    """The 7-state [r, theta, phi, V, gamma, psi, zeta].

    theta is the angular coordinate absent from every right-hand side;
    phi is the angular coordinate entering the gravity harmonics and
    rotation terms and must stay clear of +/-90 deg. zeta is ln(density)
    (divided by zeta_ref in the nondimensional frame).
    """

    r: float
    theta: float
    phi: float
    V: float
    gamma: float
    psi: float
    zeta: float
    frame: str = DIMENSIONAL

    def __post_init__(self):
        if self.frame not in (DIMENSIONAL, NONDIMENSIONAL):
            raise ValueError(f"unknown frame {self.frame!r}")
        if self.r <= 0.0:
            raise ValueError("r must be positive")
        if not math.isfinite(self.zeta):
            raise ValueError("zeta must be finite")

    def to_array(self) -> np.ndarray:
        return np.array(
            [self.r, self.theta, self.phi, self.V, self.gamma, self.psi, self.zeta]
        )

    @classmethod
    def from_array(cls, x, frame: str = DIMENSIONAL) -> "StateVector":
        x = np.asarray(x, dtype=float)
        if x.shape != (N_STATES,):
            raise ValueError(f"expected shape ({N_STATES},), got {x.shape}")
        return cls(*x.tolist(), frame=frame)

    def nondimensionalized(self, scales: Scales) -> "StateVector":
        if self.frame == NONDIMENSIONAL:
            return self
        return StateVector.from_array(
            scales.nondimensionalize(self.to_array()), frame=NONDIMENSIONAL
        )

    def redimensionalized(self, scales: Scales) -> "StateVector":
        if self.frame == DIMENSIONAL:
            return self
        return StateVector.from_array(
            scales.redimensionalize(self.to_array()), frame=DIMENSIONAL
        )


@dataclass(frozen=True)
class ModelSet:
    """Convenience bundle of the three physical models plus derived scales."""

    planet: PlanetModel
    atmosphere: AtmosphereModel
    vehicle: VehicleModel
    scales: Scales = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "scales", Scales.for_planet(self.planet, self.atmosphere.zeta_ref)
        )

    def with_aero_disabled(self) -> "ModelSet":
        return ModelSet(
            self.planet, replace(self.atmosphere, enabled=False), self.vehicle
        )


# Default models: published Uranus constants plus a mid-L/D capture vehicle.
# All overridable through the YAML config (see load_models / docs).
URANUS = PlanetModel(mu=5.793939e15, Rp=2.5559e7, Omega=1.01237e-4, J2=3.343e-3)
URANUS_EXP_ATMOSPHERE = AtmosphereModel(rho0=6.40e-3, h0=0.0, H=54.72e3, zeta_ref=20.0)
CAPTURE_VEHICLE = VehicleModel(lift_to_drag=0.25, beta=145.0, sigma=math.radians(78.0))


def default_models() -> ModelSet:
    return ModelSet(URANUS, URANUS_EXP_ATMOSPHERE, CAPTURE_VEHICLE)


# YAML key names (all SI): see README for the full schema.
_PLANET_KEYS = {"mu_m3_s2": "mu", "radius_m": "Rp", "omega_rad_s": "Omega", "j2": "J2"}
_ATMO_KEYS = {
    "rho0_kg_m3": "rho0",
    "h0_m": "h0",
    "scale_height_m": "H",
    "zeta_ref": "zeta_ref",
    "enabled": "enabled",
}
_VEHICLE_KEYS = {
    "lift_to_drag": "lift_to_drag",
    "beta_kg_m2": "beta",
    "bank_angle_rad": "sigma",
}


def _build(cls, block: dict, keymap: dict, defaults):
    kwargs = {f: getattr(defaults, f) for f in keymap.values()}
    for key, val in block.items():
        if key not in keymap:
            raise KeyError(f"unknown {cls.__name__} config key {key!r}")
        kwargs[keymap[key]] = val
    return cls(**kwargs)


def models_from_dict(cfg: dict) -> ModelSet:
    """Build a ModelSet from a config mapping; missing keys keep defaults."""
    planet = _build(PlanetModel, cfg.get("planet", {}), _PLANET_KEYS, URANUS)
    atmo = _build(
        AtmosphereModel, cfg.get("atmosphere", {}), _ATMO_KEYS, URANUS_EXP_ATMOSPHERE
    )
    vehicle = _build(VehicleModel, cfg.get("vehicle", {}), _VEHICLE_KEYS, CAPTURE_VEHICLE)
    return ModelSet(planet, atmo, vehicle)


def load_models(path) -> ModelSet:
    """Load planet/atmosphere/vehicle blocks from a YAML config file."""
    with open(path, "r") as fh:
        cfg = yaml.safe_load(fh) or {}
    return models_from_dict(cfg)
