"""Semi-analytical perturbation propagation for aerocapture trajectories.

State transition tensors (STTs) to third order, directional STTs built
from stretching-direction analysis of ordinary and augmented higher-order
Cauchy-Green tensors, tensor z-eigenpair solving, and the experiment
harness driving the comparison studies.
"""

from .models import (
    AtmosphereModel,
    DynamicsDomainError,
    ModelSet,
    PlanetModel,
    Scales,
    StateVector,
    VehicleModel,
    default_models,
    load_models,
)

__version__ = "0.1.0"
