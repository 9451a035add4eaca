import math
from dataclasses import replace

import numpy as np
import pytest

from aerodstt.harness.config import ExperimentConfig
from aerodstt.harness.runner import RunContext
from aerodstt.models import ModelSet, StateVector, default_models


@pytest.fixture(scope="session")
def models() -> ModelSet:
    return default_models()


@pytest.fixture(scope="session")
def vacuum_models(models) -> ModelSet:
    """Aero disabled, no rotation, point-mass gravity: the conservation limit."""
    return ModelSet(
        replace(models.planet, Omega=0.0, J2=0.0),
        replace(models.atmosphere, enabled=False),
        models.vehicle,
    )


@pytest.fixture(scope="session")
def entry_state(models) -> StateVector:
    return ExperimentConfig(models=models).entry_state()


@pytest.fixture(scope="session")
def ctx() -> RunContext:
    """Default-configuration run context; artifacts cache inside."""
    return RunContext(ExperimentConfig())


@pytest.fixture(scope="session")
def rng() -> np.random.Generator:
    return np.random.default_rng(987654321)
