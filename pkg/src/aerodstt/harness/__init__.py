"""Experiment harness: configuration, shared artifacts, CLI commands."""

from .config import ExperimentConfig, load_config
from .runner import RunContext
