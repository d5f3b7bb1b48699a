"""
Configuration
=============
Process settings from the environment and experiment files.

Usage:
    from dcsparse.config import get_settings, load_experiment_config

    settings = get_settings()
    config = load_experiment_config("scad.cfg")
"""
from dcsparse.config.base import DcSparseSettings, get_settings
from dcsparse.config.experiment import (
    ExperimentConfig,
    build_penalty_spec,
    load_experiment_config,
    parse_key_value_text,
)

__all__ = [
    "DcSparseSettings",
    "get_settings",
    "ExperimentConfig",
    "build_penalty_spec",
    "load_experiment_config",
    "parse_key_value_text",
]
