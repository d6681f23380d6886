"""Configuration management."""

from hitlsim.config.loader import (
    get_config,
    load_config,
    reset_config,
    validate_config,
)
from hitlsim.config.schema import (
    ClipLength,
    DelayDistribution,
    DelayKind,
    HitlSimConfig,
    SimConfig,
)

__all__ = [
    "ClipLength",
    "DelayDistribution",
    "DelayKind",
    "HitlSimConfig",
    "SimConfig",
    "get_config",
    "load_config",
    "reset_config",
    "validate_config",
]
