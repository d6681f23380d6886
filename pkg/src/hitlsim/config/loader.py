"""Configuration loading from TOML files and environment variables."""

from pathlib import Path
from typing import Any

from pydantic import ValidationError

from hitlsim.config.defaults import (
    DEFAULT_CONFIG_FILE,
    DEFAULT_CONFIG_TOML,
    ensure_directories,
)
from hitlsim.config.schema import EnvironmentSettings, HitlSimConfig
from hitlsim.exceptions import (
    ConfigError,
    ConfigNotFoundError,
    ConfigValidationError,
)

# Global config instance (singleton)
_config: HitlSimConfig | None = None


def get_config_path() -> Path:
    """Config file location: ``HITLSIM_CONFIG`` or the default path."""
    return EnvironmentSettings().config or DEFAULT_CONFIG_FILE


def load_config(
    config_path: Path | None = None,
    *,
    create_if_missing: bool = False,
    required: bool = False,
) -> HitlSimConfig:
    """Load configuration from a TOML file and environment variables.

    Args:
        config_path: Path to config file. If None, uses the default path.
        create_if_missing: Write the default config if the file doesn't exist.
        required: Raise instead of falling back to defaults when the file
            doesn't exist.

    Returns:
        Loaded and validated configuration.

    Raises:
        ConfigNotFoundError: If ``required`` and the file is missing.
        ConfigError: If the file cannot be read or is not valid TOML.
        ConfigValidationError: If a value is out of range or unknown.
    """
    # Use Python 3.11+ tomllib or fallback
    try:
        import tomllib
    except ImportError:
        try:
            import tomli as tomllib
        except ImportError as err:
            raise ConfigError(
                "tomllib not available. Install 'tomli' for Python < 3.11"
            ) from err

    path = config_path or get_config_path()

    if not path.exists():
        if required:
            raise ConfigNotFoundError(f"Configuration file not found: {path}")
        if create_if_missing:
            if config_path is None:
                ensure_directories()
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(DEFAULT_CONFIG_TOML)
        else:
            return _apply_env_overrides(HitlSimConfig())

    try:
        with open(path, "rb") as f:
            data = tomllib.load(f)
    except Exception as e:
        raise ConfigError(f"Failed to load config from {path}: {e}") from e

    config = validate_config(data, source=path)
    return _apply_env_overrides(config)


def validate_config(data: dict[str, Any], source: Path | None = None) -> HitlSimConfig:
    """Validate a raw mapping into a HitlSimConfig.

    Raises:
        ConfigValidationError: Naming every offending field path.
    """
    try:
        return HitlSimConfig.model_validate(data)
    except ValidationError as e:
        prefix = f"{source}: " if source else ""
        raise ConfigValidationError(
            f"{prefix}Invalid configuration: {describe_validation_error(e)}"
        ) from e


def describe_validation_error(err: ValidationError) -> str:
    """Render a pydantic error as ``field.path: message`` items."""
    parts = []
    for item in err.errors():
        field = ".".join(str(p) for p in item["loc"]) or "<root>"
        parts.append(f"{field}: {item['msg']}")
    return "; ".join(parts)


def _apply_env_overrides(config: HitlSimConfig) -> HitlSimConfig:
    """Apply environment variable overrides to configuration."""
    env = EnvironmentSettings()

    if env.log_level:
        config.logging.level = env.log_level.upper()

    if env.no_color:
        config.output.color = False

    return config


def get_config() -> HitlSimConfig:
    """Get the current configuration (singleton).

    Loads config on first access, caches for subsequent calls.
    """
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config() -> None:
    """Reset the configuration singleton (mainly for testing)."""
    global _config
    _config = None
