"""Tests for configuration system."""

from pathlib import Path

import pytest

from hitlsim.config import get_config, reset_config
from hitlsim.config.defaults import DEFAULT_CONFIG_FILE, DEFAULT_CONFIG_TOML
from hitlsim.config.loader import get_config_path, load_config, validate_config
from hitlsim.config.schema import DelayKind, EnvironmentSettings, HitlSimConfig, SimConfig
from hitlsim.events.frames import SmoothingMode
from hitlsim.exceptions import ConfigError, ConfigNotFoundError, ConfigValidationError
from hitlsim.output.base import ReportFormat


class TestHitlSimConfig:
    """Tests for HitlSimConfig schema."""

    def test_default_config(self) -> None:
        """Test default configuration values."""
        config = HitlSimConfig()

        assert config.simulation.num_operators == 1
        assert config.simulation.clip_len_s.min_s == 5.0
        assert config.simulation.clip_len_s.max_s == 10.0
        assert config.simulation.retrain_fp_decay == 1.0
        assert config.evaluation.iou_threshold == 0.5
        assert config.postprocess.smoothing_mode == SmoothingMode.REPLACE
        assert config.metrics.stable_windows == 3
        assert config.output.default_format == ReportFormat.TABLE

    def test_config_from_dict(self) -> None:
        """Test creating config from dictionary."""
        data = {
            "simulation": {
                "seed": 7,
                "num_operators": 4,
                "operator_response_delay_s": {"kind": "lognormal", "mu": 3.0, "sigma": 0.5},
            },
            "output": {"default_format": "json"},
        }
        config = HitlSimConfig.model_validate(data)

        assert config.simulation.seed == 7
        assert config.simulation.operator_response_delay_s.kind == DelayKind.LOGNORMAL
        assert config.output.default_format == ReportFormat.JSON

    def test_default_toml_matches_schema(self) -> None:
        """Test that the shipped default file parses to the schema defaults."""
        try:
            import tomllib
        except ImportError:
            import tomli as tomllib

        config = validate_config(tomllib.loads(DEFAULT_CONFIG_TOML))
        assert config.model_dump() == HitlSimConfig().model_dump()

    @pytest.mark.parametrize(
        "simulation",
        [
            {"clip_len_s": {"min_s": 8.0, "max_s": 6.0}},
            {"clip_len_s": {"max_s": 12.0}},
            {"notify_delay_s": {"kind": "uniform", "low": 3.0, "high": 1.0}},
            {"seed": -1},
            {"duration_s": 0},
        ],
    )
    def test_invalid_simulation(self, simulation: dict[str, object]) -> None:
        """Test that out-of-range simulation values are rejected."""
        with pytest.raises(ConfigValidationError):
            validate_config({"simulation": simulation})

    def test_sim_config_is_frozen(self) -> None:
        """Test that a SimConfig cannot be mutated mid-run."""
        config = SimConfig()
        with pytest.raises(ValueError):
            config.seed = 3  # type: ignore[misc]


class TestConfigLoader:
    """Tests for configuration loader."""

    def test_load_config_creates_default(self, temp_dir: Path) -> None:
        """Test that load_config creates default config file."""
        config_path = temp_dir / "config.toml"
        config = load_config(config_path, create_if_missing=True)

        assert config_path.exists()
        assert config.simulation.retrain_batch_size == 50

    def test_load_config_from_file(self, fixtures_dir: Path) -> None:
        """Test loading config from existing file."""
        config = load_config(fixtures_dir / "sim.toml")

        assert config.simulation.seed == 42
        assert config.simulation.num_operators == 3
        assert config.simulation.notify_delay_s.kind == DelayKind.UNIFORM
        assert config.metrics.window_s == 3600.0

    def test_load_config_without_file(self, temp_dir: Path) -> None:
        """Test loading config without creating file."""
        config_path = temp_dir / "nonexistent.toml"
        config = load_config(config_path, create_if_missing=False)

        assert not config_path.exists()
        assert config.simulation.seed == 0

    def test_required_file_missing(self, temp_dir: Path) -> None:
        """Test that a required config file must exist."""
        with pytest.raises(ConfigNotFoundError):
            load_config(temp_dir / "nonexistent.toml", required=True)

    def test_invalid_value_names_field(self, fixtures_dir: Path) -> None:
        """Test that validation errors name the offending field."""
        with pytest.raises(ConfigValidationError, match="simulation.false_alarm_rate_per_hr"):
            load_config(fixtures_dir / "sim_invalid.toml")

    def test_bad_toml(self, temp_dir: Path) -> None:
        """Test that unparsable TOML is a config error."""
        path = temp_dir / "broken.toml"
        path.write_text("[simulation\nseed = 1\n")
        with pytest.raises(ConfigError, match="Failed to load"):
            load_config(path)

    def test_unknown_key(self, temp_dir: Path) -> None:
        """Test that unknown keys are rejected."""
        path = temp_dir / "extra.toml"
        path.write_text("[simulation]\nsede = 1\n")
        with pytest.raises(ConfigValidationError, match="sede"):
            load_config(path)


class TestEnvironment:
    """Tests for environment overrides."""

    def test_config_path_from_env(self, monkeypatch: pytest.MonkeyPatch, temp_dir: Path) -> None:
        """Test that HITLSIM_CONFIG selects the config file."""
        monkeypatch.setenv("HITLSIM_CONFIG", str(temp_dir / "custom.toml"))
        assert get_config_path() == temp_dir / "custom.toml"

    def test_empty_config_path_uses_default(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that an empty HITLSIM_CONFIG falls back to the default path."""
        monkeypatch.setenv("HITLSIM_CONFIG", "")
        assert EnvironmentSettings().config is None
        assert get_config_path() == DEFAULT_CONFIG_FILE

    def test_no_color(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that HITLSIM_NO_COLOR turns colour off."""
        monkeypatch.setenv("HITLSIM_NO_COLOR", "1")
        reset_config()
        assert get_config().output.color is False

    def test_no_color_off_value(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that an explicit off value keeps colour."""
        monkeypatch.setenv("HITLSIM_NO_COLOR", "0")
        assert EnvironmentSettings().no_color is False

    def test_log_level(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that HITLSIM_LOG_LEVEL overrides the logging level."""
        monkeypatch.setenv("HITLSIM_LOG_LEVEL", "debug")
        reset_config()
        assert get_config().logging.level == "DEBUG"

    def test_singleton(self) -> None:
        """Test that get_config caches its result."""
        assert get_config() is get_config()
