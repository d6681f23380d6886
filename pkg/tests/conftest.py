"""Pytest fixtures for hitlsim tests."""

import logging
import tempfile
from collections.abc import Generator
from pathlib import Path

import pytest

from hitlsim.config import reset_config
from hitlsim.config.schema import DelayDistribution, DelayKind, HitlSimConfig, SimConfig

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def temp_dir() -> Generator[Path, None, None]:
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory with the checked-in sample files."""
    return FIXTURES


@pytest.fixture
def default_config() -> HitlSimConfig:
    """Get default configuration."""
    return HitlSimConfig()


@pytest.fixture
def busy_sim_config() -> SimConfig:
    """A small run with every stochastic feature switched on."""
    return SimConfig(
        seed=42,
        duration_s=7200.0,
        num_operators=3,
        true_event_rate_per_hr=6.0,
        false_alarm_rate_per_hr=12.0,
        miss_probability=0.1,
        notify_delay_s=DelayDistribution(kind=DelayKind.UNIFORM, low=0.5, high=3.0),
        operator_response_delay_s=DelayDistribution(
            kind=DelayKind.LOGNORMAL, mu=3.0, sigma=0.5
        ),
        operator_label_accuracy=0.9,
        retrain_batch_size=5,
        retrain_fp_decay=0.8,
    )


@pytest.fixture(autouse=True)
def isolated_config(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> Generator[None, None, None]:
    """Keep tests away from the user's config file and environment."""
    monkeypatch.setenv("HITLSIM_CONFIG", str(tmp_path / "absent-config.toml"))
    monkeypatch.delenv("HITLSIM_NO_COLOR", raising=False)
    monkeypatch.delenv("HITLSIM_LOG_LEVEL", raising=False)
    reset_config()
    yield
    reset_config()
    # CLI runs bind handlers to streams that are closed afterwards.
    package_logger = logging.getLogger("hitlsim")
    package_logger.handlers.clear()
    package_logger.propagate = True
