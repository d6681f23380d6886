"""Pydantic models for hitlsim configuration."""

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from hitlsim.events.frames import SmoothingMode
from hitlsim.output.base import ReportFormat

# Bounds on a detected clip, seconds.
CLIP_MIN_S = 5.0
CLIP_MAX_S = 10.0


class DelayKind(str, Enum):
    """Supported delay distributions."""

    CONSTANT = "constant"
    EXPONENTIAL = "exponential"
    LOGNORMAL = "lognormal"
    UNIFORM = "uniform"


class DelayDistribution(BaseModel):
    """A non-negative delay distribution, in seconds.

    Only the parameters of the selected ``kind`` are read:
    ``constant`` uses ``value``, ``exponential`` uses ``mean``,
    ``lognormal`` uses ``mu``/``sigma`` (of the underlying normal),
    ``uniform`` uses ``low``/``high``.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: DelayKind = DelayKind.CONSTANT
    value: float = Field(default=0.0, ge=0.0)
    mean: float = Field(default=1.0, gt=0.0)
    mu: float = 0.0
    sigma: float = Field(default=1.0, ge=0.0)
    low: float = Field(default=0.0, ge=0.0)
    high: float = Field(default=0.0, ge=0.0)

    @model_validator(mode="after")
    def _check_bounds(self) -> "DelayDistribution":
        if self.kind == DelayKind.UNIFORM and self.low > self.high:
            raise ValueError("uniform delay needs low <= high")
        return self


class ClipLength(BaseModel):
    """Range clip durations are drawn from (uniformly)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    min_s: float = Field(default=CLIP_MIN_S, ge=CLIP_MIN_S, le=CLIP_MAX_S)
    max_s: float = Field(default=CLIP_MAX_S, ge=CLIP_MIN_S, le=CLIP_MAX_S)

    @model_validator(mode="after")
    def _check_order(self) -> "ClipLength":
        if self.min_s > self.max_s:
            raise ValueError("clip_len_s needs min_s <= max_s")
        return self


class SimConfig(BaseModel):
    """Parameters of one simulated deployment."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int = Field(default=0, ge=0)
    duration_s: float = Field(default=28800.0, gt=0.0)
    num_operators: int = Field(default=1, ge=1)
    true_event_rate_per_hr: float = Field(default=0.0, ge=0.0)
    false_alarm_rate_per_hr: float = Field(default=0.0, ge=0.0)
    miss_probability: float = Field(default=0.0, ge=0.0, le=1.0)
    clip_len_s: ClipLength = Field(default_factory=ClipLength)
    notify_delay_s: DelayDistribution = Field(default_factory=DelayDistribution)
    operator_response_delay_s: DelayDistribution = Field(
        default_factory=DelayDistribution
    )
    operator_label_accuracy: float = Field(default=1.0, ge=0.0, le=1.0)
    retrain_batch_size: int = Field(default=50, ge=1)
    retrain_fp_decay: float = Field(default=1.0, gt=0.0, le=1.0)
    retrain_miss_decay: float = Field(default=1.0, gt=0.0, le=1.0)
    smoothing_mode: SmoothingMode = SmoothingMode.REPLACE


class EvaluationConfig(BaseModel):
    """Event matching configuration."""

    model_config = ConfigDict(extra="forbid")

    iou_threshold: float = Field(default=0.5, ge=0.0, le=1.0)


class PostprocessConfig(BaseModel):
    """Frame smoothing configuration."""

    model_config = ConfigDict(extra="forbid")

    smoothing_mode: SmoothingMode = SmoothingMode.REPLACE


class MetricsConfig(BaseModel):
    """Adaptation-time detector configuration."""

    model_config = ConfigDict(extra="forbid")

    window_s: float = Field(default=3600.0, gt=0.0)
    cv_threshold: float = Field(default=0.1, gt=0.0)
    stable_windows: int = Field(default=3, ge=1)


class OutputConfig(BaseModel):
    """Output configuration."""

    model_config = ConfigDict(extra="forbid")

    default_format: ReportFormat = ReportFormat.TABLE
    color: bool = True


class LoggingConfig(BaseModel):
    """Logging configuration."""

    model_config = ConfigDict(extra="forbid")

    level: str = "WARNING"
    file: Path | None = None  # Default: no file logging
    json_format: bool = False


class HitlSimConfig(BaseModel):
    """Root configuration for hitlsim."""

    model_config = ConfigDict(extra="forbid")

    simulation: SimConfig = Field(default_factory=SimConfig)
    evaluation: EvaluationConfig = Field(default_factory=EvaluationConfig)
    postprocess: PostprocessConfig = Field(default_factory=PostprocessConfig)
    metrics: MetricsConfig = Field(default_factory=MetricsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


class EnvironmentSettings(BaseSettings):
    """Environment overrides (``HITLSIM_*``)."""

    model_config = SettingsConfigDict(
        env_prefix="HITLSIM_", env_ignore_empty=True, extra="ignore"
    )

    config: Path | None = None
    log_level: str | None = None
    no_color: bool = False

    @field_validator("no_color", mode="before")
    @classmethod
    def _flag(cls, value: Any) -> bool:
        # Any non-empty value except an explicit "off" disables colour.
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        return text not in ("", "0", "false", "no", "off")
