"""Default configuration values and paths."""

from pathlib import Path
from typing import Final

# Default directories
DEFAULT_CONFIG_DIR: Final[Path] = Path.home() / ".config" / "hitlsim"

# Default file paths
DEFAULT_CONFIG_FILE: Final[Path] = DEFAULT_CONFIG_DIR / "config.toml"

# Default config content (TOML)
DEFAULT_CONFIG_TOML: Final[str] = """\
# hitlsim configuration

[simulation]
seed = 0
duration_s = 28800.0
num_operators = 1
true_event_rate_per_hr = 0.0
false_alarm_rate_per_hr = 0.0
miss_probability = 0.0
operator_label_accuracy = 1.0
retrain_batch_size = 50
retrain_fp_decay = 1.0
retrain_miss_decay = 1.0
smoothing_mode = "replace"

[simulation.clip_len_s]
min_s = 5.0
max_s = 10.0

[simulation.notify_delay_s]
kind = "constant"
value = 0.0

[simulation.operator_response_delay_s]
kind = "constant"
value = 0.0

[evaluation]
iou_threshold = 0.5

[postprocess]
smoothing_mode = "replace"

[metrics]
window_s = 3600.0
cv_threshold = 0.1
stable_windows = 3

[output]
default_format = "table"
color = true

[logging]
level = "WARNING"
json_format = false
"""


def ensure_directories() -> None:
    """Ensure all default directories exist."""
    DEFAULT_CONFIG_DIR.mkdir(parents=True, exist_ok=True)
