"""Adaptation time: how long until operator response settles.

Time after deployment is cut into windows of ``window_s``. Each acted-on
alert contributes its organizational latency to the window holding its
action time. The workflow counts as adapted at the end of the first run of
``stable_windows`` consecutive windows that all have data and whose window
means have a coefficient of variation (population std / mean) at or below
``cv_threshold``.
"""

import numpy as np

from hitlsim.exceptions import InvalidArgumentError
from hitlsim.metrics.latency import organizational_latency_samples
from hitlsim.sim.records import EventLog


def window_means(log: EventLog, window_s: float) -> list[float | None]:
    """Mean organizational latency (seconds) per window; None for empty windows."""
    deployed = log.deployment_ms
    samples = organizational_latency_samples(log)
    if deployed is None or not samples:
        return []
    window_ms = window_s * 1000.0
    buckets: dict[int, list[int]] = {}
    for acted_ms, latency_ms in samples:
        index = int((acted_ms - deployed) // window_ms)
        buckets.setdefault(index, []).append(latency_ms)
    return [
        float(np.mean(buckets[i])) / 1000 if i in buckets else None
        for i in range(max(buckets) + 1)
    ]


def coefficient_of_variation(values: list[float]) -> float:
    arr = np.asarray(values, dtype=np.float64)
    std = float(arr.std())
    if std == 0.0:
        return 0.0
    return std / float(arr.mean())


def adaptation_time(
    log: EventLog,
    window_s: float = 3600.0,
    cv_threshold: float = 0.1,
    stable_windows: int = 3,
) -> float | None:
    """Seconds from deployment to a stable workflow, or None if never stable.

    Raises:
        InvalidArgumentError: On a non-positive window or threshold, or
            ``stable_windows < 1``.
    """
    if window_s <= 0:
        raise InvalidArgumentError(f"window_s must be > 0, got {window_s}")
    if cv_threshold <= 0:
        raise InvalidArgumentError(f"cv_threshold must be > 0, got {cv_threshold}")
    if stable_windows < 1:
        raise InvalidArgumentError(
            f"stable_windows must be >= 1, got {stable_windows}"
        )

    means = window_means(log, window_s)
    for start in range(len(means) - stable_windows + 1):
        run = means[start : start + stable_windows]
        if any(m is None for m in run):
            continue
        if coefficient_of_variation([m for m in run if m is not None]) <= cv_threshold:
            return (start + stable_windows) * window_s
    return None
