"""Technical and organizational latency from timestamped logs."""

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from hitlsim.sim.records import EventLog


@dataclass(frozen=True)
class LatencyStats:
    """Summary of a latency sample, in seconds.

    ``median_s`` is the conventional median (mean of the two middle values
    for an even count); ``p90_s`` and ``p99_s`` are nearest-rank percentiles,
    so they are always observed values. All values are None when ``n == 0``.
    """

    n: int
    mean_s: float | None = None
    median_s: float | None = None
    p90_s: float | None = None
    p99_s: float | None = None
    max_s: float | None = None

    def as_dict(self) -> dict[str, float | int | None]:
        return {
            "n": self.n,
            "mean_s": self.mean_s,
            "median_s": self.median_s,
            "p90_s": self.p90_s,
            "p99_s": self.p99_s,
            "max_s": self.max_s,
        }


def nearest_rank(sorted_ms: list[int], percent: int) -> int:
    """The ceil(percent/100 * n)-th order statistic, in integer arithmetic."""
    n = len(sorted_ms)
    rank = max(1, (percent * n + 99) // 100)
    return sorted_ms[rank - 1]


def latency_stats(samples_ms: Iterable[int]) -> LatencyStats:
    """Summarize non-negative millisecond latencies.

    Raises:
        ValueError: If a sample is negative.
    """
    ordered = sorted(int(s) for s in samples_ms)
    if not ordered:
        return LatencyStats(n=0)
    if ordered[0] < 0:
        raise ValueError(f"Negative latency sample: {ordered[0]} ms")
    values = np.asarray(ordered, dtype=np.float64)
    return LatencyStats(
        n=len(ordered),
        mean_s=float(values.mean()) / 1000,
        median_s=float(np.median(values)) / 1000,
        p90_s=nearest_rank(ordered, 90) / 1000,
        p99_s=nearest_rank(ordered, 99) / 1000,
        max_s=ordered[-1] / 1000,
    )


def technical_latency_samples(log: EventLog) -> list[int]:
    """Incident onset (clip start) to notification, per notified alert."""
    return [
        alert.notified_at_ms - alert.clip_start_ms
        for alert in log.alerts().values()
        if alert.notified_at_ms is not None
    ]


def organizational_latency_samples(log: EventLog) -> list[tuple[int, int]]:
    """(acted_at_ms, latency_ms) per acted-on alert, notification to action."""
    alerts = log.alerts()
    samples: list[tuple[int, int]] = []
    for action in log.actions():
        notified = alerts[action.event_id].notified_at_ms
        if notified is not None:
            samples.append((action.acted_at_ms, action.acted_at_ms - notified))
    return samples


def technical_latency(log: EventLog) -> LatencyStats:
    return latency_stats(technical_latency_samples(log))


def organizational_latency(log: EventLog) -> LatencyStats:
    """Notification-to-action latency; alerts never acted on are excluded."""
    return latency_stats(delta for _, delta in organizational_latency_samples(log))
