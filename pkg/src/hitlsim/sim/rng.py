"""Seeded random draws for the simulation.

One PCG64 stream per run. Draws happen in event-processing order, which the
scheduler makes total, so a (seed, config) pair fixes every value.
"""

import numpy as np

from hitlsim.config.schema import DelayDistribution, DelayKind


def to_millis(seconds: float) -> int:
    """Round a non-negative duration to whole milliseconds."""
    return max(0, int(round(seconds * 1000.0)))


class SimRandom:
    """Named draws on top of a single numpy Generator."""

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self._gen = np.random.Generator(np.random.PCG64(seed))

    def interarrival_ms(self, rate_per_hr: float) -> int | None:
        """Exponential gap for a Poisson process; None when the rate is zero."""
        if rate_per_hr <= 0:
            return None
        mean_s = 3600.0 / rate_per_hr
        # At least 1 ms so a stream always advances.
        return max(1, to_millis(float(self._gen.exponential(mean_s))))

    def delay_ms(self, dist: DelayDistribution) -> int:
        """Draw one delay; constant delays consume no randomness."""
        if dist.kind == DelayKind.CONSTANT:
            return to_millis(dist.value)
        if dist.kind == DelayKind.EXPONENTIAL:
            return to_millis(float(self._gen.exponential(dist.mean)))
        if dist.kind == DelayKind.LOGNORMAL:
            return to_millis(float(self._gen.lognormal(dist.mu, dist.sigma)))
        return to_millis(float(self._gen.uniform(dist.low, dist.high)))

    def uniform_ms(self, low_s: float, high_s: float) -> int:
        if low_s == high_s:
            return to_millis(low_s)
        return to_millis(float(self._gen.uniform(low_s, high_s)))

    def chance(self, probability: float) -> bool:
        """Bernoulli draw; certain outcomes consume no randomness."""
        if probability >= 1.0:
            return True
        if probability <= 0.0:
            return False
        return bool(self._gen.random() < probability)
