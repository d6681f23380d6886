"""Event calendar for the discrete-event engine."""

import heapq
import itertools
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

Handler = Callable[..., None]


@dataclass(order=True)
class ScheduledEvent:
    """A pending callback, ordered by (time, insertion sequence)."""

    t_ms: int
    seq: int
    handler: Handler = field(compare=False)
    args: tuple[Any, ...] = field(default=(), compare=False)


class Scheduler:
    """Priority-queue calendar with a total order on equal timestamps.

    Events at the same millisecond fire in the order they were scheduled,
    which keeps runs reproducible.
    """

    def __init__(self) -> None:
        self._queue: list[ScheduledEvent] = []
        self._counter = itertools.count()
        self.now_ms = 0

    def schedule(self, t_ms: int, handler: Handler, *args: Any) -> ScheduledEvent:
        if t_ms < self.now_ms:
            raise ValueError(f"Cannot schedule in the past ({t_ms} < {self.now_ms})")
        event = ScheduledEvent(t_ms, next(self._counter), handler, args)
        heapq.heappush(self._queue, event)
        return event

    def schedule_after(self, delay_ms: int, handler: Handler, *args: Any) -> ScheduledEvent:
        return self.schedule(self.now_ms + delay_ms, handler, *args)

    def run_until(self, horizon_ms: int) -> int:
        """Fire events with ``t_ms <= horizon_ms``; return how many fired."""
        fired = 0
        while self._queue and self._queue[0].t_ms <= horizon_ms:
            event = heapq.heappop(self._queue)
            self.now_ms = event.t_ms
            event.handler(*event.args)
            fired += 1
        return fired
