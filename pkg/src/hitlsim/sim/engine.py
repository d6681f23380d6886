"""Discrete-event simulation of the alert -> feedback -> retraining loop.

The cloud pieces of a real deployment (clip storage, trigger function,
notification service, feedback table) collapse into one in-process state
machine that writes an append-only log.

Random draws, in the order they are made:

1. incident arrival: next inter-arrival gap of the same stream, then (true
   incidents only) the miss draw, then the clip length;
2. detection: notification delay;
3. operator starts a review: response delay;
4. operator submits: label-correctness draw.

Constant distributions and certain (0 or 1) probabilities consume no draws.
"""

import logging
from collections.abc import Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from pydantic import ValidationError

from hitlsim.config.loader import describe_validation_error
from hitlsim.config.schema import SimConfig
from hitlsim.exceptions import (
    ConfigValidationError,
    QueuePreconditionError,
    SimulationError,
    UnknownEventError,
)
from hitlsim.sim.records import (
    CONFIRM,
    REJECT,
    ActionEntry,
    DeploymentEntry,
    DetectionEntry,
    EventLog,
    FeedbackLabel,
    LabelEntry,
    LabelRejectedEntry,
    LabelValue,
    LogBuilder,
    MissEntry,
    NotificationEntry,
    QueueInsertEntry,
    QueueRemoveEntry,
    RetrainEntry,
    format_event_id,
)
from hitlsim.sim.rng import SimRandom, to_millis
from hitlsim.sim.scheduler import Scheduler
from hitlsim.utils.logging import get_logger, log_with_context

logger = get_logger(__name__)


class HitlState:
    """Mutable state of one run: alerts, operator queues, labels, detector.

    Operator queues are insertion-ordered, so iteration order is FIFO by
    notification time.
    """

    def __init__(self, config: SimConfig, log: LogBuilder | None = None) -> None:
        self.config = config
        self.log = log or LogBuilder()
        self.false_alarm_rate_per_hr = config.false_alarm_rate_per_hr
        self.miss_probability = config.miss_probability
        self.epoch = 0
        self.labels_since_retrain = 0
        self.rejections = 0

        self.truth: dict[str, bool] = {}
        self.notified_ms: dict[str, int] = {}
        self.labels: dict[str, FeedbackLabel] = {}
        self.queues: dict[int, dict[str, int]] = {
            op: {} for op in range(1, config.num_operators + 1)
        }

    # -- lifecycle -------------------------------------------------------

    def deploy(self, t_ms: int) -> None:
        self.log.append(
            DeploymentEntry,
            t_ms,
            seed=self.config.seed,
            num_operators=self.config.num_operators,
            true_event_rate_per_hr=self.config.true_event_rate_per_hr,
            false_alarm_rate_per_hr=self.false_alarm_rate_per_hr,
            miss_probability=self.miss_probability,
            smoothing_mode=self.config.smoothing_mode,
        )

    def record_miss(self, t_ms: int, event_id: str) -> None:
        self.log.append(MissEntry, t_ms, event_id=event_id)

    def detect(
        self,
        t_ms: int,
        event_id: str,
        clip_start_ms: int,
        clip_end_ms: int,
        is_true_anomaly: bool,
    ) -> None:
        if event_id in self.truth:
            raise SimulationError(f"Event {event_id} already detected")
        self.truth[event_id] = is_true_anomaly
        self.log.append(
            DetectionEntry,
            t_ms,
            event_id=event_id,
            clip_start_ms=clip_start_ms,
            clip_end_ms=clip_end_ms,
            is_true_anomaly=is_true_anomaly,
        )

    def notify(self, t_ms: int, event_id: str) -> None:
        """Dispatch an alert and insert it into every operator's queue."""
        if event_id not in self.truth:
            raise UnknownEventError(f"Event {event_id} was never detected")
        self.notified_ms[event_id] = t_ms
        self.log.append(NotificationEntry, t_ms, event_id=event_id)
        for operator_id, queue in self.queues.items():
            queue[event_id] = t_ms
            self.log.append(
                QueueInsertEntry, t_ms, event_id=event_id, operator_id=operator_id
            )

    def submit_label(
        self, event_id: str, operator_id: int, value: LabelValue, t_ms: int
    ) -> bool:
        """Record an operator's label; the first label of an event wins.

        The accepted label also records the operator's action, and the event
        leaves every queue still holding it.

        Returns:
            True if the label was recorded, False if the event already had
            one (the attempt is logged as rejected and nothing else changes).

        Raises:
            UnknownEventError: The event was never detected.
            QueuePreconditionError: The event is unlabeled but not in this
                operator's queue.
        """
        if event_id not in self.truth:
            raise UnknownEventError(f"Event {event_id} was never detected")
        if value not in (CONFIRM, REJECT):
            raise SimulationError(f"Label value must be +1 or -1, got {value!r}")

        if event_id in self.labels:
            self.rejections += 1
            self.log.append(
                LabelRejectedEntry,
                t_ms,
                event_id=event_id,
                operator_id=operator_id,
                value=value,
            )
            log_with_context(
                logger,
                logging.DEBUG,
                "Duplicate label rejected",
                event_id=event_id,
                operator_id=operator_id,
                t_ms=t_ms,
            )
            return False

        queue = self.queues.get(operator_id)
        if queue is None or event_id not in queue:
            raise QueuePreconditionError(
                f"Event {event_id} is not in operator {operator_id}'s queue"
            )

        self.labels[event_id] = FeedbackLabel(event_id, operator_id, value, t_ms)
        self.log.append(
            LabelEntry, t_ms, event_id=event_id, operator_id=operator_id, value=value
        )
        self.log.append(ActionEntry, t_ms, event_id=event_id, operator_id=operator_id)
        for holder, holder_queue in self.queues.items():
            if holder_queue.pop(event_id, None) is not None:
                self.log.append(
                    QueueRemoveEntry, t_ms, event_id=event_id, operator_id=holder
                )
        self.labels_since_retrain += 1
        return True

    def retrain_due(self) -> bool:
        return self.labels_since_retrain >= self.config.retrain_batch_size

    def trigger_retraining(self, t_ms: int) -> RetrainEntry:
        """Fold the accumulated labels into the detector.

        The false-alarm rate (and the miss probability) shrink by their
        configured decay factors; the label accumulator resets.

        Raises:
            SimulationError: Fewer than ``retrain_batch_size`` labels have
                accumulated since the last retrain.
        """
        if not self.retrain_due():
            raise SimulationError(
                f"Retraining needs {self.config.retrain_batch_size} labels, "
                f"have {self.labels_since_retrain}"
            )
        old_rate = self.false_alarm_rate_per_hr
        old_miss = self.miss_probability
        self.false_alarm_rate_per_hr = old_rate * self.config.retrain_fp_decay
        self.miss_probability = old_miss * self.config.retrain_miss_decay
        self.epoch += 1
        entry: RetrainEntry = self.log.append(
            RetrainEntry,
            t_ms,
            epoch=self.epoch,
            labels_used=self.labels_since_retrain,
            old_false_alarm_rate_per_hr=old_rate,
            new_false_alarm_rate_per_hr=self.false_alarm_rate_per_hr,
            old_miss_probability=old_miss,
            new_miss_probability=self.miss_probability,
        )
        self.labels_since_retrain = 0
        log_with_context(
            logger,
            logging.DEBUG,
            "Detector retrained",
            epoch=self.epoch,
            t_ms=t_ms,
            old_rate=old_rate,
            new_rate=self.false_alarm_rate_per_hr,
        )
        return entry


class Simulation:
    """Drives a HitlState through the event calendar."""

    def __init__(self, config: SimConfig) -> None:
        self.config = config
        self.state = HitlState(config)
        self.rng = SimRandom(config.seed)
        self.scheduler = Scheduler()
        self._next_id = 0
        # operator -> event currently under review
        self._reviewing: dict[int, str | None] = {
            op: None for op in self.state.queues
        }

    def run(self) -> EventLog:
        self.state.deploy(0)
        self._schedule_true_incident()
        self._schedule_false_alarm()
        self.scheduler.run_until(to_millis(self.config.duration_s))
        return self.state.log.build()

    def _new_event_id(self) -> str:
        self._next_id += 1
        return format_event_id(self._next_id)

    # -- arrivals --------------------------------------------------------

    def _schedule_true_incident(self) -> None:
        gap = self.rng.interarrival_ms(self.config.true_event_rate_per_hr)
        if gap is not None:
            self.scheduler.schedule_after(gap, self._on_true_incident)

    def _schedule_false_alarm(self) -> None:
        # Drawn with the current rate, so retraining slows later arrivals.
        gap = self.rng.interarrival_ms(self.state.false_alarm_rate_per_hr)
        if gap is not None:
            self.scheduler.schedule_after(gap, self._on_false_alarm)

    def _on_true_incident(self) -> None:
        self._schedule_true_incident()
        event_id = self._new_event_id()
        now = self.scheduler.now_ms
        if self.rng.chance(self.state.miss_probability):
            self.state.record_miss(now, event_id)
            return
        self._start_clip(event_id, now, is_true_anomaly=True)

    def _on_false_alarm(self) -> None:
        self._schedule_false_alarm()
        self._start_clip(self._new_event_id(), self.scheduler.now_ms, False)

    def _start_clip(self, event_id: str, onset_ms: int, is_true_anomaly: bool) -> None:
        clip = self.config.clip_len_s
        clip_ms = self.rng.uniform_ms(clip.min_s, clip.max_s)
        self.scheduler.schedule(
            onset_ms + clip_ms,
            self._on_detection,
            event_id,
            onset_ms,
            onset_ms + clip_ms,
            is_true_anomaly,
        )

    # -- pipeline --------------------------------------------------------

    def _on_detection(
        self, event_id: str, clip_start_ms: int, clip_end_ms: int, is_true: bool
    ) -> None:
        now = self.scheduler.now_ms
        self.state.detect(now, event_id, clip_start_ms, clip_end_ms, is_true)
        delay = self.rng.delay_ms(self.config.notify_delay_s)
        self.scheduler.schedule_after(delay, self._on_notification, event_id)

    def _on_notification(self, event_id: str) -> None:
        self.state.notify(self.scheduler.now_ms, event_id)
        for operator_id, current in self._reviewing.items():
            if current is None:
                self._start_review(operator_id)

    def _start_review(self, operator_id: int) -> None:
        queue = self.state.queues[operator_id]
        if not queue:
            self._reviewing[operator_id] = None
            return
        event_id = next(iter(queue))
        self._reviewing[operator_id] = event_id
        delay = self.rng.delay_ms(self.config.operator_response_delay_s)
        self.scheduler.schedule_after(delay, self._on_label, operator_id, event_id)

    def _on_label(self, operator_id: int, event_id: str) -> None:
        now = self.scheduler.now_ms
        correct: LabelValue = CONFIRM if self.state.truth[event_id] else REJECT
        if self.rng.chance(self.config.operator_label_accuracy):
            value = correct
        else:
            value = REJECT if correct == CONFIRM else CONFIRM
        accepted = self.state.submit_label(event_id, operator_id, value, now)
        if accepted and self.state.retrain_due():
            self.state.trigger_retraining(now)
        self._start_review(operator_id)


def coerce_sim_config(config: SimConfig | Mapping[str, Any]) -> SimConfig:
    """Validate a mapping into a SimConfig.

    Raises:
        ConfigValidationError: Naming the offending field.
    """
    if isinstance(config, SimConfig):
        return config
    try:
        return SimConfig.model_validate(dict(config))
    except ValidationError as e:
        raise ConfigValidationError(
            f"Invalid simulation config: {describe_validation_error(e)}"
        ) from e


def run_simulation(config: SimConfig | Mapping[str, Any]) -> EventLog:
    """Run one seeded simulation and return its log.

    Equal (seed, config) pairs give equal logs.
    """
    sim_config = coerce_sim_config(config)
    log = Simulation(sim_config).run()
    summary = summarize(log)
    log_with_context(
        logger,
        logging.INFO,
        "Simulation finished",
        seed=sim_config.seed,
        entries=len(log),
        alerts=summary.alerts,
        labels=summary.labels,
        retrains=summary.retrains,
    )
    return log


def _run_seed(config: SimConfig, seed: int) -> EventLog:
    return run_simulation(config.model_copy(update={"seed": seed}))


def run_replicates(
    config: SimConfig | Mapping[str, Any],
    seeds: Sequence[int],
    workers: int = 1,
) -> list[EventLog]:
    """Run independent seeds, optionally across worker processes.

    Results come back in the order of ``seeds`` whatever the worker count.
    """
    sim_config = coerce_sim_config(config)
    if workers <= 1 or len(seeds) <= 1:
        return [_run_seed(sim_config, seed) for seed in seeds]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_seed, [sim_config] * len(seeds), seeds))


@dataclass(frozen=True)
class SimSummary:
    """Headline counts of one run."""

    entries: int
    alerts: int
    true_alerts: int
    false_alerts: int
    misses: int
    labels: int
    confirmed: int
    rejected_labels: int
    duplicate_attempts: int
    retrains: int
    unlabeled: int
    final_false_alarm_rate_per_hr: float | None

    def as_dict(self) -> dict[str, Any]:
        return dict(self.__dict__)


def summarize(log: EventLog) -> SimSummary:
    """Count what happened in a log."""
    alerts = log.alerts()
    labels = log.labels()
    retrains = log.retrains()
    deployments = log.of_kind("deployment")
    if retrains:
        final_rate: float | None = retrains[-1].new_false_alarm_rate_per_hr
    elif deployments:
        final_rate = deployments[0].false_alarm_rate_per_hr
    else:
        final_rate = None
    true_alerts = sum(1 for a in alerts.values() if a.is_true_anomaly)
    labeled = {label.event_id for label in labels}
    return SimSummary(
        entries=len(log),
        alerts=len(alerts),
        true_alerts=true_alerts,
        false_alerts=len(alerts) - true_alerts,
        misses=len(log.misses()),
        labels=len(labels),
        confirmed=sum(1 for label in labels if label.value == CONFIRM),
        rejected_labels=sum(1 for label in labels if label.value == REJECT),
        duplicate_attempts=len(log.of_kind("label-rejected")),
        retrains=len(retrains),
        unlabeled=sum(
            1
            for a in alerts.values()
            if a.notified_at_ms is not None and a.event_id not in labeled
        ),
        final_false_alarm_rate_per_hr=final_rate,
    )
