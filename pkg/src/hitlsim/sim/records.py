"""Log atoms of the alert -> feedback -> retraining pipeline.

Every simulated happening is an append-only log entry with a strictly
increasing sequence number and a timestamp in integer milliseconds. The
record views (alerts, labels, actions) are derived from the log so that
metrics computed on a simulated run and on a log file read back from disk
are the same computation.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, StringConstraints

from hitlsim.events.frames import SmoothingMode
from hitlsim.exceptions import InvalidLogError

EVENT_ID_PATTERN = r"^evt-[0-9]{6,}$"

EventId = Annotated[str, StringConstraints(pattern=EVENT_ID_PATTERN)]
Millis = Annotated[int, Field(ge=0)]
OperatorId = Annotated[int, Field(ge=1)]
LabelValue = Literal[1, -1]

CONFIRM: LabelValue = 1
REJECT: LabelValue = -1


def format_event_id(number: int) -> str:
    return f"evt-{number:06d}"


class _Entry(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    seq: int = Field(ge=1)
    t_ms: Millis


class DeploymentEntry(_Entry):
    """System goes live; time zero of every duration metric."""

    kind: Literal["deployment"] = "deployment"
    seed: int = Field(ge=0)
    num_operators: OperatorId
    true_event_rate_per_hr: float = Field(ge=0.0)
    false_alarm_rate_per_hr: float = Field(ge=0.0)
    miss_probability: float = Field(ge=0.0, le=1.0)
    smoothing_mode: SmoothingMode


class MissEntry(_Entry):
    """A true incident the detector never alerted on (ground truth)."""

    kind: Literal["miss"] = "miss"
    event_id: EventId


class DetectionEntry(_Entry):
    kind: Literal["detection"] = "detection"
    event_id: EventId
    clip_start_ms: Millis
    clip_end_ms: Millis
    is_true_anomaly: bool


class NotificationEntry(_Entry):
    kind: Literal["notification"] = "notification"
    event_id: EventId


class QueueInsertEntry(_Entry):
    kind: Literal["queue-insert"] = "queue-insert"
    event_id: EventId
    operator_id: OperatorId


class QueueRemoveEntry(_Entry):
    kind: Literal["queue-remove"] = "queue-remove"
    event_id: EventId
    operator_id: OperatorId


class LabelEntry(_Entry):
    kind: Literal["label"] = "label"
    event_id: EventId
    operator_id: OperatorId
    value: LabelValue


class LabelRejectedEntry(_Entry):
    """A second label attempt on an already-labeled event."""

    kind: Literal["label-rejected"] = "label-rejected"
    event_id: EventId
    operator_id: OperatorId
    value: LabelValue
    reason: Literal["already-labeled"] = "already-labeled"


class ActionEntry(_Entry):
    kind: Literal["action"] = "action"
    event_id: EventId
    operator_id: OperatorId


class RetrainEntry(_Entry):
    kind: Literal["retrain"] = "retrain"
    epoch: int = Field(ge=1)
    labels_used: int = Field(ge=0)
    old_false_alarm_rate_per_hr: float = Field(ge=0.0)
    new_false_alarm_rate_per_hr: float = Field(ge=0.0)
    old_miss_probability: float = Field(ge=0.0, le=1.0)
    new_miss_probability: float = Field(ge=0.0, le=1.0)


LogEntry = Annotated[
    DeploymentEntry
    | MissEntry
    | DetectionEntry
    | NotificationEntry
    | QueueInsertEntry
    | QueueRemoveEntry
    | LabelEntry
    | LabelRejectedEntry
    | ActionEntry
    | RetrainEntry,
    Field(discriminator="kind"),
]

ENTRY_TYPES: dict[str, type[_Entry]] = {
    cls.model_fields["kind"].default: cls
    for cls in (
        DeploymentEntry,
        MissEntry,
        DetectionEntry,
        NotificationEntry,
        QueueInsertEntry,
        QueueRemoveEntry,
        LabelEntry,
        LabelRejectedEntry,
        ActionEntry,
        RetrainEntry,
    )
}


@dataclass(frozen=True)
class AlertRecord:
    """One dispatched clip alert and its feedback state.

    ``notified_at_ms`` is None when the run ended between detection and
    notification; ``label`` is None until an operator labels the event.
    """

    event_id: str
    clip_start_ms: int
    clip_end_ms: int
    detected_at_ms: int
    notified_at_ms: int | None
    is_true_anomaly: bool
    label: int | None = None

    @property
    def clip_start_s(self) -> float:
        return self.clip_start_ms / 1000

    @property
    def clip_end_s(self) -> float:
        return self.clip_end_ms / 1000

    @property
    def detected_at_s(self) -> float:
        return self.detected_at_ms / 1000

    @property
    def notified_at_s(self) -> float | None:
        return None if self.notified_at_ms is None else self.notified_at_ms / 1000


@dataclass(frozen=True)
class FeedbackLabel:
    event_id: str
    operator_id: int
    value: int
    labeled_at_ms: int

    @property
    def labeled_at_s(self) -> float:
        return self.labeled_at_ms / 1000


@dataclass(frozen=True)
class ActionRecord:
    """The operator's recorded action on an alert (its labeling, here)."""

    event_id: str
    operator_id: int
    acted_at_ms: int

    @property
    def acted_at_s(self) -> float:
        return self.acted_at_ms / 1000


@dataclass(frozen=True)
class EventLog:
    """Immutable, validated sequence of log entries.

    Raises:
        InvalidLogError: If sequence numbers are not strictly increasing,
            timestamps decrease, or an entry refers to an event before it
            was detected/notified.
    """

    entries: tuple[Any, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        _check_invariants(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.entries)

    def of_kind(self, kind: str) -> list[Any]:
        return [e for e in self.entries if e.kind == kind]

    @cached_property
    def deployment_ms(self) -> int | None:
        """Timestamp of the first deployment entry."""
        for entry in self.entries:
            if entry.kind == "deployment":
                return int(entry.t_ms)
        return None

    def alerts(self) -> dict[str, AlertRecord]:
        """Alerts keyed by event id, in detection order."""
        alerts: dict[str, AlertRecord] = {}
        notified: dict[str, int] = {}
        labels: dict[str, int] = {}
        for entry in self.entries:
            if entry.kind == "detection":
                alerts[entry.event_id] = AlertRecord(
                    event_id=entry.event_id,
                    clip_start_ms=entry.clip_start_ms,
                    clip_end_ms=entry.clip_end_ms,
                    detected_at_ms=entry.t_ms,
                    notified_at_ms=None,
                    is_true_anomaly=entry.is_true_anomaly,
                )
            elif entry.kind == "notification":
                notified.setdefault(entry.event_id, entry.t_ms)
            elif entry.kind == "label":
                labels.setdefault(entry.event_id, entry.value)
        return {
            event_id: AlertRecord(
                event_id=record.event_id,
                clip_start_ms=record.clip_start_ms,
                clip_end_ms=record.clip_end_ms,
                detected_at_ms=record.detected_at_ms,
                notified_at_ms=notified.get(event_id),
                is_true_anomaly=record.is_true_anomaly,
                label=labels.get(event_id),
            )
            for event_id, record in alerts.items()
        }

    def labels(self) -> list[FeedbackLabel]:
        return [
            FeedbackLabel(e.event_id, e.operator_id, e.value, e.t_ms)
            for e in self.entries
            if e.kind == "label"
        ]

    def actions(self) -> list[ActionRecord]:
        return [
            ActionRecord(e.event_id, e.operator_id, e.t_ms)
            for e in self.entries
            if e.kind == "action"
        ]

    def retrains(self) -> list[RetrainEntry]:
        return [e for e in self.entries if e.kind == "retrain"]

    def misses(self) -> list[MissEntry]:
        return [e for e in self.entries if e.kind == "miss"]


# Kinds that may only follow a notification of the same event.
_AFTER_NOTIFICATION = frozenset(
    {"queue-insert", "queue-remove", "label", "label-rejected", "action"}
)


def _check_invariants(entries: tuple[Any, ...]) -> None:
    last_seq = 0
    last_t = -1
    detected: set[str] = set()
    notified: set[str] = set()
    labeled: set[str] = set()
    for index, entry in enumerate(entries):
        if entry.seq <= last_seq:
            raise InvalidLogError(
                f"seq {entry.seq} does not increase (previous {last_seq})",
                index=index,
            )
        if entry.t_ms < last_t:
            raise InvalidLogError(
                f"seq {entry.seq}: timestamp goes backwards", index=index
            )
        last_seq, last_t = entry.seq, entry.t_ms

        kind = entry.kind
        if kind == "detection":
            if entry.event_id in detected:
                raise InvalidLogError(
                    f"seq {entry.seq}: event {entry.event_id} detected twice",
                    index=index,
                )
            if entry.clip_end_ms < entry.clip_start_ms:
                raise InvalidLogError(
                    f"seq {entry.seq}: clip ends before it starts", index=index
                )
            detected.add(entry.event_id)
        elif kind == "notification":
            if entry.event_id not in detected:
                raise InvalidLogError(
                    f"seq {entry.seq}: notification for undetected {entry.event_id}",
                    index=index,
                )
            notified.add(entry.event_id)
        elif kind in _AFTER_NOTIFICATION and entry.event_id not in notified:
            raise InvalidLogError(
                f"seq {entry.seq}: {kind} for {entry.event_id} before its notification",
                index=index,
            )
        if kind == "label":
            if entry.event_id in labeled:
                raise InvalidLogError(
                    f"seq {entry.seq}: event {entry.event_id} labeled twice",
                    index=index,
                )
            labeled.add(entry.event_id)


class LogBuilder:
    """Appends entries with consecutive sequence numbers."""

    def __init__(self) -> None:
        self._entries: list[Any] = []

    def append(self, entry_type: type[_Entry], t_ms: int, **fields: Any) -> Any:
        entry = entry_type(seq=len(self._entries) + 1, t_ms=t_ms, **fields)
        self._entries.append(entry)
        return entry

    def __len__(self) -> int:
        return len(self._entries)

    def build(self) -> EventLog:
        return EventLog(tuple(self._entries))
