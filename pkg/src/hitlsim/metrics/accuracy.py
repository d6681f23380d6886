"""False positive / false negative rates.

Two readings of FPR are provided. ``feedback_fpr`` is what a deployment can
measure: the share of operator labels that reject the alert. ``oracle_fpr``
uses the simulation's hidden ground truth. Neither has a true-negative
denominator, since an event stream has no countable negatives.
"""

from dataclasses import dataclass

from hitlsim.events.matching import MatchReport
from hitlsim.sim.records import REJECT, EventLog


def _ratio(numerator: int, denominator: int) -> float | None:
    return numerator / denominator if denominator else None


def feedback_fpr(log: EventLog) -> float | None:
    """Share of feedback labels that are -1; None without labels."""
    labels = log.labels()
    return _ratio(sum(1 for label in labels if label.value == REJECT), len(labels))


def positive_label_share(log: EventLog) -> float | None:
    labels = log.labels()
    return _ratio(sum(1 for label in labels if label.value != REJECT), len(labels))


def oracle_fpr(log: EventLog) -> float | None:
    """Share of notified alerts that were false alarms (ground truth)."""
    notified = [a for a in log.alerts().values() if a.notified_at_ms is not None]
    return _ratio(sum(1 for a in notified if not a.is_true_anomaly), len(notified))


def oracle_fnr(log: EventLog) -> float | None:
    """Missed true incidents over all true incidents the log knows about."""
    misses = len(log.misses())
    detected = sum(1 for a in log.alerts().values() if a.is_true_anomaly)
    return _ratio(misses, misses + detected)


def detection_fnr(report: MatchReport) -> float | None:
    """fn / gt_count, i.e. 1 - recall; None when there is no ground truth."""
    return _ratio(report.fn_, report.gt_count)


@dataclass(frozen=True)
class EpochAccuracy:
    """Feedback between two retrains.

    Epoch 0 runs from deployment to the first retrain.
    """

    epoch: int
    labels: int
    rejected: int
    false_alarm_rate_per_hr: float | None

    @property
    def feedback_fpr(self) -> float | None:
        return _ratio(self.rejected, self.labels)


def feedback_fpr_by_epoch(log: EventLog) -> list[EpochAccuracy]:
    """Feedback FPR per detector epoch, to follow the alert-fatigue trend."""
    deployments = log.of_kind("deployment")
    rate: float | None = deployments[0].false_alarm_rate_per_hr if deployments else None
    epochs: list[EpochAccuracy] = []
    epoch = labels = rejected = 0
    for entry in log:
        if entry.kind == "label":
            labels += 1
            rejected += int(entry.value == REJECT)
        elif entry.kind == "retrain":
            epochs.append(EpochAccuracy(epoch, labels, rejected, rate))
            epoch, labels, rejected = entry.epoch, 0, 0
            rate = entry.new_false_alarm_rate_per_hr
    if deployments or epochs:
        epochs.append(EpochAccuracy(epoch, labels, rejected, rate))
    return epochs
