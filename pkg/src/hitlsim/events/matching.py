"""IoU-based one-to-one matching of predicted against ground-truth events."""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from hitlsim.events.frames import EventInterval
from hitlsim.exceptions import InvalidArgumentError
from hitlsim.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_IOU_THRESHOLD = 0.5


@dataclass(frozen=True)
class Match:
    """One accepted (ground truth, prediction) pair.

    Indices refer to the canonical (start, end)-sorted order of each list.
    """

    gt_index: int
    pred_index: int
    iou: float


@dataclass(frozen=True)
class MatchReport:
    """Detection counts for one ground-truth vs prediction comparison.

    Attributes:
        gt_count: Number of ground-truth events.
        pred_count: Number of predicted events.
        tp: Accepted matches.
        fp: Predictions left unmatched.
        fn_: Ground-truth events left unmatched.
        matches: Accepted pairs in acceptance order.
        threshold: IoU a pair had to exceed.
        warnings: Input problems that did not stop the evaluation.
    """

    gt_count: int
    pred_count: int
    tp: int
    fp: int
    fn_: int
    matches: tuple[Match, ...] = ()
    threshold: float = DEFAULT_IOU_THRESHOLD
    warnings: tuple[str, ...] = field(default=())

    @property
    def precision(self) -> float | None:
        """tp / pred_count, or None when there are no predictions."""
        return self.tp / self.pred_count if self.pred_count else None

    @property
    def recall(self) -> float | None:
        """tp / gt_count, or None when there is no ground truth."""
        return self.tp / self.gt_count if self.gt_count else None

    @property
    def mean_iou(self) -> float | None:
        """Mean IoU over accepted matches."""
        if not self.matches:
            return None
        return float(np.mean([m.iou for m in self.matches]))


def iou(a: EventInterval, b: EventInterval) -> float:
    """Intersection over union of two inclusive frame intervals."""
    intersection = min(a.end_frame, b.end_frame) - max(a.start_frame, b.start_frame) + 1
    if intersection <= 0:
        return 0.0
    union = a.length + b.length - intersection
    return intersection / union


def iou_matrix(
    gt: Sequence[EventInterval], pred: Sequence[EventInterval]
) -> npt.NDArray[np.float64]:
    """Pairwise IoU, shape ``(len(gt), len(pred))``."""
    if not gt or not pred:
        return np.zeros((len(gt), len(pred)), dtype=np.float64)
    g = np.array([(i.start_frame, i.end_frame) for i in gt], dtype=np.int64)
    p = np.array([(i.start_frame, i.end_frame) for i in pred], dtype=np.int64)
    inter = (
        np.minimum(g[:, None, 1], p[None, :, 1])
        - np.maximum(g[:, None, 0], p[None, :, 0])
        + 1
    ).clip(min=0)
    g_len = (g[:, 1] - g[:, 0] + 1)[:, None]
    p_len = (p[:, 1] - p[:, 0] + 1)[None, :]
    union = g_len + p_len - inter
    return inter / union


def _overlap_warnings(name: str, intervals: Sequence[EventInterval]) -> list[str]:
    """One warning per interval starting inside an earlier one (sorted input)."""
    warnings: list[str] = []
    if not intervals:
        return warnings
    furthest = intervals[0]
    for cur in intervals[1:]:
        if cur.start_frame <= furthest.end_frame:
            warnings.append(f"{name} intervals {furthest} and {cur} overlap")
        if cur.end_frame > furthest.end_frame:
            furthest = cur
    return warnings


def match_events(
    gt: Sequence[EventInterval],
    pred: Sequence[EventInterval],
    threshold: float = DEFAULT_IOU_THRESHOLD,
) -> MatchReport:
    """Greedy one-to-one matching by descending IoU.

    Both lists are sorted by (start, end) first. Every pair with IoU strictly
    above ``threshold`` is a candidate; candidates are taken in order of
    descending IoU, then ascending ground-truth index, then ascending
    prediction index, and accepted when neither side is matched yet.

    Args:
        gt: Ground-truth events.
        pred: Predicted events.
        threshold: IoU a pair must exceed, in [0, 1].

    Returns:
        The match report.
    """
    if not 0.0 <= threshold <= 1.0:
        raise InvalidArgumentError(f"IoU threshold must be in [0, 1], got {threshold}")

    gt_sorted = sorted(gt)
    pred_sorted = sorted(pred)
    warnings = _overlap_warnings("ground-truth", gt_sorted) + _overlap_warnings(
        "predicted", pred_sorted
    )
    for message in warnings:
        logger.warning(message)

    scores = iou_matrix(gt_sorted, pred_sorted)
    gi, pi = np.nonzero(scores > threshold)
    candidates = sorted(
        ((float(scores[g, p]), int(g), int(p)) for g, p in zip(gi, pi, strict=True)),
        key=lambda c: (-c[0], c[1], c[2]),
    )

    matched_gt: set[int] = set()
    matched_pred: set[int] = set()
    matches: list[Match] = []
    for score, g, p in candidates:
        if g in matched_gt or p in matched_pred:
            continue
        matched_gt.add(g)
        matched_pred.add(p)
        matches.append(Match(gt_index=g, pred_index=p, iou=score))

    tp = len(matches)
    return MatchReport(
        gt_count=len(gt_sorted),
        pred_count=len(pred_sorted),
        tp=tp,
        fp=len(pred_sorted) - tp,
        fn_=len(gt_sorted) - tp,
        matches=tuple(matches),
        threshold=threshold,
        warnings=tuple(warnings),
    )


def precision_recall(report: MatchReport) -> tuple[float | None, float | None]:
    """Return (precision, recall); None marks an undefined rate."""
    return report.precision, report.recall
