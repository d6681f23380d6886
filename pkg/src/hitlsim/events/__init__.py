"""Frame post-processing and event-level evaluation.

Usage:
    from hitlsim.events import FrameSeries, postprocess, match_events

    events = postprocess(FrameSeries((0, 1, 1, 1, 1, 1, 0, 0, 0)))
    report = match_events(ground_truth, events, threshold=0.5)
"""

from hitlsim.events.frames import (
    EventInterval,
    FrameSeries,
    SmoothingMode,
    extract_events,
    postprocess,
    smooth,
)
from hitlsim.events.matching import (
    DEFAULT_IOU_THRESHOLD,
    Match,
    MatchReport,
    iou,
    iou_matrix,
    match_events,
    precision_recall,
)

__all__ = [
    "DEFAULT_IOU_THRESHOLD",
    "EventInterval",
    "FrameSeries",
    "Match",
    "MatchReport",
    "SmoothingMode",
    "extract_events",
    "iou",
    "iou_matrix",
    "match_events",
    "postprocess",
    "precision_recall",
    "smooth",
]
