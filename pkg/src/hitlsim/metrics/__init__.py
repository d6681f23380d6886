"""Post-deployment UX metrics: accuracy, latency, adaptation time and trust."""

from hitlsim.metrics.accuracy import (
    EpochAccuracy,
    detection_fnr,
    feedback_fpr,
    feedback_fpr_by_epoch,
    oracle_fnr,
    oracle_fpr,
    positive_label_share,
)
from hitlsim.metrics.adaptation import (
    adaptation_time,
    coefficient_of_variation,
    window_means,
)
from hitlsim.metrics.latency import (
    LatencyStats,
    latency_stats,
    nearest_rank,
    organizational_latency,
    technical_latency,
)
from hitlsim.metrics.trust import (
    SurveyResponseSet,
    TrustReport,
    cronbach_alpha,
    item_total_correlations,
    trust_score,
)

__all__ = [
    "EpochAccuracy",
    "LatencyStats",
    "SurveyResponseSet",
    "TrustReport",
    "adaptation_time",
    "coefficient_of_variation",
    "cronbach_alpha",
    "detection_fnr",
    "feedback_fpr",
    "feedback_fpr_by_epoch",
    "item_total_correlations",
    "latency_stats",
    "nearest_rank",
    "oracle_fnr",
    "oracle_fpr",
    "organizational_latency",
    "positive_label_share",
    "technical_latency",
    "trust_score",
    "window_means",
]
