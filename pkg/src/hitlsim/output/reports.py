"""Builders that turn metric results into Reports."""

from collections.abc import Mapping, Sequence
from typing import Any

from hitlsim.events.matching import MatchReport
from hitlsim.metrics.accuracy import EpochAccuracy, detection_fnr
from hitlsim.metrics.latency import LatencyStats
from hitlsim.metrics.trust import TrustReport
from hitlsim.output.base import Report, Value
from hitlsim.sim.engine import SimSummary


def _flatten(prefix: str, value: Any, out: list[tuple[str, str, Value]]) -> None:
    if isinstance(value, Mapping):
        for key in value:
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], out)
    elif isinstance(value, list | tuple):
        out.append((prefix, prefix, ",".join(str(v) for v in value)))
    else:
        out.append((prefix, prefix, value))


def add_config_section(report: Report, effective: Mapping[str, Any]) -> None:
    """Record the effective configuration so the run can be replayed."""
    rows: list[tuple[str, str, Value]] = []
    _flatten("", effective, rows)
    report.add_section("config", "Effective configuration", rows)


def add_detection_section(report: Report, match: MatchReport) -> None:
    """Detection block laid out like the published event-level table."""
    report.add_section(
        "detection",
        "Event-based detection",
        [
            ("gt_events", "GT events", match.gt_count),
            ("pred_events", "Predicted events", match.pred_count),
            ("tp", "TP_detection", match.tp),
            ("fp", "FP_detection", match.fp),
            ("fn", "FN_detection", match.fn_),
            ("precision", "Precision", match.precision),
            ("recall", "Recall", match.recall),
            ("detection_fnr", "FNR_detection", detection_fnr(match)),
            ("mean_iou", "Mean IoU (matched)", match.mean_iou),
            ("iou_threshold", "IoU threshold", match.threshold),
        ],
    )


def detection_report(match: MatchReport, effective: Mapping[str, Any]) -> Report:
    report = Report("Event-level evaluation")
    add_detection_section(report, match)
    add_config_section(report, effective)
    return report


def add_latency_section(report: Report, name: str, title: str, stats: LatencyStats) -> None:
    report.add_section(
        name,
        title,
        [
            ("n", "Events", stats.n),
            ("mean_s", "Mean (s)", stats.mean_s),
            ("median_s", "Median (s)", stats.median_s),
            ("p90_s", "p90 (s)", stats.p90_s),
            ("p99_s", "p99 (s)", stats.p99_s),
            ("max_s", "Max (s)", stats.max_s),
        ],
    )


def metrics_report(
    *,
    feedback_fpr: float | None,
    oracle_fpr: float | None,
    oracle_fnr: float | None,
    technical: LatencyStats,
    organizational: LatencyStats,
    adaptation_time_s: float | None,
    epochs: Sequence[EpochAccuracy],
    effective: Mapping[str, Any],
    match: MatchReport | None = None,
) -> Report:
    report = Report("HITL UX metrics")
    report.add_section(
        "accuracy",
        "Accuracy",
        [
            ("feedback_fpr", "Feedback FPR (share of -1 labels)", feedback_fpr),
            ("oracle_fpr", "Oracle FPR (false alarms among alerts)", oracle_fpr),
            ("oracle_fnr", "Oracle FNR (missed incidents)", oracle_fnr),
            ("detection_fnr", "Detection FNR", detection_fnr(match) if match else None),
        ],
    )
    add_latency_section(report, "technical_latency", "Technical latency", technical)
    add_latency_section(
        report, "organizational_latency", "Organizational latency", organizational
    )
    report.add_section(
        "adaptation",
        "Adaptation",
        [("adaptation_time_s", "Adaptation time (s)", adaptation_time_s)],
    )
    report.add_section(
        "epochs",
        "Feedback FPR by detector epoch",
        [
            (f"epoch_{e.epoch}", f"Epoch {e.epoch} ({e.labels} labels)", e.feedback_fpr)
            for e in epochs
        ],
    )
    if match is not None:
        add_detection_section(report, match)
    add_config_section(report, effective)
    return report


def trust_report(trust: TrustReport, effective: Mapping[str, Any]) -> Report:
    report = Report("Trust survey")
    report.add_section(
        "trust",
        "Trust",
        [
            ("respondents", "Respondents", trust.n_respondents),
            ("items", "Items", trust.n_items),
            ("overall_mean", "Mean trust score", trust.overall_mean),
            ("overall_sd", "SD of trust scores", trust.overall_sd),
            ("cronbach_alpha", "Cronbach's alpha", trust.cronbach_alpha),
            ("alpha_error", "Alpha not computable", trust.alpha_error),
        ],
    )
    report.add_section(
        "respondents",
        "Per-respondent score",
        zip(trust.respondents, trust.respondents, trust.per_respondent_score, strict=True),
    )
    report.add_section(
        "item_total",
        "Corrected item-total correlation",
        [(item, item, r) for item, r in trust.item_total_correlations.items()],
    )
    add_config_section(report, effective)
    return report


def simulation_report(
    summaries: Sequence[tuple[int, SimSummary, str, str]], effective: Mapping[str, Any]
) -> Report:
    """One section per replicate: (seed, summary, output path, log digest)."""
    report = Report("Simulation")
    for seed, summary, out, digest in summaries:
        report.add_section(
            f"seed_{seed}",
            f"Seed {seed}",
            [
                ("log", "Log file", out),
                ("sha256", "Log SHA-256 (16 hex)", digest),
                ("entries", "Log entries", summary.entries),
                ("alerts", "Alerts", summary.alerts),
                ("true_alerts", "True alarms", summary.true_alerts),
                ("false_alerts", "False alarms", summary.false_alerts),
                ("misses", "Missed incidents", summary.misses),
                ("labels", "Labels", summary.labels),
                ("confirmed", "Confirmed (+1)", summary.confirmed),
                ("rejected_labels", "Rejected (-1)", summary.rejected_labels),
                ("duplicate_attempts", "Duplicate label attempts", summary.duplicate_attempts),
                ("unlabeled", "Unlabeled alerts", summary.unlabeled),
                ("retrains", "Retrains", summary.retrains),
                (
                    "final_false_alarm_rate_per_hr",
                    "Final false-alarm rate (/h)",
                    summary.final_false_alarm_rate_per_hr,
                ),
            ],
        )
    add_config_section(report, effective)
    return report


def postprocess_report(
    events: int, frames: int, out: str, effective: Mapping[str, Any]
) -> Report:
    report = Report("Post-processing")
    report.add_section(
        "postprocess",
        "Frame post-processing",
        [("frames", "Frames", frames), ("events", "Events", events), ("out", "Interval file", out)],
    )
    add_config_section(report, effective)
    return report
