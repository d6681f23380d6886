"""Compute the UX metrics of a simulated or recorded event log."""

from typing import Any

from hitlsim.commands.base import BaseCommand, CommandContext, CommandResult
from hitlsim.commands.registry import CommandRegistry
from hitlsim.events.matching import MatchReport, match_events
from hitlsim.exceptions import InvalidArgumentError
from hitlsim.metrics.accuracy import (
    feedback_fpr,
    feedback_fpr_by_epoch,
    oracle_fnr,
    oracle_fpr,
)
from hitlsim.metrics.adaptation import adaptation_time
from hitlsim.metrics.latency import organizational_latency, technical_latency
from hitlsim.output.reports import metrics_report
from hitlsim.store.intervals import read_intervals
from hitlsim.store.logfile import read_log


@CommandRegistry.register
class MetricsCommand(BaseCommand):
    """Accuracy, latency and adaptation time from an event log."""

    @property
    def name(self) -> str:
        return "metrics"

    @property
    def description(self) -> str:
        return "Compute accuracy, latency and adaptation metrics from a log"

    def execute(self, ctx: CommandContext, **kwargs: Any) -> CommandResult:
        """Execute the metrics command.

        Args:
            ctx: Command context.
            **kwargs: Command arguments:
                - log: Event log file
                - window, cv, stable: Adaptation detector settings (default: config)
                - gt, pred: Optional interval files for detection FNR
                - iou: IoU threshold for the optional match (default: config)
        """
        log_arg = kwargs.get("log")
        if not log_arg:
            raise InvalidArgumentError("metrics needs --log")
        defaults = ctx.config.metrics
        window = _pick(kwargs.get("window"), defaults.window_s)
        cv = _pick(kwargs.get("cv"), defaults.cv_threshold)
        stable = int(_pick(kwargs.get("stable"), defaults.stable_windows))

        gt_arg, pred_arg = kwargs.get("gt"), kwargs.get("pred")
        if bool(gt_arg) != bool(pred_arg):
            raise InvalidArgumentError("--gt and --pred must be given together")

        log_path = ctx.resolve(log_arg)
        log = read_log(log_path)

        match: MatchReport | None = None
        effective: dict[str, Any] = {
            "command": self.name,
            "log": str(log_path),
            "window_s": window,
            "cv_threshold": cv,
            "stable_windows": stable,
        }
        if gt_arg and pred_arg:
            iou = _pick(kwargs.get("iou"), ctx.config.evaluation.iou_threshold)
            gt_path, pred_path = ctx.resolve(gt_arg), ctx.resolve(pred_arg)
            match = match_events(read_intervals(gt_path), read_intervals(pred_path), iou)
            effective.update(gt=str(gt_path), pred=str(pred_path), iou_threshold=iou)

        report = metrics_report(
            feedback_fpr=feedback_fpr(log),
            oracle_fpr=oracle_fpr(log),
            oracle_fnr=oracle_fnr(log),
            technical=technical_latency(log),
            organizational=organizational_latency(log),
            adaptation_time_s=adaptation_time(log, window, cv, stable),
            epochs=feedback_fpr_by_epoch(log),
            effective=effective,
            match=match,
        )
        return CommandResult.ok(report, effective=effective)


def _pick(value: Any, default: float) -> float:
    return float(default if value is None else value)
