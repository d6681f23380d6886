"""Event-level evaluation of predicted intervals against ground truth."""

from typing import Any

from hitlsim.commands.base import BaseCommand, CommandContext, CommandResult
from hitlsim.commands.registry import CommandRegistry
from hitlsim.events.matching import match_events
from hitlsim.exceptions import InvalidArgumentError
from hitlsim.output.reports import detection_report
from hitlsim.store.intervals import read_intervals


@CommandRegistry.register
class EvaluateCommand(BaseCommand):
    """Match predicted events to ground truth by IoU."""

    @property
    def name(self) -> str:
        return "eval"

    @property
    def description(self) -> str:
        return "Score predicted event intervals against ground truth"

    @property
    def aliases(self) -> list[str]:
        return ["evaluate"]

    def execute(self, ctx: CommandContext, **kwargs: Any) -> CommandResult:
        gt_arg = kwargs.get("gt")
        pred_arg = kwargs.get("pred")
        if not gt_arg or not pred_arg:
            raise InvalidArgumentError("eval needs --gt and --pred interval files")
        iou = kwargs.get("iou")
        threshold = ctx.config.evaluation.iou_threshold if iou is None else float(iou)

        gt_path, pred_path = ctx.resolve(gt_arg), ctx.resolve(pred_arg)
        report = match_events(read_intervals(gt_path), read_intervals(pred_path), threshold)

        effective = {
            "command": self.name,
            "gt": str(gt_path),
            "pred": str(pred_path),
            "iou_threshold": threshold,
        }
        return CommandResult.ok(
            detection_report(report, effective), match=report, effective=effective
        )
