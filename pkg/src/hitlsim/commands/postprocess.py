"""Turn a frame file into an interval file.

Frames are smoothed with the 3 x 3 majority window and the surviving
anomalous runs are written as event intervals.
"""

from typing import Any

from hitlsim.commands.base import BaseCommand, CommandContext, CommandResult
from hitlsim.commands.registry import CommandRegistry
from hitlsim.events.frames import SmoothingMode, postprocess
from hitlsim.exceptions import InvalidArgumentError
from hitlsim.output.reports import postprocess_report
from hitlsim.store.frames import read_frames
from hitlsim.store.intervals import write_intervals
from hitlsim.utils.logging import info


@CommandRegistry.register
class PostprocessCommand(BaseCommand):
    """Smooth frame flags and extract event intervals."""

    @property
    def name(self) -> str:
        return "postprocess"

    @property
    def description(self) -> str:
        return "Smooth per-frame flags and write event intervals"

    def execute(self, ctx: CommandContext, **kwargs: Any) -> CommandResult:
        """Execute the postprocess command.

        Args:
            ctx: Command context.
            **kwargs: Command arguments:
                - frames: Frame file to read
                - out: Interval file to write
                - mode: Smoothing mode (default: from config)
        """
        frames_arg = kwargs.get("frames")
        out_arg = kwargs.get("out")
        if not frames_arg or not out_arg:
            raise InvalidArgumentError("postprocess needs a frame file and an output file")
        mode = SmoothingMode(kwargs.get("mode") or ctx.config.postprocess.smoothing_mode)

        frames_path = ctx.resolve(frames_arg)
        out_path = ctx.resolve(out_arg)
        series = read_frames(frames_path)
        events = postprocess(series, mode)
        write_intervals(out_path, events)

        effective = {
            "command": self.name,
            "frames": str(frames_path),
            "out": str(out_path),
            "mode": mode.value,
        }
        info(
            "Post-processed frames",
            frames=len(series),
            anomalous=series.anomalous_count,
            events=len(events),
            mode=mode.value,
        )
        return CommandResult.ok(
            postprocess_report(len(events), len(series), str(out_path), effective),
            events=len(events),
            effective=effective,
        )
