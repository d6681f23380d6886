"""Subcommand implementations.

Usage:
    from hitlsim.commands import CommandRegistry

    cmd = CommandRegistry.create("eval")
    result = cmd.run(context, gt="gt.csv", pred="pred.csv")
"""

# Import commands to trigger registration
from hitlsim.commands.base import BaseCommand, CommandContext, CommandResult
from hitlsim.commands.evaluate import EvaluateCommand
from hitlsim.commands.metrics import MetricsCommand
from hitlsim.commands.postprocess import PostprocessCommand
from hitlsim.commands.registry import CommandRegistry
from hitlsim.commands.simulate import SimulateCommand
from hitlsim.commands.survey import SurveyCommand

__all__ = [
    "BaseCommand",
    "CommandContext",
    "CommandRegistry",
    "CommandResult",
    "EvaluateCommand",
    "MetricsCommand",
    "PostprocessCommand",
    "SimulateCommand",
    "SurveyCommand",
]
