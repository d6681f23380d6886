"""Score a trust questionnaire."""

from typing import Any

from hitlsim.commands.base import BaseCommand, CommandContext, CommandResult
from hitlsim.commands.registry import CommandRegistry
from hitlsim.exceptions import InvalidArgumentError, ReliabilityError
from hitlsim.metrics.trust import trust_score
from hitlsim.output.reports import trust_report
from hitlsim.store.survey import read_survey


@CommandRegistry.register
class SurveyCommand(BaseCommand):
    """Trust scores and Cronbach's alpha from a survey file."""

    @property
    def name(self) -> str:
        return "survey"

    @property
    def description(self) -> str:
        return "Score Likert trust surveys and report reliability"

    def execute(self, ctx: CommandContext, **kwargs: Any) -> CommandResult:
        responses_arg = kwargs.get("responses")
        if not responses_arg:
            raise InvalidArgumentError("survey needs --responses")
        alpha_strict = bool(kwargs.get("alpha_strict", False))

        path = ctx.resolve(responses_arg)
        trust = trust_score(read_survey(path))
        if alpha_strict and trust.cronbach_alpha is None:
            raise ReliabilityError(f"{path}: {trust.alpha_error}")

        effective = {"command": self.name, "responses": str(path), "alpha_strict": alpha_strict}
        return CommandResult.ok(trust_report(trust, effective), trust=trust, effective=effective)
