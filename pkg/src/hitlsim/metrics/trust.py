"""Trust scores and scale reliability from Likert questionnaires.

Variances use the population convention (divide by n) throughout. Sums of
squares are taken on integer scores and the final ratio is formed exactly,
so alpha is not subject to floating-point drift (identical item columns give
exactly 1.0).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from hitlsim.exceptions import ReliabilityError, SurveyValidationError
from hitlsim.utils.logging import get_logger, log_with_context

logger = get_logger(__name__)


@dataclass(frozen=True)
class SurveyResponseSet:
    """Respondent rows by item columns of integer Likert scores.

    ``reverse_coded`` names the items scored in the opposite direction.
    Rows must be complete; missing entries are not imputed.

    Raises:
        SurveyValidationError: On a shape problem or an out-of-scale cell
            (with its 1-based row and column).
    """

    items: tuple[str, ...]
    scores: tuple[tuple[int, ...], ...]
    scale_min: int = 1
    scale_max: int = 7
    reverse_coded: frozenset[str] = frozenset()
    respondents: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "scores", tuple(tuple(row) for row in self.scores))
        object.__setattr__(self, "reverse_coded", frozenset(self.reverse_coded))
        if not self.respondents:
            object.__setattr__(
                self, "respondents", tuple(f"r{i + 1}" for i in range(len(self.scores)))
            )
        else:
            object.__setattr__(self, "respondents", tuple(self.respondents))
        self._validate()

    def _validate(self) -> None:
        if self.scale_min >= self.scale_max:
            raise SurveyValidationError(
                f"scale_min ({self.scale_min}) must be below scale_max ({self.scale_max})"
            )
        if not self.items:
            raise SurveyValidationError("Survey has no items")
        if len(set(self.items)) != len(self.items):
            raise SurveyValidationError("Item names must be unique")
        unknown = self.reverse_coded - set(self.items)
        if unknown:
            raise SurveyValidationError(
                f"Reverse-coded items not in survey: {', '.join(sorted(unknown))}"
            )
        if len(self.respondents) != len(self.scores):
            raise SurveyValidationError(
                f"{len(self.respondents)} respondent names for {len(self.scores)} rows"
            )
        if len(set(self.respondents)) != len(self.respondents):
            raise SurveyValidationError("Respondent names must be unique")

        for r, row in enumerate(self.scores, start=1):
            if len(row) != len(self.items):
                raise SurveyValidationError(
                    f"Row {r} has {len(row)} scores, expected {len(self.items)}",
                    row=r,
                )
            for c, score in enumerate(row, start=1):
                if isinstance(score, bool) or not isinstance(score, int | np.integer):
                    raise SurveyValidationError(
                        f"Row {r}, column {c}: score {score!r} is not an integer",
                        row=r,
                        column=c,
                    )
                if not self.scale_min <= score <= self.scale_max:
                    raise SurveyValidationError(
                        f"Row {r}, column {c}: score {score} outside "
                        f"[{self.scale_min}, {self.scale_max}]",
                        row=r,
                        column=c,
                    )

    @property
    def n_respondents(self) -> int:
        return len(self.scores)

    @property
    def n_items(self) -> int:
        return len(self.items)

    @property
    def reverse_indices(self) -> frozenset[int]:
        return frozenset(i for i, item in enumerate(self.items) if item in self.reverse_coded)

    def corrected(self) -> npt.NDArray[np.int64]:
        """Score matrix with reverse-coded items mapped x -> min + max - x."""
        matrix = np.array(self.scores, dtype=np.int64).reshape(
            self.n_respondents, self.n_items
        )
        for j in self.reverse_indices:
            matrix[:, j] = self.scale_min + self.scale_max - matrix[:, j]
        return matrix


def _scaled_variance(values: npt.NDArray[np.int64]) -> int:
    """n**2 times the population variance, exact for integer data."""
    n = values.shape[0]
    return int(n * int(np.sum(values * values)) - int(np.sum(values)) ** 2)


def cronbach_alpha(survey: SurveyResponseSet) -> float:
    """Internal-consistency reliability of the (reverse-corrected) items.

    alpha = k/(k-1) * (1 - sum(item variances) / variance(total score)).
    May be negative; never above 1.

    Raises:
        ReliabilityError: Fewer than 2 items or respondents, or zero
            variance in the total scores.
    """
    k = survey.n_items
    if k < 2:
        raise ReliabilityError(
            f"Reliability needs at least 2 items, got {k}",
            user_message="at least 2 items required",
        )
    if survey.n_respondents < 2:
        raise ReliabilityError(
            f"Reliability needs at least 2 respondents, got {survey.n_respondents}",
            user_message="at least 2 respondents required",
        )
    matrix = survey.corrected()
    item_sum = sum(_scaled_variance(matrix[:, j]) for j in range(k))
    total = _scaled_variance(matrix.sum(axis=1))
    if total == 0:
        raise ReliabilityError()
    return float(Fraction(k * (total - item_sum), (k - 1) * total))


def item_total_correlations(survey: SurveyResponseSet) -> dict[str, float | None]:
    """Correlation of each item with the total of the remaining items.

    None where either side has no variance (or there are too few items or
    respondents for a correlation).
    """
    result: dict[str, float | None] = {item: None for item in survey.items}
    if survey.n_items < 2 or survey.n_respondents < 2:
        return result
    matrix = survey.corrected().astype(np.float64)
    totals = matrix.sum(axis=1)
    for j, item in enumerate(survey.items):
        column = matrix[:, j]
        rest = totals - column
        if column.std() == 0 or rest.std() == 0:
            continue
        result[item] = float(np.corrcoef(column, rest)[0, 1])
    return result


@dataclass(frozen=True)
class TrustReport:
    """Per-respondent trust scores and scale statistics.

    ``overall_sd`` is the population SD of the per-respondent scores.
    ``cronbach_alpha`` is None when it cannot be computed; ``alpha_error``
    then says why.
    """

    respondents: tuple[str, ...]
    per_respondent_score: tuple[float, ...]
    overall_mean: float | None
    overall_sd: float | None
    cronbach_alpha: float | None
    n_items: int
    item_total_correlations: dict[str, float | None] = field(default_factory=dict)
    alpha_error: str | None = None

    @property
    def n_respondents(self) -> int:
        return len(self.respondents)


def trust_score(survey: SurveyResponseSet) -> TrustReport:
    matrix = survey.corrected().astype(np.float64)
    if survey.n_respondents:
        per_respondent = matrix.mean(axis=1)
        overall_mean: float | None = float(per_respondent.mean())
        overall_sd: float | None = float(per_respondent.std())
    else:
        per_respondent = np.zeros(0)
        overall_mean = overall_sd = None

    alpha: float | None = None
    alpha_error: str | None = None
    try:
        alpha = cronbach_alpha(survey)
    except ReliabilityError as e:
        alpha_error = e.user_message
        log_with_context(
            logger,
            logging.WARNING,
            "Cronbach's alpha not computable",
            reason=alpha_error,
            items=survey.n_items,
            respondents=survey.n_respondents,
        )

    return TrustReport(
        respondents=survey.respondents,
        per_respondent_score=tuple(float(s) for s in per_respondent),
        overall_mean=overall_mean,
        overall_sd=overall_sd,
        cronbach_alpha=alpha,
        n_items=survey.n_items,
        item_total_correlations=item_total_correlations(survey),
        alpha_error=alpha_error,
    )
