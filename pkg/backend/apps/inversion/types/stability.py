# Standard library imports
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

# Columns of stability report tables
STABILITY_COLUMNS = ["perturbation", "input_distance", "output_distance", "bound", "satisfied"]

# Relative slack of the bound check
BOUND_SLACK = 1e-6


# Metrics a stability report can be measured in
class StabilityMetric(StrEnum):
    """Metric of a stability report."""

    W2 = "w2"
    F_DIVERGENCE = "f_divergence"
    EUCLIDEAN = "euclidean"


# Outcome of one stability check
@dataclass(frozen=True)
class StabilityReport:
    """Distance between reconstructions against the bound implied by the data.

    Attributes:
        input_perturbation (float): Distance between the two data measures.
        output_distance (float): Distance between the two reconstructions.
        bound (float): Upper bound on ``output_distance``.
        metric (StabilityMetric): Metric of both distances.
        level (float | None): Perturbation level in a sweep.
        satisfied (bool): ``output_distance <= bound * (1 + 1e-6)``.
    """

    input_perturbation: float
    output_distance: float
    bound: float
    metric: StabilityMetric
    level: float | None = None
    satisfied: bool = field(init=False)

    # Derive the verdict
    def __post_init__(self) -> None:
        object.__setattr__(self, "satisfied", bool(self.output_distance <= self.bound * (1.0 + BOUND_SLACK)))

    @property
    def ratio(self) -> float:
        """Amplification ``output_distance / input_perturbation``, nan for a zero input."""
        if self.input_perturbation == 0:
            return float("nan")
        return self.output_distance / self.input_perturbation

    # Row for report tables
    def as_row(self) -> dict[str, Any]:
        """Return the CSV row of the report.

        Returns:
            dict[str, Any]: Columns ``perturbation`` to ``satisfied``.
        """

        return {
            "perturbation": self.level if self.level is not None else self.input_perturbation,
            "input_distance": self.input_perturbation,
            "output_distance": self.output_distance,
            "bound": self.bound,
            "satisfied": self.satisfied,
        }
