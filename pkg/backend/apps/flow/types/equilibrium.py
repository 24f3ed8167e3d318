# Standard library imports
from dataclasses import dataclass
from enum import StrEnum

# A label wins when it is this much closer than the other
MARGIN_FACTOR = 0.5


# Steady states a flow can reach on Col(A)
class EquilibriumLabel(StrEnum):
    """Which law on ``Col(A)`` a flow settled at."""

    CONDITIONAL = "conditional"
    MARGINAL = "marginal"
    NEITHER = "neither"


# Outcome of the equilibrium classifier
@dataclass(frozen=True)
class EquilibriumClassification:
    """Distances of a final snapshot to the two candidate equilibria.

    Attributes:
        label (EquilibriumLabel): The nearer label, or neither without a clear margin.
        conditional_distance (float): W2 to the restricted and renormalized target.
        marginal_distance (float): W2 to the projected target.
    """

    label: EquilibriumLabel
    conditional_distance: float
    marginal_distance: float

    @classmethod
    def from_distances(cls, conditional_distance: float, marginal_distance: float) -> "EquilibriumClassification":
        """Label the nearer candidate when it wins by the margin factor.

        Args:
            conditional_distance (float): W2 to the conditional.
            marginal_distance (float): W2 to the marginal.

        Returns:
            EquilibriumClassification: The classification.
        """

        if conditional_distance < MARGIN_FACTOR * marginal_distance:
            label = EquilibriumLabel.CONDITIONAL
        elif marginal_distance < MARGIN_FACTOR * conditional_distance:
            label = EquilibriumLabel.MARGINAL
        else:
            label = EquilibriumLabel.NEITHER
        return cls(label, conditional_distance, marginal_distance)
