# Standard library imports
from dataclasses import dataclass

# Third-party imports
import numpy as np
from numpy.typing import NDArray


# Transport plan between two discrete measures
@dataclass(frozen=True, eq=False)
class Coupling:
    """Joint masses of a transport plan and its transport cost.

    Attributes:
        plan (NDArray[np.float64]): Nonnegative masses, shape (n1, n2).
        cost (float): ``sum(plan * C)`` for the cost matrix C used.
    """

    plan: NDArray[np.float64]
    cost: float

    # Freeze the plan
    def __post_init__(self) -> None:
        plan = np.array(self.plan, dtype=float)
        plan.setflags(write=False)
        object.__setattr__(self, "plan", plan)
        object.__setattr__(self, "cost", float(self.cost))

    @property
    def row_sums(self) -> NDArray[np.float64]:
        """First marginal."""
        return self.plan.sum(axis=1)

    @property
    def column_sums(self) -> NDArray[np.float64]:
        """Second marginal."""
        return self.plan.sum(axis=0)

    # Marginal check
    def has_marginals(
        self,
        mu_weights: NDArray[np.float64],
        nu_weights: NDArray[np.float64],
        tol: float = 1e-10,
    ) -> bool:
        """Whether the plan couples the two weight vectors within ``tol``.

        Args:
            mu_weights (NDArray[np.float64]): Weights of the first measure.
            nu_weights (NDArray[np.float64]): Weights of the second measure.
            tol (float): Absolute tolerance per entry.

        Returns:
            bool: True when both marginals match.
        """

        return bool(
            np.all(self.plan >= 0)
            and np.allclose(self.row_sums, mu_weights, rtol=0.0, atol=tol)
            and np.allclose(self.column_sums, nu_weights, rtol=0.0, atol=tol),
        )
