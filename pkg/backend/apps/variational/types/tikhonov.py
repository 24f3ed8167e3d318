# Standard library imports
from dataclasses import dataclass
from typing import Any

# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.measures.types import GaussianMeasure, ParticleMeasure


# Reconstruction error bound of the Tikhonov solver
@dataclass(frozen=True)
class TikhonovBound:
    """Upper bounds on ``W2(T_alpha # noisy, A^+ # truth)``.

    Attributes:
        noise_term (float): ``sqrt(1 / (2 alpha)) W``.
        reg_term (float): ``sqrt(alpha / (2 sigma_min^2)) sqrt(E)``.
        total (float): ``noise_term + reg_term``.
        mid_total (float): Noise term plus ``sqrt(alpha^2 / (sigma_min (sigma_min^2 + alpha^2))) sqrt(E)``.
        operator_total (float): ``|T_alpha| W + |T_alpha - A^+| sqrt(E)`` in the spectral norm.
    """

    noise_term: float
    reg_term: float
    total: float
    mid_total: float
    operator_total: float

    # Plain record for reports
    def as_dict(self) -> dict[str, Any]:
        """Return the bound as a dictionary.

        Returns:
            dict[str, Any]: All five fields.
        """

        return {
            "noise_term": self.noise_term,
            "reg_term": self.reg_term,
            "total": self.total,
            "mid_total": self.mid_total,
            "operator_total": self.operator_total,
        }


# Minimizer of the W2-W2 objective
@dataclass(frozen=True, eq=False)
class TikhonovW2Solution:
    """Solution ``T_alpha # data`` with ``T_alpha = (A^T A + alpha^2 I)^{-1} A^T``.

    Attributes:
        solution (ParticleMeasure | GaussianMeasure): The reconstruction.
        alpha (float): Regularization weight.
        operator (NDArray[np.float64]): ``T_alpha``, shape (n_inputs, n_outputs).
        bound (TikhonovBound | None): Error bound, when a noise level was given.
    """

    solution: ParticleMeasure | GaussianMeasure
    alpha: float
    operator: NDArray[np.float64]
    bound: TikhonovBound | None = None
