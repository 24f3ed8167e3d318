# Standard library imports
from dataclasses import dataclass

# Local application imports
from apps.measures.types import GaussianMeasure, GridMeasure


# Terms on the right of the entropy error identity
@dataclass(frozen=True)
class EntropyErrorTerms:
    """Divergences entering the error identity of the entropy-entropy solver.

    Attributes:
        kl_data_term (float): ``KL(truth || G^{-1} # data)``, equal to the data-space KL.
        kl_prior_term (float): ``KL(truth || prior)``, equal to ``KL(G # truth || G # prior)``.
        log_c (float): Log of the normalization constant.
    """

    kl_data_term: float
    kl_prior_term: float
    log_c: float


# Closed form minimizer of the KL-KL objective
@dataclass(frozen=True, eq=False)
class EntropyRegularizedSolution:
    """Solution ``C [(G^{-1} # data) prior^alpha]^(1 / (1 + alpha))``.

    Attributes:
        solution (GridMeasure | GaussianMeasure): The regularized reconstruction.
        alpha (float): Regularization weight.
        normalization_c (float): The constant ``C``, one at ``alpha = 0``.
        error_terms (EntropyErrorTerms | None): Terms against a ground truth, when one was given.
    """

    solution: GridMeasure | GaussianMeasure
    alpha: float
    normalization_c: float
    error_terms: EntropyErrorTerms | None = None


# Both sides of the error identity
@dataclass(frozen=True)
class ErrorIdentity:
    """Left and right side of an identity that holds up to quadrature error.

    Attributes:
        lhs (float): Left side.
        rhs (float): Right side.
        residual (float): ``|lhs - rhs|``.
    """

    lhs: float
    rhs: float
    residual: float
