# Standard library imports
import math
from dataclasses import dataclass

# Local application imports
from apps.common.exceptions import InvalidMeasureError


# Log-concavity constant of a density
@dataclass(frozen=True)
class LogConcavityCertificate:
    """Certificate that ``-Hess log rho >= constant * I``.

    Attributes:
        constant (float): The log-concavity constant, strictly positive.
    """

    constant: float

    # Validate the constant
    def __post_init__(self) -> None:
        if not math.isfinite(self.constant) or self.constant <= 0:
            raise InvalidMeasureError("Log-concavity constant must be positive and finite.")
