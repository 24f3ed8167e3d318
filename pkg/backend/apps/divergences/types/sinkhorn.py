# Standard library imports
from dataclasses import dataclass

# Local application imports
from apps.divergences.types.coupling import Coupling


# Outcome of an entropic transport solve
@dataclass(frozen=True)
class SinkhornResult:
    """Entropic transport estimate with its convergence record.

    Attributes:
        value (float): ``cost ** (1/p)`` of the returned plan.
        coupling (Coupling): Best plan found.
        iterations (int): Iterations performed.
        converged (bool): Whether the marginal violation reached the tolerance.
        marginal_error (float): L1 violation of the first marginal.
    """

    value: float
    coupling: Coupling
    iterations: int
    converged: bool
    marginal_error: float
