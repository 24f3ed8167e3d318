# Standard library imports
from collections.abc import Callable

# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.maps.services.newton import with_newton_inverse
from apps.maps.types import SmoothForwardMap


# Scalar cubic G(u) = u^3 + u
def cubic_map() -> SmoothForwardMap:
    """Return the 1D diffeomorphism ``G(u) = u^3 + u`` with a Newton inverse.

    Returns:
        SmoothForwardMap: The cubic map.
    """

    # Map and exact Jacobian
    def evaluate(u: NDArray[np.float64]) -> NDArray[np.float64]:
        return u**3 + u

    def jacobian(u: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.array([[3.0 * u[0] ** 2 + 1.0]])

    return with_newton_inverse(SmoothForwardMap(evaluate, input_dim=1, output_dim=1, jacobian=jacobian))


# Coordinatewise sinh G(u) = sinh(u)
def sinh_map(dim: int = 1) -> SmoothForwardMap:
    """Return the coordinatewise diffeomorphism ``G(u) = sinh(u)``.

    Args:
        dim (int): Dimension of the map.

    Returns:
        SmoothForwardMap: The sinh map with its exact inverse.
    """

    return SmoothForwardMap(
        np.sinh,
        input_dim=dim,
        output_dim=dim,
        jacobian=lambda u: np.diag(np.cosh(u)),
        inverse=np.arcsinh,
    )


# Named smooth maps usable from experiment configs
SMOOTH_MAPS: dict[str, Callable[..., SmoothForwardMap]] = {
    "cubic": cubic_map,
    "sinh": sinh_map,
}
