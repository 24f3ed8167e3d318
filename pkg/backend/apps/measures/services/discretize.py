# Standard library imports
from collections.abc import Callable, Sequence

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray

# Local application imports
from apps.measures.services.normalize import normalize
from apps.measures.types import GaussianMeasure, GridMeasure


# Grid measure from a log density
def grid_from_log_density(
    log_density: Callable[[NDArray[np.float64]], NDArray[np.float64]],
    lower: ArrayLike,
    upper: ArrayLike,
    shape: Sequence[int],
) -> GridMeasure:
    """Sample a log density at cell centres and normalize on the grid.

    Args:
        log_density (Callable): Maps (N, d) points to (N,) log densities.
        lower (ArrayLike): Lower corner of the box.
        upper (ArrayLike): Upper corner of the box.
        shape (Sequence[int]): Cells per axis.

    Returns:
        GridMeasure: The normalized grid measure.
    """

    # Empty grid, used for its cell centres
    template = GridMeasure(lower, upper, tuple(shape), np.ones(tuple(shape)), require_unit_mass=False)

    # Shift by the maximum before exponentiating
    values = np.asarray(log_density(template.points), dtype=float)
    values = np.exp(values - np.max(values))

    # Normalize on the grid
    return normalize(template.with_density(values.reshape(template.shape), require_unit_mass=False))


# Grid measure from a Gaussian
def discretize_gaussian(
    gaussian: GaussianMeasure,
    lower: ArrayLike,
    upper: ArrayLike,
    shape: Sequence[int],
) -> GridMeasure:
    """Discretize a Gaussian on a grid by midpoint sampling.

    Args:
        gaussian (GaussianMeasure): The Gaussian.
        lower (ArrayLike): Lower corner of the box.
        upper (ArrayLike): Upper corner of the box.
        shape (Sequence[int]): Cells per axis.

    Returns:
        GridMeasure: The Gaussian restricted to the box and renormalized.
    """

    return grid_from_log_density(gaussian.log_density, lower, upper, shape)
