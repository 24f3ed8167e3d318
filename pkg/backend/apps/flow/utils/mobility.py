# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.common.exceptions import DimensionMismatchError
from apps.common.utils import get_setting
from apps.maps.services import mobility_matrix
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.types import GridMeasure


# Mobility of the data-space flow at every cell centre
def grid_mobility(forward_map: ForwardMap, grid: GridMeasure, *, reduced: bool = False) -> NDArray[np.float64]:
    """Return the mobility field ``B`` on the cells of ``grid``.

    Grids of the data dimension carry ``B = A A^T`` (or ``J J^T`` along the
    pre-image for smooth maps). Grids in ``Col(A)`` coordinates ``z = U^T y``
    carry the diagonal ``Sigma^2`` of the nonzero singular values.

    Args:
        forward_map (ForwardMap): The forward map.
        grid (GridMeasure): Grid whose cells are evaluated.
        reduced (bool): Whether the grid is in ``Col(A)`` coordinates. Implied when
            the grid dimension is the rank of a map with more outputs.

    Returns:
        NDArray[np.float64]: Field of shape ``grid.shape + (d, d)``.

    Raises:
        DimensionMismatchError: If the grid fits neither coordinate system.
        MissingInverseError: If a smooth map has no inverse.
    """

    dim = grid.dim

    # Smooth maps, mobility along the pre-image
    if not isinstance(forward_map, LinearForwardMap):
        if dim != forward_map.n_outputs:
            raise DimensionMismatchError(expected=forward_map.n_outputs, got=dim)
        field = np.stack([mobility_matrix(forward_map, point) for point in grid.points])
        return field.reshape(*grid.shape, dim, dim)

    # Constant mobility of a linear map
    if dim == forward_map.n_outputs and not reduced:
        mobility = forward_map.matrix @ forward_map.matrix.T
        mobility = 0.5 * (mobility + mobility.T)
    elif dim == forward_map.rank:
        mobility = np.diag(forward_map.sigma[:dim] ** 2)
    else:
        raise DimensionMismatchError(expected=forward_map.rank, got=dim)
    return np.broadcast_to(mobility, (*grid.shape, dim, dim)).copy()


# Largest stable explicit step
def cfl_limit(mobility: NDArray[np.float64], widths: NDArray[np.float64]) -> float:
    """Return ``factor * h^2 / max |B|_2`` with h the smallest cell width.

    Args:
        mobility (NDArray[np.float64]): Mobility field with trailing (d, d) axes.
        widths (NDArray[np.float64]): Cell widths per axis.

    Returns:
        float: The step limit, infinite for a vanishing mobility.
    """

    factor = float(get_setting("STOCHINVERSE_CFL_FACTOR", 0.25))
    norm = float(np.max(np.linalg.eigvalsh(mobility)[..., -1]))
    if norm <= 0:
        return float("inf")
    return factor * float(np.min(widths)) ** 2 / norm
