# Standard library imports
import itertools

# Third-party imports
import numpy as np
from numpy.typing import NDArray
from scipy.interpolate import RegularGridInterpolator

# Local application imports
from apps.common.exceptions import NonInvertibleMapError
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.services import normalize
from apps.measures.types import GridMeasure


# Parameter box covering the pre-image of the data box
def _preimage_box(forward_map: ForwardMap, data: GridMeasure) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    # Corners of the data box
    corners = np.array(list(itertools.product(*zip(data.lower, data.upper, strict=True))))

    # Pre-images of the corners
    if isinstance(forward_map, LinearForwardMap):
        preimages = np.linalg.solve(forward_map.matrix, corners.T).T
    else:
        preimages = forward_map.invert(corners)

    # Bounding box
    return preimages.min(axis=0), preimages.max(axis=0)


# Change of variables onto a parameter grid
def pullback_grid(forward_map: ForwardMap, data: GridMeasure, grid: GridMeasure | None = None) -> GridMeasure:
    """Return ``G^{-1}# data`` on a parameter grid by change of variables.

    The density at a parameter cell centre u is ``rho_y(G(u)) |det DG(u)|`` with
    ``rho_y`` linearly interpolated between data cell centres and zero outside
    the data box. The result is renormalized to absorb quadrature error.

    Args:
        forward_map (ForwardMap): Square invertible map.
        data (GridMeasure): Data density.
        grid (GridMeasure | None): Measure whose grid is used, otherwise the
            bounding box of the pre-image of the data box with the data shape.

    Returns:
        GridMeasure: The pulled back density.

    Raises:
        NonInvertibleMapError: If the map is not square or singular.
    """

    # Square invertible maps only
    if forward_map.n_inputs != forward_map.n_outputs or forward_map.n_outputs != data.dim:
        raise NonInvertibleMapError(inputs=forward_map.n_inputs, outputs=forward_map.n_outputs)
    if isinstance(forward_map, LinearForwardMap) and not forward_map.is_invertible:
        raise NonInvertibleMapError(rank=forward_map.rank)

    # Parameter grid
    if grid is None:
        lower, upper = _preimage_box(forward_map, data)
        shape = data.shape
    else:
        lower, upper, shape = grid.lower, grid.upper, grid.shape
    cells = int(np.prod(shape))
    target = GridMeasure(lower, upper, shape, np.full(cells, 1.0 / (cells * np.prod((upper - lower) / shape))))

    # Images of the parameter cell centres and their Jacobian determinants
    images = forward_map(target.points)
    if isinstance(forward_map, LinearForwardMap):
        determinants = np.full(cells, abs(np.linalg.det(forward_map.matrix)))
    else:
        determinants = np.abs([np.linalg.det(forward_map.jacobian_at(point)) for point in target.points])

    # Interpolate the data density, linear when every axis has two centres
    method = "linear" if min(data.shape) > 1 else "nearest"
    interpolator = RegularGridInterpolator(data.axes, data.density, method=method, bounds_error=False, fill_value=None)
    values = np.clip(interpolator(images), 0.0, None)

    # Zero outside the data box
    inside = np.all((images >= data.lower) & (images <= data.upper), axis=1)
    density = np.where(inside, values * determinants, 0.0)

    # Renormalize
    return normalize(target.with_density(density, require_unit_mass=False))
