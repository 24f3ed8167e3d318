# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray

# Local application imports
from apps.common.exceptions import DimensionMismatchError
from apps.maps.types import ForwardMap, LinearForwardMap


# Mobility B(y) = J J^T at u = G^{-1}(y)
def mobility_matrix(forward_map: ForwardMap, y: ArrayLike) -> NDArray[np.float64]:
    """Return the mobility ``B(y)`` of the data-space flow.

    Linear maps have the constant mobility ``A A^T``. Smooth maps are inverted
    at ``y`` and the Jacobian outer product is taken there.

    Args:
        forward_map (ForwardMap): The forward map.
        y (ArrayLike): Data point, shape (n,).

    Returns:
        NDArray[np.float64]: Symmetric positive semidefinite matrix, shape (n, n).

    Raises:
        MissingInverseError: If a smooth map has no inverse.
    """

    # Data point
    point = np.asarray(y, dtype=float).reshape(-1)
    if point.shape[0] != forward_map.n_outputs:
        raise DimensionMismatchError(expected=forward_map.n_outputs, got=point.shape[0])

    # Constant mobility
    if isinstance(forward_map, LinearForwardMap):
        jacobian = forward_map.matrix
    else:
        jacobian = forward_map.jacobian_at(forward_map.invert(point))

    # Outer product, symmetrized
    mobility = jacobian @ jacobian.T
    return 0.5 * (mobility + mobility.T)


# Smallest mobility eigenvalue over probe points
def mobility_lower_bound(forward_map: ForwardMap, probe_points: ArrayLike) -> float:
    """Return ``min_y lambda_min(B(y))`` over the probe points.

    Args:
        forward_map (ForwardMap): The forward map.
        probe_points (ArrayLike): Data points, shape (N, n).

    Returns:
        float: The smallest eigenvalue found.
    """

    probes = np.asarray(probe_points, dtype=float).reshape(-1, forward_map.n_outputs)
    return float(min(np.linalg.eigvalsh(mobility_matrix(forward_map, y))[0] for y in probes))
