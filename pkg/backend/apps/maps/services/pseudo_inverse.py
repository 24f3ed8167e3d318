# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.common.exceptions import RankDeficientError
from apps.maps.types import LinearForwardMap


# Moore-Penrose inverse from the cached SVD
def pseudo_inverse(forward_map: LinearForwardMap) -> NDArray[np.float64]:
    """Return the Moore-Penrose inverse ``V diag(1/sigma) U^T``.

    Args:
        forward_map (LinearForwardMap): Full-rank linear map.

    Returns:
        NDArray[np.float64]: The pseudoinverse, shape (m, n).

    Raises:
        RankDeficientError: If a singular value is numerically zero.
    """

    # Full rank is required
    if not forward_map.is_full_rank:
        raise RankDeficientError(rank=forward_map.rank, sigma=forward_map.sigma.tolist())

    # Scale the right singular vectors and close with U^T
    return (forward_map.right / forward_map.sigma) @ forward_map.left.T


# Orthogonal projectors onto Row(A) and Null(A)
def projectors(forward_map: LinearForwardMap) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Return the projectors ``(A^+ A, I - A^+ A)`` in parameter space.

    Args:
        forward_map (LinearForwardMap): Full-rank linear map.

    Returns:
        tuple[NDArray[np.float64], NDArray[np.float64]]: Row space and null space projectors.
    """

    # Row space projector through the pseudoinverse
    row_space = pseudo_inverse(forward_map) @ forward_map.matrix

    # Symmetrize away rounding
    row_space = 0.5 * (row_space + row_space.T)

    # Complement
    return row_space, np.eye(forward_map.n_inputs) - row_space
