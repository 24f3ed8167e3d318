# Third-party imports
import numpy as np

# Local application imports
from apps.maps.types import LinearForwardMap


# Stacked map [A; alpha I]
def augmented_map(forward_map: LinearForwardMap, alpha: float) -> LinearForwardMap:
    """Return the map ``u -> (A u, alpha u)`` of size (n + m) x m.

    Its squared singular values are those of A shifted by ``alpha**2``, which
    turns the W2 Tikhonov objective into a plain W2 misfit.

    Args:
        forward_map (LinearForwardMap): The map A.
        alpha (float): Nonnegative regularization strength.

    Returns:
        LinearForwardMap: The stacked map.

    Raises:
        ValueError: If alpha is negative.
    """

    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return LinearForwardMap(np.vstack([forward_map.matrix, alpha * np.eye(forward_map.n_inputs)]))
