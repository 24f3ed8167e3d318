# Standard library imports
import logging

# Third-party imports
import numpy as np
import ot
from numpy.typing import NDArray

# Local application imports
from apps.common.exceptions import DimensionMismatchError, SizeCapError
from apps.common.utils import get_setting
from apps.divergences.types import Coupling
from apps.measures.types import ParticleMeasure

# Get the logger
logger = logging.getLogger(__name__)


# Ground cost |x - y|^p
def cost_matrix(x: NDArray[np.float64], y: NDArray[np.float64], p: float) -> NDArray[np.float64]:
    """Return the matrix of ``|x_i - y_j|^p``.

    Args:
        x (NDArray[np.float64]): First atoms, shape (n1, d).
        y (NDArray[np.float64]): Second atoms, shape (n2, d).
        p (float): Order.

    Returns:
        NDArray[np.float64]: Costs, shape (n1, n2).
    """

    # Squared distances directly for p = 2
    squared = ot.dist(x, y, metric="sqeuclidean")
    if p == 2:  # noqa: PLR2004
        return squared
    return np.sqrt(np.maximum(squared, 0.0)) ** p


# Exact discrete optimal transport
def wasserstein_exact(mu: ParticleMeasure, nu: ParticleMeasure, p: float = 2.0) -> tuple[float, Coupling]:
    """Solve the discrete transport problem with the network simplex.

    Args:
        mu (ParticleMeasure): First cloud.
        nu (ParticleMeasure): Second cloud.
        p (float): Order, at least one.

    Returns:
        tuple[float, Coupling]: ``W_p`` and the optimal plan.

    Raises:
        DimensionMismatchError: If the clouds live in different dimensions.
        SizeCapError: If ``n1 * n2`` exceeds ``STOCHINVERSE_OT_SIZE_CAP``.
    """

    if p < 1:
        raise ValueError("p must be at least one")

    # Shape checks
    if mu.dim != nu.dim:
        raise DimensionMismatchError(expected=mu.dim, got=nu.dim)
    cap = int(get_setting("STOCHINVERSE_OT_SIZE_CAP", 1_000_000))
    if mu.size * nu.size > cap:
        raise SizeCapError(entries=mu.size * nu.size, cap=cap)

    # Network simplex on the cost matrix
    costs = cost_matrix(mu.points, nu.points, p)
    plan = ot.emd(np.array(mu.weights, dtype=float), np.array(nu.weights, dtype=float), costs, numItermax=1_000_000)
    cost = max(float(np.sum(plan * costs)), 0.0)

    # Return the distance and the plan
    logger.debug("Exact transport between %d and %d atoms, cost %.6g", mu.size, nu.size, cost)
    return cost ** (1.0 / p), Coupling(plan, cost)
