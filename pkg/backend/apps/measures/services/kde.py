# Standard library imports
import math

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import logsumexp, softmax

# Local application imports
from apps.common.exceptions import BandwidthRequiredError, DimensionMismatchError, InvalidMeasureError
from apps.measures.types import ParticleMeasure

# Queries evaluated per block, bounds the (queries, atoms) work array
QUERY_BLOCK = 2048


# Per-axis Silverman bandwidth
def silverman_bandwidth(measure: ParticleMeasure) -> NDArray[np.float64]:
    """Silverman's rule of thumb, one bandwidth per axis.

    ``h_k = (4 / (d + 2))^{1/(d+4)} * n_eff^{-1/(d+4)} * std_k`` with the effective
    sample size ``n_eff = 1 / sum(w^2)``.

    Args:
        measure (ParticleMeasure): Weighted samples.

    Returns:
        NDArray[np.float64]: Bandwidths, shape (d,).

    Raises:
        BandwidthRequiredError: If some axis has zero spread.
    """

    # Effective sample size of the weights
    effective = 1.0 / float(measure.weights @ measure.weights)

    # Weighted standard deviation per axis
    mean = measure.weights @ measure.points
    std = np.sqrt(measure.weights @ (measure.points - mean) ** 2)
    if np.any(std <= 0):
        raise BandwidthRequiredError("Silverman's rule needs spread along every axis.")

    # Rule of thumb
    dim = measure.dim
    factor = (4.0 / (dim + 2.0)) ** (1.0 / (dim + 4.0)) * effective ** (-1.0 / (dim + 4.0))
    return factor * std


# Validate a bandwidth argument
def _bandwidth_vector(bandwidth: float | ArrayLike, dim: int) -> NDArray[np.float64]:
    # Broadcast a scalar to every axis
    vector = np.broadcast_to(np.asarray(bandwidth, dtype=float), (dim,)).copy()

    # Bandwidths must be positive
    if not np.all(np.isfinite(vector)) or np.any(vector <= 0):
        raise InvalidMeasureError("Kernel bandwidth must be positive.")
    return vector


# Coerce queries to an (N, d) array
def _queries(query: ArrayLike, dim: int) -> tuple[NDArray[np.float64], bool]:
    array = np.asarray(query, dtype=float)

    # A scalar or a single point
    single = array.ndim == 0 or (array.ndim == 1 and (dim > 1 or array.shape[0] == 1))
    if array.ndim == 0:
        array = array.reshape(1, 1)
    elif array.ndim == 1:
        array = array.reshape(1, -1) if single else array.reshape(-1, 1)

    # Trailing axis is the dimension
    if array.shape[1] != dim:
        raise DimensionMismatchError(expected=dim, got=array.shape[1])
    return array, single


# Log kernel matrix for one block of queries
def _log_kernel(block: NDArray[np.float64], measure: ParticleMeasure, h: NDArray[np.float64]) -> NDArray[np.float64]:
    scaled = (block[:, None, :] - measure.points[None, :, :]) / h
    norm = float(np.sum(np.log(h))) + 0.5 * measure.dim * math.log(2.0 * math.pi)
    return -0.5 * np.sum(scaled**2, axis=2) - norm


# Log of the kernel density estimate
def kde_log_density(
    measure: ParticleMeasure,
    query: ArrayLike,
    bandwidth: float | ArrayLike,
) -> NDArray[np.float64] | float:
    """Log of the Gaussian kernel density estimate.

    Args:
        measure (ParticleMeasure): Weighted atoms.
        query (ArrayLike): One point or an (N, d) array of points.
        bandwidth (float | ArrayLike): Scalar or per-axis bandwidth.

    Returns:
        NDArray[np.float64] | float: Log density values.
    """

    h = _bandwidth_vector(bandwidth, measure.dim)
    points, single = _queries(query, measure.dim)

    # Atoms with zero weight drop out of the log-sum-exp
    with np.errstate(divide="ignore"):
        log_weights = np.log(measure.weights)

    # Evaluate block by block
    values = np.concatenate(
        [
            logsumexp(_log_kernel(points[start : start + QUERY_BLOCK], measure, h) + log_weights, axis=1)
            for start in range(0, points.shape[0], QUERY_BLOCK)
        ],
    )
    return float(values[0]) if single else values


# Kernel density estimate
def kde_density(
    measure: ParticleMeasure,
    query: ArrayLike,
    bandwidth: float | ArrayLike,
) -> NDArray[np.float64] | float:
    """Gaussian kernel density estimate ``sum_i w_i phi_h(query - x_i)``.

    Args:
        measure (ParticleMeasure): Weighted atoms.
        query (ArrayLike): One point or an (N, d) array of points.
        bandwidth (float | ArrayLike): Scalar or per-axis bandwidth.

    Returns:
        NDArray[np.float64] | float: Density values.
    """

    return np.exp(kde_log_density(measure, query, bandwidth))


# Gradient of the log kernel density estimate
def kde_score(measure: ParticleMeasure, query: ArrayLike, bandwidth: float | ArrayLike) -> NDArray[np.float64]:
    """Gradient of the log kernel density estimate.

    Args:
        measure (ParticleMeasure): Weighted atoms.
        query (ArrayLike): One point or an (N, d) array of points.
        bandwidth (float | ArrayLike): Scalar or per-axis bandwidth.

    Returns:
        NDArray[np.float64]: Score vectors, shape (d,) or (N, d).
    """

    h = _bandwidth_vector(bandwidth, measure.dim)
    points, single = _queries(query, measure.dim)

    # Atoms with zero weight drop out
    with np.errstate(divide="ignore"):
        log_weights = np.log(measure.weights)

    # Responsibility-weighted kernel gradients
    blocks = []
    for start in range(0, points.shape[0], QUERY_BLOCK):
        block = points[start : start + QUERY_BLOCK]
        responsibilities = softmax(_log_kernel(block, measure, h) + log_weights, axis=1)
        blocks.append((responsibilities @ measure.points - block) / h**2)

    # Return the scores
    scores = np.concatenate(blocks, axis=0)
    return scores[0] if single else scores
