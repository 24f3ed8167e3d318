# Third-party imports
import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

# Local application imports
from apps.common.exceptions import DimensionMismatchError
from apps.measures.types import GaussianMeasure


# Square root of a symmetric positive semidefinite matrix
def _psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    values, vectors = linalg.eigh(0.5 * (matrix + matrix.T))
    return (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.T


# Bures formula on possibly singular covariances
def bures_distance(mean1: ArrayLike, cov1: ArrayLike, mean2: ArrayLike, cov2: ArrayLike) -> float:
    """Return the W2 distance between two Gaussians given by their moments.

    Covariances may be singular, which covers Gaussians supported on subspaces.

    Args:
        mean1 (ArrayLike): First mean.
        cov1 (ArrayLike): First covariance, positive semidefinite.
        mean2 (ArrayLike): Second mean.
        cov2 (ArrayLike): Second covariance, positive semidefinite.

    Returns:
        float: The distance.
    """

    # Moments as arrays
    m1, m2 = np.atleast_1d(np.asarray(mean1, dtype=float)), np.atleast_1d(np.asarray(mean2, dtype=float))
    s1, s2 = np.atleast_2d(np.asarray(cov1, dtype=float)), np.atleast_2d(np.asarray(cov2, dtype=float))
    if m1.shape != m2.shape or s1.shape != s2.shape or s1.shape[0] != m1.shape[0]:
        raise DimensionMismatchError(expected=m1.shape[0], got=m2.shape[0])

    # Trace of the geometric mean term
    root = _psd_sqrt(s2)
    cross = np.sum(np.sqrt(np.clip(linalg.eigvalsh(root @ s1 @ root), 0.0, None)))

    # Squared distance, clipped at zero against rounding
    squared = float(np.sum((m1 - m2) ** 2) + np.trace(s1) + np.trace(s2) - 2.0 * cross)
    return float(np.sqrt(max(squared, 0.0)))


# Closed form W2 between Gaussians
def wasserstein_gaussian(g1: GaussianMeasure, g2: GaussianMeasure) -> float:
    """Return the W2 distance between two Gaussians.

    Args:
        g1 (GaussianMeasure): First Gaussian.
        g2 (GaussianMeasure): Second Gaussian.

    Returns:
        float: The distance.
    """

    # Exact scalar form in one dimension
    if g1.dim == 1 and g2.dim == 1:
        mean_gap = float(g1.mean[0] - g2.mean[0])
        sd_gap = float(np.sqrt(g1.cov[0, 0]) - np.sqrt(g2.cov[0, 0]))
        return float(np.hypot(mean_gap, sd_gap))
    return bures_distance(g1.mean, g1.cov, g2.mean, g2.cov)


# Closed form KL between Gaussians
def kl_gaussian(g1: GaussianMeasure, g2: GaussianMeasure) -> float:
    """Return ``KL(g1 || g2)``.

    Args:
        g1 (GaussianMeasure): First Gaussian.
        g2 (GaussianMeasure): Reference Gaussian.

    Returns:
        float: The divergence.
    """

    if g1.dim != g2.dim:
        raise DimensionMismatchError(expected=g1.dim, got=g2.dim)

    # Trace, Mahalanobis and log-determinant terms
    gap = g2.mean - g1.mean
    trace = float(np.trace(linalg.cho_solve((g2.cholesky, True), g1.cov)))
    mahalanobis = float(gap @ linalg.cho_solve((g2.cholesky, True), gap))
    value = 0.5 * (trace + mahalanobis - g1.dim + g2.log_det_cov - g1.log_det_cov)
    return max(value, 0.0)
