# Third-party imports
import numpy as np
from numpy.typing import ArrayLike

# Local application imports
from apps.common.exceptions import DegenerateImageError, DimensionMismatchError
from apps.maps.types import ForwardMap
from apps.measures.types import GaussianMeasure, ParticleMeasure

# Smallest eigenvalue accepted in a pushforward covariance
DEGENERATE_EIGENVALUE = 1e-12


# Pushforward of a particle cloud
def pushforward(forward_map: ForwardMap, measure: ParticleMeasure) -> ParticleMeasure:
    """Map every atom through the forward map, keeping the weights.

    Args:
        forward_map (ForwardMap): Linear or smooth map.
        measure (ParticleMeasure): Cloud in parameter space.

    Returns:
        ParticleMeasure: The image cloud.

    Raises:
        DimensionMismatchError: If the cloud lives in another dimension.
    """

    # Domain check
    if measure.dim != forward_map.n_inputs:
        raise DimensionMismatchError(expected=forward_map.n_inputs, got=measure.dim)

    # Map the atoms
    return ParticleMeasure(forward_map(measure.points), measure.weights)


# Affine image of a Gaussian
def pushforward_gaussian(matrix: ArrayLike, shift: ArrayLike | None, gaussian: GaussianMeasure) -> GaussianMeasure:
    """Return the image of a Gaussian under ``x -> M x + b``.

    Args:
        matrix (ArrayLike): The matrix M, shape (k, d).
        shift (ArrayLike | None): The shift b, shape (k,), zero when None.
        gaussian (GaussianMeasure): Source Gaussian in dimension d.

    Returns:
        GaussianMeasure: ``N(M m + b, M S M^T)``.

    Raises:
        DimensionMismatchError: If the matrix and the Gaussian disagree.
        DegenerateImageError: If the image covariance is singular.
    """

    # Shape checks
    linear = np.atleast_2d(np.asarray(matrix, dtype=float))
    if linear.shape[1] != gaussian.dim:
        raise DimensionMismatchError(expected=gaussian.dim, got=linear.shape[1])
    offset = np.zeros(linear.shape[0]) if shift is None else np.asarray(shift, dtype=float).reshape(-1)
    if offset.shape[0] != linear.shape[0]:
        raise DimensionMismatchError(expected=linear.shape[0], got=offset.shape[0])

    # Image moments
    mean = linear @ gaussian.mean + offset
    cov = linear @ gaussian.cov @ linear.T
    cov = 0.5 * (cov + cov.T)

    # Reject images that leave the absolutely continuous measures
    smallest = float(np.linalg.eigvalsh(cov)[0])
    if smallest < DEGENERATE_EIGENVALUE:
        raise DegenerateImageError(smallest_eigenvalue=smallest)

    return GaussianMeasure(mean, cov)
