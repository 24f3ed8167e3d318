# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import linalg

# Local application imports
from apps.common.exceptions import DegenerateRestrictionError, DimensionMismatchError, NotOrthonormalError
from apps.measures.types import GaussianMeasure

# Tolerance on basis orthonormality
ORTHONORMAL_TOLERANCE = 1e-10


# Check a basis
def orthonormal_basis(basis: ArrayLike, dim: int) -> NDArray[np.float64]:
    """Validate a basis with orthonormal columns.

    Args:
        basis (ArrayLike): Matrix (n, k); a vector is one column.
        dim (int): Expected ambient dimension n.

    Returns:
        NDArray[np.float64]: The basis as an (n, k) array.

    Raises:
        DimensionMismatchError: If the row count is not ``dim``.
        NotOrthonormalError: If ``basis^T basis`` differs from the identity.
    """

    # Vectors are single columns
    matrix = np.asarray(basis, dtype=float)
    if matrix.ndim == 1:
        matrix = matrix[:, None]

    # Row count must match the ambient dimension
    if matrix.shape[0] != dim:
        raise DimensionMismatchError(expected=dim, got=matrix.shape[0])

    # Columns must be orthonormal
    gram = matrix.T @ matrix
    if np.max(np.abs(gram - np.eye(matrix.shape[1]))) > ORTHONORMAL_TOLERANCE:
        raise NotOrthonormalError()

    return matrix


# Conditional (restricted and renormalized) Gaussian
def gaussian_conditional_on_subspace(gaussian: GaussianMeasure, basis: ArrayLike) -> GaussianMeasure:
    """Restrict a Gaussian density to the span of ``basis`` and renormalize.

    The result is the law on z of the density proportional to
    ``z -> gaussian.density(basis @ z)``. Completing the square in the quadratic
    form gives precision ``B^T P B`` and mean ``(B^T P B)^{-1} B^T P m`` with P the
    precision of the input.

    Args:
        gaussian (GaussianMeasure): Gaussian on R^n.
        basis (ArrayLike): Orthonormal columns (n, k).

    Returns:
        GaussianMeasure: Gaussian on R^k in subspace coordinates.

    Raises:
        DegenerateRestrictionError: If the restricted form is not positive definite.
    """

    # Validate the basis
    matrix = orthonormal_basis(basis, gaussian.dim)

    # Restricted precision and linear term
    restricted = matrix.T @ gaussian.precision @ matrix
    restricted = 0.5 * (restricted + restricted.T)
    linear = matrix.T @ gaussian.precision @ gaussian.mean

    # Restricted form must be positive definite
    try:
        factor = linalg.cho_factor(restricted, lower=True)
    except linalg.LinAlgError:
        raise DegenerateRestrictionError() from None

    # Complete the square
    mean = linalg.cho_solve(factor, linear)
    cov = linalg.cho_solve(factor, np.eye(matrix.shape[1]))
    return GaussianMeasure(mean, 0.5 * (cov + cov.T))


# Marginal (projected) Gaussian
def gaussian_marginal_on_subspace(gaussian: GaussianMeasure, basis: ArrayLike) -> GaussianMeasure:
    """Push a Gaussian forward under ``z = basis^T y``.

    Args:
        gaussian (GaussianMeasure): Gaussian on R^n.
        basis (ArrayLike): Orthonormal columns (n, k).

    Returns:
        GaussianMeasure: Gaussian on R^k in subspace coordinates.
    """

    # Validate the basis
    matrix = orthonormal_basis(basis, gaussian.dim)

    # Linear image of the Gaussian
    cov = matrix.T @ gaussian.cov @ matrix
    return GaussianMeasure(matrix.T @ gaussian.mean, 0.5 * (cov + cov.T))
