# Standard library imports
from dataclasses import dataclass, field

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray

# Local application imports
from apps.common.exceptions import DimensionMismatchError, ShapeError

# Singular values below this fraction of the largest count as zero
RANK_TOLERANCE = 1e-12


# Linear forward map with cached SVD
@dataclass(frozen=True, eq=False)
class LinearForwardMap:
    """Linear forward map ``u -> A u`` with its thin SVD cached.

    ``A = U diag(sigma) V^T`` with ``U`` (n, k), ``sigma`` descending, ``V`` (m, k)
    and ``k = min(n, m)``. The map is full rank when every singular value
    exceeds ``RANK_TOLERANCE * sigma[0]``.

    Attributes:
        matrix (NDArray[np.float64]): The matrix A, shape (n, m).
        holder_exponent (float): Regularity exponent of the inverse, 1 for linear maps.
        left (NDArray[np.float64]): Left singular vectors U.
        sigma (NDArray[np.float64]): Singular values, descending.
        right (NDArray[np.float64]): Right singular vectors V.
    """

    matrix: NDArray[np.float64]
    holder_exponent: float = 1.0
    left: NDArray[np.float64] = field(init=False, repr=False)
    sigma: NDArray[np.float64] = field(init=False, repr=False)
    right: NDArray[np.float64] = field(init=False, repr=False)

    # Validate and factor the matrix
    def __post_init__(self) -> None:
        # Copy into a float matrix, scalars and vectors become 2D
        matrix = np.array(self.matrix, dtype=float)
        if matrix.ndim == 0:
            matrix = matrix.reshape(1, 1)
        if matrix.ndim != 2 or 0 in matrix.shape or not np.all(np.isfinite(matrix)):  # noqa: PLR2004
            raise ShapeError("Forward map matrix must be a finite, non-empty 2D array.")

        # Thin SVD
        left, sigma, right_t = np.linalg.svd(matrix, full_matrices=False)

        # Freeze and store
        for array in (matrix, left, sigma, right_t):
            array.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "right", right_t.T)

    @property
    def n_outputs(self) -> int:
        """Data dimension n."""
        return int(self.matrix.shape[0])

    @property
    def n_inputs(self) -> int:
        """Parameter dimension m."""
        return int(self.matrix.shape[1])

    @property
    def rank(self) -> int:
        """Numerical rank."""
        return int(np.sum(self.sigma > RANK_TOLERANCE * self.sigma[0])) if self.sigma[0] > 0 else 0

    @property
    def is_full_rank(self) -> bool:
        """Whether the rank equals min(n, m)."""
        return self.rank == self.sigma.shape[0]

    @property
    def is_invertible(self) -> bool:
        """Whether the map is square and full rank."""
        return self.n_inputs == self.n_outputs and self.is_full_rank

    @property
    def sigma_min(self) -> float:
        """Smallest singular value."""
        return float(self.sigma[-1])

    @property
    def sigma_max(self) -> float:
        """Largest singular value."""
        return float(self.sigma[0])

    @property
    def column_basis(self) -> NDArray[np.float64]:
        """Orthonormal basis of Col(A)."""
        return self.left[:, : self.rank]

    # Apply the map
    def __call__(self, u: ArrayLike) -> NDArray[np.float64]:
        """Apply the map to one point (m,) or to rows of (N, m).

        Args:
            u (ArrayLike): Parameter point or points.

        Returns:
            NDArray[np.float64]: Image point or points.
        """

        point = np.asarray(u, dtype=float)
        if point.shape[-1] != self.n_inputs:
            raise DimensionMismatchError(expected=self.n_inputs, got=point.shape[-1])
        return point @ self.matrix.T

    # Constant Jacobian
    def jacobian_at(self, u: ArrayLike) -> NDArray[np.float64]:  # noqa: ARG002
        """Return the Jacobian, the matrix itself.

        Args:
            u (ArrayLike): Ignored evaluation point.

        Returns:
            NDArray[np.float64]: The matrix A.
        """

        return np.array(self.matrix)
