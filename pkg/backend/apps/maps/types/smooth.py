# Standard library imports
from collections.abc import Callable
from dataclasses import dataclass

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray

# Local application imports
from apps.common.exceptions import DimensionMismatchError, MissingInverseError
from apps.common.utils import finite_difference_jacobian

# Vector function type
VectorFunction = Callable[[NDArray[np.float64]], ArrayLike]


# Smooth nonlinear forward map
@dataclass(frozen=True, eq=False)
class SmoothForwardMap:
    """Smooth forward map ``G: R^m -> R^n`` given by callables.

    The callables take and return 1D arrays. They are never mutated and must be
    safe to call from several threads. A missing Jacobian is replaced by central
    finite differences.

    Attributes:
        evaluate (VectorFunction): The map G.
        input_dim (int): Parameter dimension m.
        output_dim (int): Data dimension n.
        jacobian (Callable | None): Jacobian ``u -> (n, m)`` matrix.
        inverse (VectorFunction | None): The inverse ``y -> u`` when G is a diffeomorphism.
        holder_exponent (float): Regularity exponent of the inverse.
    """

    evaluate: VectorFunction
    input_dim: int
    output_dim: int
    jacobian: Callable[[NDArray[np.float64]], ArrayLike] | None = None
    inverse: VectorFunction | None = None
    holder_exponent: float = 1.0

    @property
    def n_inputs(self) -> int:
        """Parameter dimension m."""
        return self.input_dim

    @property
    def n_outputs(self) -> int:
        """Data dimension n."""
        return self.output_dim

    @property
    def is_invertible(self) -> bool:
        """Whether an inverse is available."""
        return self.inverse is not None

    # Apply the map
    def __call__(self, u: ArrayLike) -> NDArray[np.float64]:
        """Apply the map to one point (m,) or to rows of (N, m).

        Args:
            u (ArrayLike): Parameter point or points.

        Returns:
            NDArray[np.float64]: Image point or points.
        """

        points = np.asarray(u, dtype=float)
        if points.shape[-1] != self.input_dim:
            raise DimensionMismatchError(expected=self.input_dim, got=points.shape[-1])
        if points.ndim == 1:
            return np.atleast_1d(np.asarray(self.evaluate(points), dtype=float))
        return np.stack([np.atleast_1d(np.asarray(self.evaluate(row), dtype=float)) for row in points])

    # Apply the inverse
    def invert(self, y: ArrayLike) -> NDArray[np.float64]:
        """Apply the inverse to one point (n,) or to rows of (N, n).

        Args:
            y (ArrayLike): Data point or points.

        Returns:
            NDArray[np.float64]: Parameter point or points.

        Raises:
            MissingInverseError: If no inverse is available.
        """

        if self.inverse is None:
            raise MissingInverseError()
        points = np.asarray(y, dtype=float)
        if points.ndim == 1:
            return np.atleast_1d(np.asarray(self.inverse(points), dtype=float))
        return np.stack([np.atleast_1d(np.asarray(self.inverse(row), dtype=float)) for row in points])

    # Jacobian at a point
    def jacobian_at(self, u: ArrayLike) -> NDArray[np.float64]:
        """Return the Jacobian at ``u``, supplied or finite-differenced.

        Args:
            u (ArrayLike): Evaluation point, shape (m,).

        Returns:
            NDArray[np.float64]: Jacobian, shape (n, m).
        """

        point = np.asarray(u, dtype=float).reshape(-1)
        if self.jacobian is None:
            return finite_difference_jacobian(self.evaluate, point)
        return np.asarray(self.jacobian(point), dtype=float).reshape(self.output_dim, self.input_dim)

    # Check the supplied Jacobian
    def check_jacobian(self, points: ArrayLike, rtol: float = 1e-5) -> bool:
        """Compare the supplied Jacobian with central finite differences.

        Args:
            points (ArrayLike): Probe points, shape (N, m).
            rtol (float): Relative tolerance against the finite difference scale.

        Returns:
            bool: True when every probe agrees.
        """

        for point in np.atleast_2d(np.asarray(points, dtype=float)):
            supplied = self.jacobian_at(point)
            numeric = finite_difference_jacobian(self.evaluate, point)
            scale = max(1.0, float(np.max(np.abs(numeric))))
            if np.max(np.abs(supplied - numeric)) > rtol * scale:
                return False
        return True
