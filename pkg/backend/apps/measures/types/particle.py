# Standard library imports
from dataclasses import InitVar, dataclass

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray

# Local application imports
from apps.common.exceptions import InvalidMeasureError

# Tolerance on the total mass of a probability measure
MASS_TOLERANCE = 1e-12


# Weighted point cloud
@dataclass(frozen=True, eq=False)
class ParticleMeasure:
    """Empirical probability measure given by weighted atoms in R^d.

    Points and weights are copied and made read-only on construction. With
    ``require_unit_mass=False`` the weights only need to be nonnegative, which
    is how unnormalized clouds are handed to ``normalize``.

    Attributes:
        points (NDArray[np.float64]): Atom locations, shape (n, d).
        weights (NDArray[np.float64]): Atom masses, shape (n,).
    """

    points: NDArray[np.float64]
    weights: NDArray[np.float64]
    require_unit_mass: InitVar[bool] = True

    # Validate and freeze the arrays
    def __post_init__(self, require_unit_mass: bool) -> None:
        # Copy into float arrays, 1D points are a single coordinate
        points = np.array(self.points, dtype=float)
        if points.ndim == 1:
            points = points[:, None]
        weights = np.array(self.weights, dtype=float).reshape(-1)

        # Shape checks
        if points.ndim != 2 or points.shape[0] < 1 or points.shape[1] < 1:  # noqa: PLR2004
            raise InvalidMeasureError("Particle points must be a non-empty (n, d) array.")
        if weights.shape[0] != points.shape[0]:
            raise InvalidMeasureError("Particle weights must have one entry per point.")

        # Value checks
        if not np.all(np.isfinite(points)):
            raise InvalidMeasureError("Particle points must be finite.")
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise InvalidMeasureError("Particle weights must be finite and nonnegative.")
        if require_unit_mass and abs(weights.sum() - 1.0) > MASS_TOLERANCE:
            raise InvalidMeasureError("Particle weights must sum to one.", total=float(weights.sum()))

        # Freeze the arrays
        points.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)

    # Equal weight cloud
    @classmethod
    def uniform(cls, points: ArrayLike) -> "ParticleMeasure":
        """Build a cloud with equal weights.

        Args:
            points (ArrayLike): Atom locations, shape (n, d) or (n,).

        Returns:
            ParticleMeasure: The uniform empirical measure.
        """

        # Equal masses summing to one
        array = np.asarray(points, dtype=float)
        count = array.shape[0]
        return cls(array, np.full(count, 1.0 / count))

    @property
    def size(self) -> int:
        """Number of atoms."""
        return int(self.points.shape[0])

    @property
    def dim(self) -> int:
        """Dimension of the ambient space."""
        return int(self.points.shape[1])

    @property
    def total_mass(self) -> float:
        """Sum of the weights."""
        return float(self.weights.sum())

    # Same weights, new locations
    def with_points(self, points: ArrayLike) -> "ParticleMeasure":
        """Return a cloud with the same weights at new locations.

        Args:
            points (ArrayLike): New atom locations, one row per atom.

        Returns:
            ParticleMeasure: The moved cloud.
        """

        return ParticleMeasure(points, self.weights, require_unit_mass=False)
