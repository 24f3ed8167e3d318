# Standard library imports
from dataclasses import InitVar, dataclass
from functools import cached_property

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray

# Local application imports
from apps.common.exceptions import GridMismatchError, InvalidMeasureError

# Tolerance on the total mass of a grid measure
GRID_MASS_TOLERANCE = 1e-10


# Density on a regular rectangular grid
@dataclass(frozen=True, eq=False)
class GridMeasure:
    """Absolutely continuous measure stored as cell-centred densities.

    The box ``[lower, upper]`` is split into ``shape`` equal cells per axis.
    ``density`` holds the density per unit volume at every cell centre, indexed
    row-major (``ij``) like the cell centres. Integrals use the midpoint rule,
    so the mass of a cell is ``density * cell_volume``.

    Attributes:
        lower (NDArray[np.float64]): Lower corner, shape (d,).
        upper (NDArray[np.float64]): Upper corner, shape (d,).
        shape (tuple[int, ...]): Number of cells per axis.
        density (NDArray[np.float64]): Cell densities with shape ``shape``.
    """

    lower: NDArray[np.float64]
    upper: NDArray[np.float64]
    shape: tuple[int, ...]
    density: NDArray[np.float64]
    require_unit_mass: InitVar[bool] = True

    # Validate and freeze the arrays
    def __post_init__(self, require_unit_mass: bool) -> None:
        # Convert the box and the cell counts
        lower = np.atleast_1d(np.array(self.lower, dtype=float))
        upper = np.atleast_1d(np.array(self.upper, dtype=float))
        shape = tuple(int(count) for count in np.atleast_1d(self.shape))

        # Box checks
        if lower.ndim != 1 or lower.shape != upper.shape or len(shape) != lower.shape[0]:
            raise InvalidMeasureError("Grid lower, upper and shape must have one entry per axis.")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))) or np.any(upper <= lower):
            raise InvalidMeasureError("Grid upper corner must exceed the lower corner.")
        if any(count < 1 for count in shape):
            raise InvalidMeasureError("Grid needs at least one cell per axis.")

        # Density checks
        density = np.array(self.density, dtype=float)
        if density.size != int(np.prod(shape)):
            raise InvalidMeasureError("Grid density must have one value per cell.")
        density = density.reshape(shape)
        if not np.all(np.isfinite(density)) or np.any(density < 0):
            raise InvalidMeasureError("Grid density must be finite and nonnegative.")

        # Mass check
        cell_volume = float(np.prod((upper - lower) / np.asarray(shape)))
        total = float(density.sum() * cell_volume)
        if require_unit_mass and abs(total - 1.0) > GRID_MASS_TOLERANCE:
            raise InvalidMeasureError("Grid density must integrate to one.", total=total)

        # Freeze the arrays
        for array in (lower, upper, density):
            array.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "density", density)

    @property
    def dim(self) -> int:
        """Number of axes."""
        return len(self.shape)

    @cached_property
    def widths(self) -> NDArray[np.float64]:
        """Cell width along each axis."""
        return (self.upper - self.lower) / np.asarray(self.shape, dtype=float)

    @cached_property
    def cell_volume(self) -> float:
        """Volume of one cell."""
        return float(np.prod(self.widths))

    @cached_property
    def axes(self) -> tuple[NDArray[np.float64], ...]:
        """Cell centre coordinates along each axis."""
        return tuple(
            low + (np.arange(count) + 0.5) * width
            for low, count, width in zip(self.lower, self.shape, self.widths, strict=True)
        )

    @cached_property
    def points(self) -> NDArray[np.float64]:
        """All cell centres as an (N, d) array in row-major order."""
        mesh = np.meshgrid(*self.axes, indexing="ij")
        return np.stack([axis.reshape(-1) for axis in mesh], axis=1)

    @property
    def masses(self) -> NDArray[np.float64]:
        """Cell masses, flattened in row-major order."""
        return self.density.reshape(-1) * self.cell_volume

    @property
    def total_mass(self) -> float:
        """Integral of the density."""
        return float(self.density.sum() * self.cell_volume)

    # Same grid, new values
    def with_density(self, density: ArrayLike, *, require_unit_mass: bool = True) -> "GridMeasure":
        """Return a measure on the same grid with new density values.

        Args:
            density (ArrayLike): New density values, one per cell.
            require_unit_mass (bool): Whether the new values must integrate to one.

        Returns:
            GridMeasure: The new measure.
        """

        return GridMeasure(self.lower, self.upper, self.shape, density, require_unit_mass=require_unit_mass)

    # Grid compatibility
    def same_grid(self, other: "GridMeasure", tol: float = 1e-12) -> bool:
        """Whether ``other`` lives on exactly the same grid.

        Args:
            other (GridMeasure): Measure to compare with.
            tol (float): Absolute tolerance on the box corners.

        Returns:
            bool: True when box and cell counts agree.
        """

        return (
            self.shape == other.shape
            and np.allclose(self.lower, other.lower, rtol=0.0, atol=tol)
            and np.allclose(self.upper, other.upper, rtol=0.0, atol=tol)
        )

    # Raise unless the grids agree
    def require_same_grid(self, other: "GridMeasure") -> None:
        """Raise ``GridMismatchError`` unless ``other`` shares this grid.

        Args:
            other (GridMeasure): Measure to compare with.

        Raises:
            GridMismatchError: When box or cell counts differ.
        """

        if not self.same_grid(other):
            raise GridMismatchError(shape=self.shape, other_shape=other.shape)
