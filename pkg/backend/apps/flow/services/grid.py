# Standard library imports
import logging

# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.common.exceptions import CFLViolationError
from apps.divergences.services import DENSITY_FLOOR
from apps.flow.utils import cfl_limit, grid_mobility
from apps.maps.types import ForwardMap
from apps.measures.types import GridMeasure

# Get the logger
logger = logging.getLogger(__name__)


# Index of a slab along one axis
def _along(axis: int, part: slice) -> tuple[slice, ...]:
    return (slice(None),) * axis + (part,)


# Log density with the shared floor
def floored_log(density: NDArray[np.float64]) -> NDArray[np.float64]:
    """Return ``log(max(density, DENSITY_FLOOR))``.

    Args:
        density (NDArray[np.float64]): Cell densities.

    Returns:
        NDArray[np.float64]: Floored log densities.
    """

    return np.log(np.maximum(density, DENSITY_FLOOR))


# Divergence of the flux -rho B grad log(rho / target)
def flux_divergence(
    density: NDArray[np.float64],
    log_target: NDArray[np.float64],
    mobility: NDArray[np.float64],
    widths: NDArray[np.float64],
) -> NDArray[np.float64]:
    """Return ``div F`` cell by cell for ``F = -rho B grad log(rho / target)``.

    Face densities are harmonic means of the neighbouring cells. The normal
    derivative of the log ratio is the compact difference across the face, the
    tangential ones are central cell differences averaged onto the face. Walls
    carry no flux.

    Args:
        density (NDArray[np.float64]): Cell densities.
        log_target (NDArray[np.float64]): Floored log target densities.
        mobility (NDArray[np.float64]): Mobility field, shape ``density.shape + (d, d)``.
        widths (NDArray[np.float64]): Cell widths per axis.

    Returns:
        NDArray[np.float64]: Flux divergence with the shape of ``density``.
    """

    dim = density.ndim
    log_ratio = floored_log(density) - log_target

    # Cell-centred gradients for the tangential terms
    gradients = [
        np.gradient(log_ratio, widths[axis], axis=axis) if density.shape[axis] > 1 else np.zeros_like(log_ratio)
        for axis in range(dim)
    ]

    divergence = np.zeros_like(density)
    for axis in range(dim):
        if density.shape[axis] < 2:  # noqa: PLR2004
            continue
        low, high = _along(axis, slice(None, -1)), _along(axis, slice(1, None))

        # Harmonic-mean face densities, zero next to empty cells
        left, right = density[low], density[high]
        total = left + right
        face_density = np.divide(2.0 * left * right, total, out=np.zeros_like(total), where=total > 0)

        # Face mobility and the driving gradient
        face_mobility = 0.5 * (mobility[low] + mobility[high])
        drive = face_mobility[..., axis, axis] * (log_ratio[high] - log_ratio[low]) / widths[axis]
        for other in range(dim):
            if other != axis:
                drive = drive + face_mobility[..., axis, other] * 0.5 * (gradients[other][low] + gradients[other][high])

        # Interior fluxes, zero at the walls
        padding = [(0, 0)] * dim
        padding[axis] = (1, 1)
        flux = np.pad(-face_density * drive, padding)
        divergence += np.diff(flux, axis=axis) / widths[axis]

    return divergence


# One explicit conservative update
def advance_density(
    density: NDArray[np.float64],
    log_target: NDArray[np.float64],
    mobility: NDArray[np.float64],
    widths: NDArray[np.float64],
    dt: float,
) -> tuple[NDArray[np.float64], float]:
    """Advance cell densities by one explicit Euler step.

    Negative cells are clamped to zero and the density renormalized.

    Args:
        density (NDArray[np.float64]): Cell densities.
        log_target (NDArray[np.float64]): Floored log target densities.
        mobility (NDArray[np.float64]): Mobility field.
        widths (NDArray[np.float64]): Cell widths per axis.
        dt (float): Time step.

    Returns:
        tuple[NDArray[np.float64], float]: New densities and the clamped mass.
    """

    updated = density - dt * flux_divergence(density, log_target, mobility, widths)

    # Clamp negative cells
    cell_volume = float(np.prod(widths))
    negative = updated < 0
    clamped = float(-updated[negative].sum() * cell_volume)
    if clamped > 0:
        updated[negative] = 0.0
        updated /= updated.sum() * cell_volume
        logger.warning("Clamped %.3e negative mass in a Fokker-Planck step", clamped)
    return updated, clamped


# One step of the data-space Fokker-Planck flow
def grid_fokker_planck_step(
    state: GridMeasure,
    forward_map: ForwardMap,
    target: GridMeasure,
    dt: float,
    *,
    reduced: bool = False,
) -> GridMeasure:
    """Advance ``d rho/dt = div(rho B grad log(rho / target))`` by one step.

    Args:
        state (GridMeasure): Current data-space density.
        forward_map (ForwardMap): Map defining the mobility B.
        target (GridMeasure): Target density on the same grid.
        dt (float): Time step.
        reduced (bool): Whether the grids are in ``Col(A)`` coordinates.

    Returns:
        GridMeasure: The density after one step.

    Raises:
        GridMismatchError: If the grids differ.
        CFLViolationError: If ``dt`` exceeds the explicit stability limit.
    """

    state.require_same_grid(target)

    # Mobility and step limit
    mobility = grid_mobility(forward_map, state, reduced=reduced)
    limit = cfl_limit(mobility, state.widths)
    if dt > limit:
        raise CFLViolationError(dt=dt, limit=limit)

    # Conservative update
    density, _ = advance_density(
        np.array(state.density), floored_log(target.density), mobility, state.widths, dt
    )
    return state.with_density(density)
