# Standard library imports
import dataclasses
import logging
from functools import partial

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import optimize

# Local application imports
from apps.common.exceptions import DimensionMismatchError, NonInvertibleMapError
from apps.maps.types import SmoothForwardMap

# Logger
logger = logging.getLogger(__name__)

# Residual tolerance of the inversion
NEWTON_TOLERANCE = 1e-10


# Bracket and bisect a monotone scalar map
def _bisect_scalar(forward_map: SmoothForwardMap, target: float, start: float) -> float:
    # Residual in one dimension
    def residual(value: float) -> float:
        return float(forward_map(np.array([value]))[0]) - target

    # Grow the bracket until the residual changes sign
    radius = 1.0
    lower, upper = start - radius, start + radius
    while residual(lower) * residual(upper) > 0:
        radius *= 2.0
        lower, upper = start - radius, start + radius
        if radius > 1e12:  # noqa: PLR2004
            raise NonInvertibleMapError("No sign change found while bracketing the inverse.", target=target)

    # Bisection down to machine resolution
    return float(optimize.bisect(residual, lower, upper, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=400))


# Damped Newton inversion
def newton_inverse(
    forward_map: SmoothForwardMap,
    y: ArrayLike,
    initial: ArrayLike | None = None,
    tol: float = NEWTON_TOLERANCE,
    max_iter: int = 100,
) -> NDArray[np.float64]:
    """Solve ``G(u) = y`` by damped Newton, with bisection as the 1D fallback.

    Args:
        forward_map (SmoothForwardMap): A square smooth map.
        y (ArrayLike): Data point, shape (n,).
        initial (ArrayLike | None): Starting point, zero when None.
        tol (float): Residual tolerance.
        max_iter (int): Newton iteration limit.

    Returns:
        NDArray[np.float64]: The pre-image, shape (m,).

    Raises:
        DimensionMismatchError: If the map is not square or y has the wrong size.
        NonInvertibleMapError: If neither Newton nor the fallback converges.
    """

    # Square maps only
    if forward_map.input_dim != forward_map.output_dim:
        raise DimensionMismatchError(expected=forward_map.input_dim, got=forward_map.output_dim)
    target = np.asarray(y, dtype=float).reshape(-1)
    if target.shape[0] != forward_map.output_dim:
        raise DimensionMismatchError(expected=forward_map.output_dim, got=target.shape[0])

    # Starting point
    u = np.zeros(forward_map.input_dim) if initial is None else np.asarray(initial, dtype=float).reshape(-1).copy()
    residual = forward_map(u) - target
    norm = float(np.linalg.norm(residual))

    # Newton iterations with backtracking
    for _ in range(max_iter):
        if norm <= tol:
            return u
        try:
            step = np.linalg.solve(forward_map.jacobian_at(u), residual)
        except np.linalg.LinAlgError:
            break
        damping = 1.0
        while damping > 1e-8:  # noqa: PLR2004
            trial = u - damping * step
            trial_residual = forward_map(trial) - target
            trial_norm = float(np.linalg.norm(trial_residual))
            if np.isfinite(trial_norm) and trial_norm < norm:
                break
            damping *= 0.5
        else:
            break
        u, residual, norm = trial, trial_residual, trial_norm

    # Converged on the last step
    if norm <= tol:
        return u

    # Scalar fallback
    if forward_map.input_dim == 1:
        logger.debug("Newton stalled at residual %.3e, falling back to bisection", norm)
        root = _bisect_scalar(forward_map, float(target[0]), float(u[0]) if np.isfinite(u[0]) else 0.0)
        return np.array([root])

    raise NonInvertibleMapError("Newton inversion did not converge.", residual=norm)


# Attach the Newton inverse to a map
def with_newton_inverse(forward_map: SmoothForwardMap) -> SmoothForwardMap:
    """Return a copy of the map whose inverse is computed by ``newton_inverse``.

    Args:
        forward_map (SmoothForwardMap): A square smooth map.

    Returns:
        SmoothForwardMap: The same map with an inverse.
    """

    return dataclasses.replace(forward_map, inverse=partial(newton_inverse, forward_map))
