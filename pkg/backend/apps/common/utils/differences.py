# Standard library imports
from collections.abc import Callable

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike, NDArray


# Central difference Jacobian
def finite_difference_jacobian(
    evaluate: Callable[[NDArray[np.float64]], ArrayLike],
    point: ArrayLike,
    relative_step: float = 1e-6,
) -> NDArray[np.float64]:
    """Approximate the Jacobian of ``evaluate`` at ``point`` by central differences.

    Args:
        evaluate (Callable): Map from R^m to R^n.
        point (ArrayLike): Evaluation point, shape (m,).
        relative_step (float): Step relative to ``max(1, |u_j|)``.

    Returns:
        NDArray[np.float64]: Jacobian, shape (n, m).
    """

    # Evaluation point
    u = np.asarray(point, dtype=float).reshape(-1)

    # One column per input coordinate
    columns = []
    for index in range(u.shape[0]):
        step = relative_step * max(1.0, abs(u[index]))
        offset = np.zeros_like(u)
        offset[index] = step
        forward = np.atleast_1d(np.asarray(evaluate(u + offset), dtype=float))
        backward = np.atleast_1d(np.asarray(evaluate(u - offset), dtype=float))
        columns.append((forward - backward) / (2.0 * step))

    # Stack the columns
    return np.stack(columns, axis=1)
