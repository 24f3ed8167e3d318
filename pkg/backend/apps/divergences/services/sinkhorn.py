# Standard library imports
import logging
import warnings

# Third-party imports
import numpy as np
from scipy.special import logsumexp

# Local application imports
from apps.common.exceptions import DimensionMismatchError, NotConvergedWarning
from apps.common.utils import get_setting
from apps.divergences.services.exact import cost_matrix
from apps.divergences.types import Coupling, SinkhornResult
from apps.measures.types import ParticleMeasure

# Get the logger
logger = logging.getLogger(__name__)


# Entropic optimal transport in the log domain
def sinkhorn(
    mu: ParticleMeasure,
    nu: ParticleMeasure,
    p: float = 2.0,
    epsilon: float = 0.01,
    max_iter: int | None = None,
    tol: float | None = None,
) -> SinkhornResult:
    """Approximate ``W_p`` with log-domain Sinkhorn iterations.

    The dual potentials are updated with log-sum-exp, so small ``epsilon`` does
    not underflow. Iteration stops once the L1 violation of the first marginal
    is below ``tol``; the second marginal is exact after every update. On
    non-convergence the best iterate is returned with ``converged=False`` and a
    ``NotConvergedWarning`` is issued.

    Args:
        mu (ParticleMeasure): First cloud.
        nu (ParticleMeasure): Second cloud.
        p (float): Order, at least one.
        epsilon (float): Entropic regularization, positive.
        max_iter (int | None): Iteration limit, ``STOCHINVERSE_SINKHORN_MAX_ITER`` when None.
        tol (float | None): Marginal tolerance, ``STOCHINVERSE_SINKHORN_TOL`` when None.

    Returns:
        SinkhornResult: Value, plan and convergence record.
    """

    # Argument checks
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if mu.dim != nu.dim:
        raise DimensionMismatchError(expected=mu.dim, got=nu.dim)
    max_iter = int(max_iter if max_iter is not None else get_setting("STOCHINVERSE_SINKHORN_MAX_ITER", 10_000))
    tol = float(tol if tol is not None else get_setting("STOCHINVERSE_SINKHORN_TOL", 1e-9))

    # Costs and log weights
    costs = cost_matrix(mu.points, nu.points, p)
    with np.errstate(divide="ignore"):
        log_a, log_b = np.log(mu.weights), np.log(nu.weights)

    # Dual potentials
    f = np.zeros(mu.size)
    g = np.zeros(nu.size)
    best_plan, best_error, iterations = None, np.inf, 0

    for iterations in range(1, max(max_iter, 1) + 1):
        # Alternate the two potential updates
        f = epsilon * (log_a - logsumexp((g[None, :] - costs) / epsilon, axis=1))
        g = epsilon * (log_b - logsumexp((f[:, None] - costs) / epsilon, axis=0))

        # Plan and first marginal violation
        plan = np.exp((f[:, None] + g[None, :] - costs) / epsilon)
        error = float(np.abs(plan.sum(axis=1) - mu.weights).sum())
        if error < best_error:
            best_plan, best_error = plan, error
        if error <= tol:
            break

    # Report non-convergence
    converged = best_error <= tol
    if not converged:
        logger.warning("Sinkhorn stopped after %d iterations with marginal error %.3e", iterations, best_error)
        warnings.warn(
            f"Sinkhorn did not reach tolerance {tol:g} in {iterations} iterations.",
            NotConvergedWarning,
            stacklevel=2,
        )

    # Value of the best plan
    cost = max(float(np.sum(best_plan * costs)), 0.0)
    return SinkhornResult(
        value=cost ** (1.0 / p),
        coupling=Coupling(best_plan, cost),
        iterations=iterations,
        converged=converged,
        marginal_error=best_error,
    )
