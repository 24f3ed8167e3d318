# Standard library imports
import logging
import math

# Third-party imports
import numpy as np
from scipy.special import logsumexp

# Local application imports
from apps.common.exceptions import (
    MissingInverseError,
    NonInvertibleMapError,
    SupportMismatchError,
    UnsupportedCarrierError,
)
from apps.divergences.services import DENSITY_FLOOR, f_divergence
from apps.divergences.types import FDivergenceSpec
from apps.maps.services import pseudo_inverse, pullback_grid, pushforward_gaussian
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.types import GaussianMeasure, GridMeasure
from apps.variational.types import EntropyErrorTerms, EntropyRegularizedSolution, ErrorIdentity

# Get the logger
logger = logging.getLogger(__name__)


# Regularization weight check
def _check_alpha(alpha: float) -> float:
    if not math.isfinite(alpha) or alpha < 0:
        raise ValueError("alpha must be nonnegative")
    return float(alpha)


# Data pulled back onto the parameter domain
def _pull_back(
    forward_map: ForwardMap,
    data: GridMeasure | GaussianMeasure,
    prior: GridMeasure | GaussianMeasure,
) -> GridMeasure | GaussianMeasure:
    # Invertible maps only
    if isinstance(forward_map, LinearForwardMap):
        if not forward_map.is_invertible:
            raise NonInvertibleMapError(rank=forward_map.rank, inputs=forward_map.n_inputs)
    elif not forward_map.is_invertible:
        raise MissingInverseError()

    # Grids by change of variables onto the prior grid
    if isinstance(data, GridMeasure) and isinstance(prior, GridMeasure):
        return pullback_grid(forward_map, data, prior)

    # Gaussians through the inverse matrix
    if isinstance(data, GaussianMeasure) and isinstance(prior, GaussianMeasure):
        if isinstance(forward_map, LinearForwardMap):
            return pushforward_gaussian(pseudo_inverse(forward_map), None, data)

    raise UnsupportedCarrierError(
        f"No entropy-entropy solver for {type(data).__name__} data and {type(prior).__name__} prior.",
    )


# Cellwise geometric mean on a grid
def _solve_grid(pulled: GridMeasure, prior: GridMeasure, alpha: float) -> tuple[GridMeasure, float]:
    # The prior must charge every cell the data charges
    data_cells = pulled.density > DENSITY_FLOOR
    prior_cells = prior.density > DENSITY_FLOOR
    uncovered = data_cells & ~prior_cells
    if np.any(uncovered):
        raise SupportMismatchError(cells=int(uncovered.sum()))

    # Log of the unnormalized solution
    log_s = np.full(pulled.shape, -np.inf)
    log_s[data_cells] = (np.log(pulled.density[data_cells]) + alpha * np.log(prior.density[data_cells])) / (1 + alpha)

    # Normalize in log space
    log_c = -float(logsumexp(log_s[data_cells]) + math.log(pulled.cell_volume))
    return prior.with_density(np.exp(log_s + log_c)), log_c


# Geometric mean of two Gaussians
def _solve_gaussian(pulled: GaussianMeasure, prior: GaussianMeasure, alpha: float) -> tuple[GaussianMeasure, float]:
    # Precision and mean of the weighted geometric mean
    precision = (pulled.precision + alpha * prior.precision) / (1 + alpha)
    shift = (pulled.precision @ pulled.mean + alpha * prior.precision @ prior.mean) / (1 + alpha)
    mean = np.linalg.solve(precision, shift)
    cov = np.linalg.inv(precision)

    # Log of the integral, from the peak value and the Gaussian volume
    log_peak = (pulled.log_density(mean) + alpha * prior.log_density(mean)) / (1 + alpha)
    _, log_det_precision = np.linalg.slogdet(precision)
    log_integral = log_peak + 0.5 * pulled.dim * math.log(2 * math.pi) - 0.5 * log_det_precision
    return GaussianMeasure(mean, 0.5 * (cov + cov.T)), -float(log_integral)


# Terms of the error identity
def _error_terms(
    truth: GridMeasure | GaussianMeasure,
    pulled: GridMeasure | GaussianMeasure,
    prior: GridMeasure | GaussianMeasure,
    log_c: float,
) -> EntropyErrorTerms:
    kl = FDivergenceSpec.kl()
    return EntropyErrorTerms(
        kl_data_term=f_divergence(kl, truth, pulled),
        kl_prior_term=f_divergence(kl, truth, prior),
        log_c=log_c,
    )


# Closed form solver of the KL-KL problem
def solve_entropy_entropy(
    forward_map: ForwardMap,
    data: GridMeasure | GaussianMeasure,
    prior: GridMeasure | GaussianMeasure,
    alpha: float,
    truth: GridMeasure | GaussianMeasure | None = None,
) -> EntropyRegularizedSolution:
    """Minimize ``KL(G # u || data) + alpha KL(u || prior)`` over parameter densities.

    The minimizer is ``C [(G^{-1} # data) prior^alpha]^(1 / (1 + alpha))``.
    Grid data is pulled back onto the prior grid and combined cell by cell.
    Gaussian data and priors under invertible linear maps stay Gaussian.

    Args:
        forward_map (ForwardMap): Invertible linear map, or smooth map with an inverse.
        data (GridMeasure | GaussianMeasure): Data density over y.
        prior (GridMeasure | GaussianMeasure): Prior density over u, same carrier as the data.
        alpha (float): Nonnegative regularization weight.
        truth (GridMeasure | GaussianMeasure | None): Ground truth over u for the error terms.

    Returns:
        EntropyRegularizedSolution: Solution, ``C`` and the error terms.

    Raises:
        ValueError: If ``alpha`` is negative.
        SupportMismatchError: If the prior vanishes where the pulled back data does not.
        NonInvertibleMapError: For singular linear maps.
        MissingInverseError: For smooth maps without an inverse.
    """

    # Pull the data back
    alpha = _check_alpha(alpha)
    pulled = _pull_back(forward_map, data, prior)

    # Closed form solution
    if isinstance(pulled, GridMeasure):
        solution, log_c = _solve_grid(pulled, prior, alpha)
    else:
        solution, log_c = _solve_gaussian(pulled, prior, alpha)
    logger.info("Entropy-entropy solution with alpha %g, log C %.6g", alpha, log_c)

    # Error terms against the truth
    terms = None if truth is None else _error_terms(truth, pulled, prior, log_c)
    return EntropyRegularizedSolution(solution, alpha, math.exp(log_c), terms)


# Check of the entropy error identity
def entropy_error_identity(
    solution: EntropyRegularizedSolution,
    truth: GridMeasure | GaussianMeasure,
    forward_map: ForwardMap,
    data: GridMeasure | GaussianMeasure,
    prior: GridMeasure | GaussianMeasure,
) -> ErrorIdentity:
    """Evaluate both sides of the error identity of the entropy-entropy solver.

    ``KL(truth || solution) = (KL(truth || G^{-1} # data) + alpha KL(truth || prior)) / (1 + alpha) - log C``.
    The data-space divergences equal their parameter-space pullbacks, so all
    three are evaluated with the same quadrature on the solution grid.

    Args:
        solution (EntropyRegularizedSolution): Output of ``solve_entropy_entropy``.
        truth (GridMeasure | GaussianMeasure): Ground truth over u.
        forward_map (ForwardMap): The forward map.
        data (GridMeasure | GaussianMeasure): Data the solution was computed from.
        prior (GridMeasure | GaussianMeasure): Prior the solution was computed from.

    Returns:
        ErrorIdentity: Both sides and their gap.
    """

    # Right side
    alpha = solution.alpha
    pulled = _pull_back(forward_map, data, prior)
    terms = _error_terms(truth, pulled, prior, math.log(solution.normalization_c))
    weighted = terms.kl_data_term + (alpha * terms.kl_prior_term if alpha > 0 else 0.0)
    rhs = weighted / (1 + alpha) - terms.log_c

    # Left side
    lhs = f_divergence(FDivergenceSpec.kl(), truth, solution.solution)
    residual = 0.0 if lhs == rhs else abs(lhs - rhs)
    return ErrorIdentity(lhs, rhs, residual)


# Value of the KL-KL objective
def entropy_objective(
    forward_map: ForwardMap,
    data: GridMeasure | GaussianMeasure,
    prior: GridMeasure | GaussianMeasure,
    alpha: float,
    candidate: GridMeasure | GaussianMeasure,
) -> float:
    """Return ``KL(G # candidate || data) + alpha KL(candidate || prior)``.

    The data term is evaluated as ``KL(candidate || G^{-1} # data)`` on the
    parameter grid, with the clamping conventions of ``f_divergence_grid``.

    Args:
        forward_map (ForwardMap): Invertible forward map.
        data (GridMeasure | GaussianMeasure): Data density.
        prior (GridMeasure | GaussianMeasure): Prior density.
        alpha (float): Nonnegative regularization weight.
        candidate (GridMeasure | GaussianMeasure): Parameter density on the prior grid.

    Returns:
        float: The objective, possibly ``inf``.
    """

    alpha = _check_alpha(alpha)
    pulled = _pull_back(forward_map, data, prior)
    kl = FDivergenceSpec.kl()
    value = f_divergence(kl, candidate, pulled)
    if alpha > 0:
        value += alpha * f_divergence(kl, candidate, prior)
    return value
