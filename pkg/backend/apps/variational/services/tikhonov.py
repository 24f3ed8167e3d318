# Standard library imports
import logging
import math

# Third-party imports
import numpy as np
from numpy.typing import NDArray

# Local application imports
from apps.common.exceptions import DimensionMismatchError, RankDeficientError, ShapeError, UnsupportedCarrierError
from apps.maps.services import pushforward_gaussian
from apps.maps.types import LinearForwardMap
from apps.measures.services import second_moment
from apps.measures.types import GaussianMeasure, Measure, ParticleMeasure
from apps.variational.types import TikhonovBound, TikhonovW2Solution

# Get the logger
logger = logging.getLogger(__name__)


# Regularized inverse operator
def tikhonov_operator(forward_map: LinearForwardMap, alpha: float) -> NDArray[np.float64]:
    """Return ``T_alpha = (A^T A + alpha^2 I)^{-1} A^T`` through the SVD of ``A``.

    Args:
        forward_map (LinearForwardMap): Map with at least as many outputs as inputs.
        alpha (float): Nonnegative regularization weight.

    Returns:
        NDArray[np.float64]: ``V diag(sigma / (sigma^2 + alpha^2)) U^T``.

    Raises:
        ValueError: If ``alpha`` is negative.
        ShapeError: If the map has fewer outputs than inputs.
        RankDeficientError: If the map lacks full column rank.
    """

    # Preconditions
    if not math.isfinite(alpha) or alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if forward_map.n_outputs < forward_map.n_inputs:
        raise ShapeError(
            "Tikhonov W2 regularization needs at least as many outputs as inputs.",
            outputs=forward_map.n_outputs,
            inputs=forward_map.n_inputs,
        )
    if not forward_map.is_full_rank:
        raise RankDeficientError(rank=forward_map.rank)

    # Filtered singular values
    gains = forward_map.sigma / (forward_map.sigma**2 + alpha**2)
    return (forward_map.right * gains) @ forward_map.left.T


# Error bound of the regularized reconstruction
def tikhonov_error_bound(
    forward_map: LinearForwardMap,
    alpha: float,
    data_noise: float,
    data_second_moment: float,
) -> TikhonovBound:
    """Bound ``W2(T_alpha # noisy, A^+ # truth)`` by a noise and a regularization term.

    With ``W = W2(truth, noisy)`` and ``E`` the second moment of the true data,
    the noise term is ``sqrt(1 / (2 alpha)) W`` and the regularization term
    ``sqrt(alpha / (2 sigma_min^2)) sqrt(E)``. The record also carries the
    sharper middle form and the operator norm form
    ``|T_alpha| W + |T_alpha - A^+| sqrt(E)``, which holds for every alpha.

    Args:
        forward_map (LinearForwardMap): Full column rank map.
        alpha (float): Positive regularization weight.
        data_noise (float): ``W2(truth, noisy)`` in data space.
        data_second_moment (float): Second moment of the true data.

    Returns:
        TikhonovBound: The bound record.

    Raises:
        ValueError: If ``alpha`` is not positive or an input is negative.
    """

    # Preconditions
    if not math.isfinite(alpha) or alpha <= 0:
        raise ValueError("alpha must be positive")
    if data_noise < 0 or data_second_moment < 0:
        raise ValueError("noise level and second moment must be nonnegative")

    # Simplified terms
    sigma_min = forward_map.sigma_min
    root_moment = math.sqrt(data_second_moment)
    noise_term = math.sqrt(1.0 / (2.0 * alpha)) * data_noise
    reg_term = math.sqrt(alpha / (2.0 * sigma_min**2)) * root_moment
    mid_reg_term = math.sqrt(alpha**2 / (sigma_min * (sigma_min**2 + alpha**2))) * root_moment

    # Spectral norms of T_alpha and T_alpha - A^+
    sigma = forward_map.sigma
    operator_norm = float(np.max(sigma / (sigma**2 + alpha**2)))
    bias_norm = float(np.max(alpha**2 / (sigma * (sigma**2 + alpha**2))))

    return TikhonovBound(
        noise_term=noise_term,
        reg_term=reg_term,
        total=noise_term + reg_term,
        mid_total=noise_term + mid_reg_term,
        operator_total=operator_norm * data_noise + bias_norm * root_moment,
    )


# Closed form minimizer of the W2-W2 problem
def solve_w2_tikhonov(
    forward_map: LinearForwardMap,
    data: Measure,
    alpha: float,
    noise_w2: float | None = None,
    data_second_moment: float | None = None,
) -> TikhonovW2Solution:
    """Minimize ``W2^2(A # u, data) + alpha^2 M2(u)``, solved by ``T_alpha # data``.

    Particles are mapped atom by atom and Gaussians affinely. The bound is
    filled in when a noise level is given and ``alpha > 0``; the second moment
    defaults to that of ``data``.

    Args:
        forward_map (LinearForwardMap): Full column rank map with ``n_outputs >= n_inputs``.
        data (Measure): Particle or Gaussian data.
        alpha (float): Nonnegative regularization weight.
        noise_w2 (float | None): ``W2(truth, data)`` when known.
        data_second_moment (float | None): Second moment of the true data.

    Returns:
        TikhonovW2Solution: Solution, operator and optional bound.

    Raises:
        ShapeError: If the map has fewer outputs than inputs.
        DimensionMismatchError: If the data dimension differs from the map outputs.
        UnsupportedCarrierError: For grid data.
    """

    # Operator
    operator = tikhonov_operator(forward_map, alpha)

    # Pushforward of the data
    if isinstance(data, ParticleMeasure):
        if data.dim != forward_map.n_outputs:
            raise DimensionMismatchError(expected=forward_map.n_outputs, actual=data.dim)
        solution = ParticleMeasure(data.points @ operator.T, data.weights)
    elif isinstance(data, GaussianMeasure):
        solution = pushforward_gaussian(operator, None, data)
    else:
        raise UnsupportedCarrierError("Tikhonov W2 solver accepts particle or Gaussian data.")

    # Optional error bound
    bound = None
    if noise_w2 is not None and alpha > 0:
        moment = second_moment(data) if data_second_moment is None else data_second_moment
        bound = tikhonov_error_bound(forward_map, alpha, noise_w2, moment)
    logger.info("Tikhonov W2 solution with alpha %g", alpha)

    return TikhonovW2Solution(solution, float(alpha), operator, bound)


# Regularization weight balancing both error terms
def balanced_alpha(forward_map: LinearForwardMap, data_noise: float, data_second_moment: float) -> float:
    """Return ``sigma_min W / sqrt(E)``, where the two terms of the bound are equal.

    Args:
        forward_map (LinearForwardMap): Full column rank map.
        data_noise (float): ``W2(truth, noisy)``.
        data_second_moment (float): Positive second moment of the true data.

    Returns:
        float: The balancing weight.

    Raises:
        ValueError: If the second moment is not positive.
    """

    if data_second_moment <= 0:
        raise ValueError("second moment must be positive")
    return forward_map.sigma_min * data_noise / math.sqrt(data_second_moment)
