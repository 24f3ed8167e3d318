# Standard library imports
import logging
from collections.abc import Sequence

# Third-party imports
import pandas as pd

# Local application imports
from apps.divergences.services import wasserstein_distance
from apps.inversion.services import direct_invert
from apps.maps.types import LinearForwardMap
from apps.measures.services import second_moment
from apps.measures.types import GaussianMeasure, ParticleMeasure
from apps.variational.services.tikhonov import solve_w2_tikhonov, tikhonov_error_bound

# Get the logger
logger = logging.getLogger(__name__)

# Columns of an L-curve table
SWEEP_COLUMNS = ["alpha", "error_w2", "noise_term", "reg_term", "bound"]


# Regularization sweep against a known truth
def tikhonov_sweep(
    forward_map: LinearForwardMap,
    truth: ParticleMeasure | GaussianMeasure,
    noisy: ParticleMeasure | GaussianMeasure,
    alphas: Sequence[float],
) -> pd.DataFrame:
    """Solve the W2-W2 problem for each alpha and compare with ``A^+ # truth``.

    Args:
        forward_map (LinearForwardMap): Full column rank map.
        truth (ParticleMeasure | GaussianMeasure): True data.
        noisy (ParticleMeasure | GaussianMeasure): Observed data, same carrier.
        alphas (Sequence[float]): Positive regularization weights.

    Returns:
        pd.DataFrame: One row per alpha with columns ``SWEEP_COLUMNS``.

    Raises:
        ValueError: If an alpha is not positive.
    """

    # Reference reconstruction and data statistics
    reference = direct_invert(forward_map, truth)
    noise = float(wasserstein_distance(truth, noisy)["value"])
    moment = second_moment(truth)
    logger.info("Tikhonov sweep over %d weights, data noise %.6g", len(alphas), noise)

    # One row per weight
    rows = []
    for alpha in alphas:
        bound = tikhonov_error_bound(forward_map, float(alpha), noise, moment)
        solution = solve_w2_tikhonov(forward_map, noisy, float(alpha)).solution
        rows.append(
            {
                "alpha": float(alpha),
                "error_w2": float(wasserstein_distance(solution, reference)["value"]),
                "noise_term": bound.noise_term,
                "reg_term": bound.reg_term,
                "bound": bound.total,
            },
        )

    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
