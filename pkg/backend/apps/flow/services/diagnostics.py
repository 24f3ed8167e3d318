# Standard library imports
import logging
import math

# Third-party imports
import numpy as np
from numpy.typing import ArrayLike
from scipy import stats

# Local application imports
from apps.common.exceptions import InvalidMeasureError, UnsupportedCarrierError
from apps.divergences.services import (
    f_divergence_grid,
    kl_gaussian,
    wasserstein_1d,
    wasserstein_gaussian,
    wasserstein_to_gaussian_1d,
)
from apps.divergences.types import FDivergenceSpec
from apps.flow.services.coordinates import flow_basis, reduced_gaussian
from apps.flow.types import DecayCertificate, DecayFit, EquilibriumClassification, FlowTrace
from apps.maps.services import mobility_lower_bound
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.services import fit_gaussian, gaussian_conditional_on_subspace, gaussian_marginal_on_subspace
from apps.measures.types import GaussianMeasure, GridMeasure, LogConcavityCertificate, Measure, ParticleMeasure

# Get the logger
logger = logging.getLogger(__name__)

# KL values at or below this are treated as converged in fits
KL_FIT_FLOOR = 1e-14

# Default relative slack of the decay certificate
DECAY_SLACK = 0.05


# Exponential rate of the KL tail
def fit_decay(times: ArrayLike, kl: ArrayLike) -> DecayFit:
    """Fit ``log KL`` against time by least squares over the final half.

    Points at or below ``KL_FIT_FLOOR`` are dropped. Fewer than two points
    left, or a single time, give an undefined fit.

    Args:
        times (ArrayLike): Record times.
        kl (ArrayLike): KL values at those times.

    Returns:
        DecayFit: Slope and R^2, undefined when nothing can be fitted.
    """

    times = np.asarray(times, dtype=float).reshape(-1)
    values = np.asarray(kl, dtype=float).reshape(-1)

    # Final half of the samples above the floor
    start = times.shape[0] // 2
    window_t, window_kl = times[start:], values[start:]
    keep = np.isfinite(window_kl) & (window_kl > KL_FIT_FLOOR)
    if np.count_nonzero(keep) < 2 or np.ptp(window_t[keep]) == 0:  # noqa: PLR2004
        return DecayFit.undefined()

    # Least squares on the log
    fit = stats.linregress(window_t[keep], np.log(window_kl[keep]))
    return DecayFit(rate=float(fit.slope), r2=float(fit.rvalue**2), samples=int(np.count_nonzero(keep)))


# Check a trace against an exponential envelope
def certify_decay(trace: FlowTrace, rate: float, slack: float = DECAY_SLACK) -> DecayCertificate:
    """Check ``KL(t) <= exp(-rate t) KL(0) (1 + slack)`` at every recorded time.

    Args:
        trace (FlowTrace): The flow trace.
        rate (float): Certified decay rate, nonnegative.
        slack (float): Relative slack.

    Returns:
        DecayCertificate: The verdict and the worst ratio to the envelope.
    """

    kl = trace.kl_to_target
    envelope = np.exp(-rate * (trace.times - trace.times[0])) * kl[0] * (1.0 + slack)

    # Ratios where the envelope is positive, zero KL meets a zero envelope
    ratios = np.divide(kl, envelope, out=np.where(kl > 0, np.inf, 0.0), where=envelope > 0)
    satisfied = bool(np.all(kl <= envelope))
    worst = float(np.max(ratios))
    if not satisfied:
        logger.warning("KL exceeds the decay envelope of rate %g, worst ratio %.4g", rate, worst)
    return DecayCertificate(rate=float(rate), slack=float(slack), worst_ratio=worst, satisfied=satisfied)


# Rate constant 2 sigma_min^2 lambda
def decay_rate_bound(
    forward_map: ForwardMap,
    target: GaussianMeasure | LogConcavityCertificate,
    probe_points: ArrayLike | None = None,
) -> float:
    """Return the certified KL decay rate ``2 b lambda``.

    ``b`` bounds the mobility from below: the smallest squared nonzero singular
    value of a linear map, or ``min lambda_min(J J^T)`` over probe points for a
    smooth map. ``lambda`` is the log-concavity constant of the target, of its
    restriction to ``Col(A)`` for Gaussian targets of linear maps.

    Args:
        forward_map (ForwardMap): The forward map.
        target (GaussianMeasure | LogConcavityCertificate): Target or its certificate.
        probe_points (ArrayLike | None): Data points probing a smooth map.

    Returns:
        float: The rate.

    Raises:
        ValueError: If a smooth map comes without probe points.
    """

    # Lower bound on the mobility
    if isinstance(forward_map, LinearForwardMap):
        mobility = float(forward_map.sigma[forward_map.rank - 1] ** 2)
    elif probe_points is None:
        raise ValueError("Smooth maps need probe points to bound the mobility.")
    else:
        mobility = mobility_lower_bound(forward_map, probe_points)

    # Log-concavity of the target
    if isinstance(target, LogConcavityCertificate):
        constant = target.constant
    elif isinstance(forward_map, LinearForwardMap):
        constant = reduced_gaussian(forward_map, target, conditional=True).log_concavity().constant
    else:
        constant = target.log_concavity().constant

    return 2.0 * mobility * constant


# Flatness of rho / target on the effective support
def equilibrium_flatness(state: GridMeasure, target: GridMeasure, threshold: float = 1e-4) -> float:
    """Return the coefficient of variation of ``state / target``.

    Only cells where the state exceeds ``threshold`` times its maximum and the
    target is positive count.

    Args:
        state (GridMeasure): Final density.
        target (GridMeasure): Target density on the same grid.
        threshold (float): Relative support threshold.

    Returns:
        float: Standard deviation over mean of the ratio.
    """

    state.require_same_grid(target)
    support = (state.density > threshold * state.density.max()) & (target.density > 0)
    ratio = state.density[support] / target.density[support]
    return float(np.std(ratio) / np.mean(ratio))


# W2 from a snapshot to a Gaussian
def _w2_to_gaussian(snapshot: Measure, gaussian: GaussianMeasure) -> float:
    if isinstance(snapshot, GaussianMeasure):
        return wasserstein_gaussian(snapshot, gaussian)
    if snapshot.dim == 1:
        return wasserstein_to_gaussian_1d(snapshot, gaussian)
    return wasserstein_gaussian(fit_gaussian(snapshot), gaussian)


# KL and W2 of a snapshot to the target in the same coordinates
def snapshot_divergences(snapshot: Measure, target: Measure) -> tuple[float, float]:
    """Return ``(KL, W2)`` from a snapshot to the target.

    Grid snapshots use the grid divergences. Particle snapshots are compared
    through their moment-matched Gaussian, or binned onto a grid target. W2 is
    nan where no estimate applies.

    Args:
        snapshot (Measure): Data-space law at one time.
        target (Measure): Target in the same coordinates.

    Returns:
        tuple[float, float]: KL and W2.

    Raises:
        UnsupportedCarrierError: For carrier pairs without an estimate.
    """

    # Grids against grids
    if isinstance(snapshot, GridMeasure) and isinstance(target, GridMeasure):
        kl = f_divergence_grid(FDivergenceSpec.kl(), snapshot, target)
        w2 = wasserstein_1d(snapshot, target) if snapshot.dim == 1 else math.nan
        return kl, w2

    # Particles binned onto a grid target
    if isinstance(snapshot, ParticleMeasure) and isinstance(target, GridMeasure):
        edges = [
            np.linspace(low, high, count + 1)
            for low, high, count in zip(target.lower, target.upper, target.shape, strict=True)
        ]
        counts, _ = np.histogramdd(snapshot.points, bins=edges, weights=snapshot.weights)
        if counts.sum() <= 0:
            return math.inf, math.nan
        binned = target.with_density(counts / (counts.sum() * target.cell_volume))
        kl = f_divergence_grid(FDivergenceSpec.kl(), binned, target)
        w2 = wasserstein_1d(snapshot, target) if snapshot.dim == 1 else math.nan
        return kl, w2

    # Gaussian references
    reference = fit_gaussian(target) if isinstance(target, ParticleMeasure) else target
    if not isinstance(reference, GaussianMeasure):
        raise UnsupportedCarrierError("No divergence estimate between these carriers.")
    if isinstance(snapshot, GaussianMeasure):
        return kl_gaussian(snapshot, reference), wasserstein_gaussian(snapshot, reference)
    try:
        kl = kl_gaussian(fit_gaussian(snapshot), reference)
    except InvalidMeasureError:
        kl = math.inf
    return kl, _w2_to_gaussian(snapshot, reference)


# Conditional or marginal steady state
def classify_equilibrium(
    trace: FlowTrace,
    forward_map: LinearForwardMap,
    target: GaussianMeasure,
) -> EquilibriumClassification:
    """Compare the final snapshot with the conditional and the marginal of the target.

    The conditional restricts the target to ``Col(A)`` and renormalizes it, the
    marginal projects it. One-dimensional snapshots use quantile W2, others the
    closed form between Gaussians after a moment fit.

    Args:
        trace (FlowTrace): Trace with a final snapshot.
        forward_map (LinearForwardMap): The linear map.
        target (GaussianMeasure): Data-space target.

    Returns:
        EquilibriumClassification: Label and both distances.
    """

    final = trace.final_snapshot
    basis = flow_basis(forward_map) if trace.reduced else np.eye(final.dim)

    # Oracles in the snapshot coordinates
    conditional = gaussian_conditional_on_subspace(target, basis)
    marginal = gaussian_marginal_on_subspace(target, basis)
    classification = EquilibriumClassification.from_distances(
        _w2_to_gaussian(final, conditional),
        _w2_to_gaussian(final, marginal),
    )
    logger.info(
        "Equilibrium %s, W2 to conditional %.4g, to marginal %.4g",
        classification.label,
        classification.conditional_distance,
        classification.marginal_distance,
    )
    return classification
