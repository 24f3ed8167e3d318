# Standard library imports
import logging
import warnings

# Third-party imports
import numpy as np
from numpy.typing import NDArray
from scipy.integrate import solve_ivp

# Local application imports
from apps.common.exceptions import NumericalError, StiffnessWarning
from apps.divergences.services import kl_gaussian, wasserstein_gaussian
from apps.flow.services.coordinates import reduced_gaussian, reduced_mobility
from apps.flow.services.diagnostics import fit_decay
from apps.flow.types import FlowTrace
from apps.maps.types import LinearForwardMap
from apps.measures.types import GaussianMeasure

# Get the logger
logger = logging.getLogger(__name__)

# Largest step times rate before the run is flagged stiff
STIFFNESS_LIMIT = 0.1


# Recorded step indices
def record_steps(step_count: int, record_every: int) -> NDArray[np.int64]:
    """Return the steps at which a run records diagnostics.

    Args:
        step_count (int): Total number of steps.
        record_every (int): Steps between records.

    Returns:
        NDArray[np.int64]: Increasing steps, starting at zero and ending at ``step_count``.
    """

    steps = np.arange(0, step_count + 1, record_every)
    if steps[-1] != step_count:
        steps = np.append(steps, step_count)
    return steps


# Closed Gaussian evolution of the linear-mobility flow
def gaussian_flow_ode(
    init: GaussianMeasure,
    forward_map: LinearForwardMap,
    target: GaussianMeasure,
    dt: float,
    t_max: float,
    *,
    record_every: int = 1,
) -> FlowTrace:
    """Integrate the mean and covariance of the reduced flow.

    In ``Col(A)`` coordinates the flow has mobility ``B = Sigma^2`` and keeps
    Gaussians Gaussian. With target ``N(m_d, S_d)`` the moments follow
    ``dm/dt = -B S_d^{-1} (m - m_d)`` and
    ``dC/dt = 2B - B S_d^{-1} C - C S_d^{-1} B``. The initial law is projected
    onto ``Col(A)``, the target restricted to it.

    Args:
        init (GaussianMeasure): Initial data law.
        forward_map (LinearForwardMap): The linear map.
        target (GaussianMeasure): Target data law.
        dt (float): Spacing of the recorded times.
        t_max (float): Final time.
        record_every (int): Steps between records.

    Returns:
        FlowTrace: Trace with Gaussian snapshots in ``Col(A)`` coordinates.

    Warns:
        StiffnessWarning: If ``dt`` times the fastest decay rate exceeds 0.1.
    """

    start = reduced_gaussian(forward_map, init, conditional=False)
    goal = reduced_gaussian(forward_map, target, conditional=True)
    mobility = reduced_mobility(forward_map)
    drift = mobility @ goal.precision
    dim = goal.dim

    # Fastest rate, that of the covariance
    rate = 2.0 * float(np.max(np.abs(np.linalg.eigvals(drift))))
    if dt * rate > STIFFNESS_LIMIT:
        logger.warning("Gaussian flow step %g is stiff against rate %g", dt, rate)
        warnings.warn(f"Step {dt:g} times rate {rate:g} exceeds {STIFFNESS_LIMIT:g}.", StiffnessWarning, stacklevel=2)

    # Moment equations on the stacked state
    def moments(_: float, state: NDArray[np.float64]) -> NDArray[np.float64]:
        mean, cov = state[:dim], state[dim:].reshape(dim, dim)
        mean_rate = -drift @ (mean - goal.mean)
        cov_rate = 2.0 * mobility - drift @ cov - cov @ drift.T
        return np.concatenate([mean_rate, cov_rate.reshape(-1)])

    # Integrate to the recorded times
    times = record_steps(int(round(t_max / dt)), record_every) * dt
    initial = np.concatenate([start.mean, start.cov.reshape(-1)])
    if times.shape[0] > 1:
        solution = solve_ivp(moments, (0.0, times[-1]), initial, t_eval=times, rtol=1e-10, atol=1e-12, max_step=dt)
        if not solution.success:
            raise NumericalError(f"Moment integration failed: {solution.message}")
        states = solution.y.T
    else:
        states = initial[None, :]

    # Snapshots and divergences
    snapshots = []
    for state in states:
        cov = state[dim:].reshape(dim, dim)
        snapshots.append(GaussianMeasure(state[:dim], 0.5 * (cov + cov.T)))
    kl = np.array([kl_gaussian(snapshot, goal) for snapshot in snapshots])
    w2 = np.array([wasserstein_gaussian(snapshot, goal) for snapshot in snapshots])

    return FlowTrace(
        times=times,
        kl_to_target=kl,
        w2_to_target=w2,
        snapshots=tuple(snapshots),
        decay_fit=fit_decay(times, kl),
        reduced=True,
        final_state=snapshots[-1],
    )
