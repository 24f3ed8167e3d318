# Standard library imports
import logging

# Third-party imports
import numpy as np

# Local application imports
from apps.common.exceptions import UnsupportedCarrierError
from apps.common.utils import get_setting
from apps.flow.services.diagnostics import fit_decay, snapshot_divergences
from apps.flow.services.gaussian import gaussian_flow_ode, record_steps
from apps.flow.services.grid import advance_density, floored_log
from apps.flow.services.particles import ParticleDynamics
from apps.flow.types import FlowConfig, FlowObjective, FlowScheme, FlowTrace
from apps.flow.utils import grid_mobility
from apps.maps.types import LinearForwardMap
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure

# Get the logger
logger = logging.getLogger(__name__)


# Accumulates the recorded diagnostics of a run
class TraceRecorder:
    """Collects times, divergences and snapshots into a ``FlowTrace``.

    Attributes:
        target (Measure): Target in the snapshot coordinates.
        reduced (bool): Whether snapshots are in ``Col(A)`` coordinates.
    """

    def __init__(self, target: Measure, *, reduced: bool) -> None:
        self.target = target
        self.reduced = reduced
        self._times: list[float] = []
        self._kl: list[float] = []
        self._w2: list[float] = []
        self._snapshots: list[Measure] = []

    # Record one time
    def record(self, time: float, snapshot: Measure) -> None:
        """Append the divergences of ``snapshot`` at ``time``.

        Args:
            time (float): Flow time.
            snapshot (Measure): Data-space law in the recorder's coordinates.
        """

        kl, w2 = snapshot_divergences(snapshot, self.target)
        self._times.append(time)
        self._kl.append(kl)
        self._w2.append(w2)
        self._snapshots.append(snapshot)

    # Finish the trace
    def trace(self, final_state: Measure, clamped_mass: float = 0.0) -> FlowTrace:
        """Return the recorded trace with its decay fit.

        Args:
            final_state (Measure): Final state of the flow variable.
            clamped_mass (float): Total mass removed by clamping.

        Returns:
            FlowTrace: The trace.
        """

        limit = float(get_setting("STOCHINVERSE_CLAMP_MASS_LIMIT", 1e-6))
        times, kl = np.array(self._times), np.array(self._kl)
        valid = clamped_mass <= limit and bool(np.all(np.isfinite(kl)))
        if not valid:
            logger.warning("Flow trace marked invalid, clamped mass %.3e, final KL %.4g", clamped_mass, kl[-1])
        return FlowTrace(
            times=times,
            kl_to_target=kl,
            w2_to_target=np.array(self._w2),
            snapshots=tuple(self._snapshots),
            decay_fit=fit_decay(times, kl),
            reduced=self.reduced,
            clamped_mass=clamped_mass,
            valid=valid,
            final_state=final_state,
        )


# Grid scheme
def _run_grid(init: GridMeasure, cfg: FlowConfig) -> FlowTrace:
    target = cfg.target
    init.require_same_grid(target)

    # Mobility and log target are fixed along the run
    mobility = grid_mobility(cfg.forward_map, target, reduced=cfg.reduced)
    log_target = floored_log(target.density)
    reduced = isinstance(cfg.forward_map, LinearForwardMap) and (cfg.reduced or init.dim < cfg.forward_map.n_outputs)
    recorder = TraceRecorder(target, reduced=reduced)

    # March in time
    steps = set(record_steps(cfg.step_count, cfg.record_every).tolist())
    density, clamped_total = np.array(init.density), 0.0
    recorder.record(0.0, init)
    state = init
    for step in range(1, cfg.step_count + 1):
        density, clamped = advance_density(density, log_target, mobility, target.widths, cfg.dt)
        clamped_total += clamped
        if step in steps:
            state = target.with_density(density)
            recorder.record(step * cfg.dt, state)
    return recorder.trace(state, clamped_total)


# Particle schemes
def _run_particles(init: ParticleMeasure, cfg: FlowConfig) -> FlowTrace:
    dynamics = ParticleDynamics(cfg)
    reduced = isinstance(cfg.forward_map, LinearForwardMap) and not np.array_equal(
        dynamics.basis, np.eye(cfg.forward_map.n_outputs)
    )
    recorder = TraceRecorder(dynamics.diagnostic_target(), reduced=reduced)

    # March in time
    steps = set(record_steps(cfg.step_count, cfg.record_every).tolist())
    state = init
    recorder.record(0.0, dynamics.snapshot(state))
    for step in range(1, cfg.step_count + 1):
        state = dynamics.step(state)
        if step in steps:
            recorder.record(step * cfg.dt, dynamics.snapshot(state))
    return recorder.trace(state)


# Integrate a flow to its final time
def run_flow(init: Measure, cfg: FlowConfig) -> FlowTrace:
    """Integrate the configured flow from ``init`` to ``cfg.t_max``.

    Particle schemes start from parameter-space atoms, the grid scheme from a
    data-space density on the target grid, the Gaussian scheme from a
    data-space Gaussian. Diagnostics are recorded every ``record_every`` steps
    and at the final step. A run that does not converge is not an error.

    Args:
        init (Measure): Initial state.
        cfg (FlowConfig): Flow settings.

    Returns:
        FlowTrace: The trace, its decay fit over the final half and its validity.

    Raises:
        UnsupportedCarrierError: If the initial carrier does not match the scheme.
    """

    logger.info("Running %s flow to t=%g with step %g", cfg.scheme, cfg.t_max, cfg.dt)

    # Dispatch on the scheme
    if cfg.scheme is FlowScheme.GAUSSIAN_ODE:
        if not isinstance(init, GaussianMeasure):
            raise UnsupportedCarrierError("The Gaussian scheme starts from a Gaussian.")
        trace = gaussian_flow_ode(init, cfg.forward_map, cfg.target, cfg.dt, cfg.t_max, record_every=cfg.record_every)
    elif cfg.scheme is FlowScheme.GRID_FOKKER_PLANCK:
        if not isinstance(init, GridMeasure):
            raise UnsupportedCarrierError("The grid scheme starts from a grid density.")
        trace = _run_grid(init, cfg)
    else:
        if not isinstance(init, ParticleMeasure):
            raise UnsupportedCarrierError("Particle schemes start from parameter atoms.")
        trace = _run_particles(init, cfg)

    # Summary
    fit = trace.decay_fit
    logger.info(
        "Flow finished with KL %.4g, decay rate %s",
        trace.kl_to_target[-1],
        f"{fit.rate:.4g}" if fit.defined else "undefined",
    )
    if cfg.objective is FlowObjective.F_DIVERGENCE and np.any(np.diff(trace.kl_to_target) > 1e-3):  # noqa: PLR2004
        logger.warning("KL increased between records of a %s flow", cfg.scheme)
    return trace
