# Local application imports
from apps.flow.services.coordinates import flow_basis, reduced_gaussian, reduced_mobility
from apps.flow.services.diagnostics import (
    DECAY_SLACK,
    certify_decay,
    classify_equilibrium,
    decay_rate_bound,
    equilibrium_flatness,
    fit_decay,
    snapshot_divergences,
)
from apps.flow.services.gaussian import gaussian_flow_ode, record_steps
from apps.flow.services.grid import advance_density, flux_divergence, grid_fokker_planck_step
from apps.flow.services.particles import (
    ParticleDynamics,
    particle_basis,
    particle_flow_step,
    target_field,
    wasserstein_flow_step,
    wasserstein_target_atoms,
)
from apps.flow.services.report import snapshot_indices, summarize_flow, write_flow_outputs
from apps.flow.services.runner import TraceRecorder, run_flow

# Exports
__all__ = [
    "DECAY_SLACK",
    "ParticleDynamics",
    "TraceRecorder",
    "advance_density",
    "certify_decay",
    "classify_equilibrium",
    "decay_rate_bound",
    "equilibrium_flatness",
    "fit_decay",
    "flow_basis",
    "flux_divergence",
    "gaussian_flow_ode",
    "grid_fokker_planck_step",
    "particle_basis",
    "particle_flow_step",
    "record_steps",
    "reduced_gaussian",
    "reduced_mobility",
    "run_flow",
    "snapshot_divergences",
    "snapshot_indices",
    "summarize_flow",
    "target_field",
    "wasserstein_flow_step",
    "wasserstein_target_atoms",
    "write_flow_outputs",
]
