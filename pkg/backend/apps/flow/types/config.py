# Standard library imports
import math
from dataclasses import dataclass
from enum import StrEnum

# Local application imports
from apps.common.exceptions import CFLViolationError, NonConvexGeneratorError, UnsupportedCarrierError
from apps.divergences.types import FDivergenceSpec
from apps.flow.utils import cfl_limit, grid_mobility
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.types import GaussianMeasure, GridMeasure, Measure


# Time integration schemes
class FlowScheme(StrEnum):
    """Discretization of a gradient flow."""

    PARTICLE_EULER = "particle_euler"
    PARTICLE_RK4 = "particle_rk4"
    GRID_FOKKER_PLANCK = "grid_fokker_planck"
    GAUSSIAN_ODE = "gaussian_ode"

    @property
    def is_particle(self) -> bool:
        """Whether the scheme moves weighted atoms."""
        return self in {FlowScheme.PARTICLE_EULER, FlowScheme.PARTICLE_RK4}


# Energies driving the flow
class FlowObjective(StrEnum):
    """Energy whose steepest descent is followed."""

    F_DIVERGENCE = "f_divergence"
    WASSERSTEIN = "wasserstein"


# Density estimate of the pushed particles
class StateDensity(StrEnum):
    """How particle flows evaluate the density of the current data law."""

    KDE = "kde"
    GAUSSIAN_FIT = "gaussian_fit"


# Settings of one flow run
@dataclass(frozen=True, eq=False)
class FlowConfig:
    """Gradient flow of ``D(G # rho_u || target)`` in the Wasserstein geometry.

    Grid schemes are checked against the CFL limit here, on the target grid.

    Attributes:
        divergence (FDivergenceSpec): Strictly convex generator of the energy.
        forward_map (ForwardMap): The forward map G.
        target (Measure): Data measure the flow is driven towards.
        dt (float): Time step, positive.
        t_max (float): Final time, zero or at least ``dt``.
        scheme (FlowScheme): Discretization.
        bandwidth (float | None): Kernel bandwidth for particle densities.
        record_every (int): Steps between recorded diagnostics.
        objective (FlowObjective): Energy of the flow.
        state_density (StateDensity): Density estimate of the pushed particles.
        kde_ratio (bool): Allow particle targets through a kernel estimate.
        target_samples (int): Quasi-random target atoms of the Wasserstein objective.
        reduced (bool): Grid states live in ``Col(A)`` coordinates.
        seed (int): Seed of the target samples.
    """

    divergence: FDivergenceSpec
    forward_map: ForwardMap
    target: Measure
    dt: float
    t_max: float
    scheme: FlowScheme = FlowScheme.PARTICLE_EULER
    bandwidth: float | None = None
    record_every: int = 1
    objective: FlowObjective = FlowObjective.F_DIVERGENCE
    state_density: StateDensity = StateDensity.KDE
    kde_ratio: bool = False
    target_samples: int = 512
    reduced: bool = False
    seed: int = 0

    # Validate the run settings
    def __post_init__(self) -> None:
        object.__setattr__(self, "scheme", FlowScheme(self.scheme))
        object.__setattr__(self, "objective", FlowObjective(self.objective))
        object.__setattr__(self, "state_density", StateDensity(self.state_density))

        # Time axis
        if not math.isfinite(self.dt) or self.dt <= 0:
            raise ValueError("dt must be positive and finite.")
        if not math.isfinite(self.t_max) or self.t_max < 0 or 0 < self.t_max < self.dt:
            raise ValueError("t_max must be zero or at least dt.")
        if self.record_every < 1:
            raise ValueError("record_every must be at least one.")
        if self.bandwidth is not None and not (math.isfinite(self.bandwidth) and self.bandwidth > 0):
            raise ValueError("bandwidth must be positive.")
        if self.target_samples < 1:
            raise ValueError("target_samples must be positive.")

        # Energy
        if self.objective is FlowObjective.F_DIVERGENCE and not self.divergence.strictly_convex:
            raise NonConvexGeneratorError(
                "Gradient flows need a strictly convex generator.", name=str(self.divergence.name)
            )
        if self.objective is FlowObjective.WASSERSTEIN and not self.scheme.is_particle:
            raise ValueError("The Wasserstein objective is integrated with particle schemes only.")

        # Carriers of the closed Gaussian evolution
        if self.scheme is FlowScheme.GAUSSIAN_ODE and not (
            isinstance(self.forward_map, LinearForwardMap) and isinstance(self.target, GaussianMeasure)
        ):
            raise UnsupportedCarrierError("The Gaussian scheme needs a linear map and a Gaussian target.")

        # Grid scheme, explicit step must respect the CFL limit
        if self.scheme is FlowScheme.GRID_FOKKER_PLANCK:
            if not isinstance(self.target, GridMeasure):
                raise UnsupportedCarrierError("The grid scheme needs a grid target.")
            limit = cfl_limit(grid_mobility(self.forward_map, self.target, reduced=self.reduced), self.target.widths)
            if self.dt > limit:
                raise CFLViolationError(dt=self.dt, limit=limit)

    @property
    def step_count(self) -> int:
        """Number of steps to reach ``t_max``."""
        return int(round(self.t_max / self.dt))
