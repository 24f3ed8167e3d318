# Standard library imports
import logging
from collections.abc import Callable
from dataclasses import dataclass

# Third-party imports
import numpy as np
import ot
from numpy.typing import NDArray
from scipy.interpolate import RegularGridInterpolator

# Local application imports
from apps.common.exceptions import (
    BandwidthRequiredError,
    DimensionMismatchError,
    NonFiniteVelocityError,
    SizeCapError,
    UnsupportedCarrierError,
)
from apps.common.utils import get_setting
from apps.divergences.services import cost_matrix
from apps.divergences.types import FDivergenceName
from apps.flow.services.coordinates import flow_basis, reduced_gaussian
from apps.flow.services.grid import floored_log
from apps.flow.types import FlowConfig, FlowObjective, FlowScheme, StateDensity
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.services import fit_gaussian, kde_log_density, kde_score
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure

# Get the logger
logger = logging.getLogger(__name__)

# Vector field on an (N, k) array of points
PointField = Callable[[NDArray[np.float64]], NDArray[np.float64]]


# Log density and score of a law in flow coordinates
@dataclass(frozen=True)
class DensityField:
    """Callables evaluating a density in flow coordinates.

    Attributes:
        log_density (PointField): Log density, shape (N,).
        score (PointField): Gradient of the log density, shape (N, k).
    """

    log_density: PointField
    score: PointField


# Coordinates of a particle run
def particle_basis(forward_map: ForwardMap, target: Measure) -> NDArray[np.float64]:
    """Return the columns U of the flow coordinates ``z = U^T G(u)``.

    Grid targets fix the coordinates: data coordinates for grids of the data
    dimension, ``Col(A)`` coordinates for grids of the rank dimension.

    Args:
        forward_map (ForwardMap): The forward map.
        target (Measure): The target.

    Returns:
        NDArray[np.float64]: Orthonormal columns (n_outputs, k).

    Raises:
        DimensionMismatchError: If a grid target fits neither coordinate system.
    """

    basis = flow_basis(forward_map)
    if not isinstance(target, GridMeasure) or not isinstance(forward_map, LinearForwardMap):
        return basis
    if target.dim == forward_map.n_outputs == forward_map.rank:
        return np.eye(forward_map.n_outputs)
    if target.dim == basis.shape[1]:
        return basis
    raise DimensionMismatchError(expected=basis.shape[1], got=target.dim)


# Target density in flow coordinates
def target_field(cfg: FlowConfig, basis: NDArray[np.float64]) -> DensityField:
    """Return the target log density and score in flow coordinates.

    Gaussian targets are restricted to ``Col(A)`` analytically. Grid targets are
    interpolated linearly. Particle targets need ``kde_ratio`` and a bandwidth.

    Args:
        cfg (FlowConfig): Flow settings.
        basis (NDArray[np.float64]): Columns of the flow coordinates.

    Returns:
        DensityField: The target field.

    Raises:
        UnsupportedCarrierError: For particle targets without ``kde_ratio``.
        BandwidthRequiredError: For kernel estimates without a bandwidth.
    """

    target = cfg.target

    # Analytic restriction of a Gaussian
    if isinstance(target, GaussianMeasure):
        restricted = reduced_gaussian(cfg.forward_map, target, conditional=True)
        return DensityField(restricted.log_density, restricted.score)

    # Linear interpolation of a grid and of its log gradient
    if isinstance(target, GridMeasure):
        log_grid = floored_log(target.density)
        gradients = [np.gradient(log_grid, width, axis=axis) for axis, width in enumerate(target.widths)]

        def interpolant(values: NDArray[np.float64]) -> RegularGridInterpolator:
            return RegularGridInterpolator(target.axes, values, bounds_error=False, fill_value=None)

        log_interp = interpolant(log_grid)
        grad_interps = [interpolant(gradient) for gradient in gradients]
        return DensityField(
            log_density=log_interp,
            score=lambda z: np.stack([interp(z) for interp in grad_interps], axis=1),
        )

    # Kernel estimate of target atoms, behind the explicit flag
    if not cfg.kde_ratio:
        raise UnsupportedCarrierError("Particle targets need kde_ratio enabled.")
    if cfg.bandwidth is None:
        raise BandwidthRequiredError()
    return DensityField(
        log_density=lambda z: kde_log_density(target, z @ basis.T, cfg.bandwidth),
        score=lambda z: kde_score(target, z @ basis.T, cfg.bandwidth) @ basis,
    )


# Quasi-random atoms of the Wasserstein objective
def wasserstein_target_atoms(cfg: FlowConfig) -> ParticleMeasure:
    """Return the data-space atoms the Wasserstein flow is matched to.

    Args:
        cfg (FlowConfig): Flow settings.

    Returns:
        ParticleMeasure: Scrambled Sobol samples of a Gaussian, cell centres of a
            grid, or the target atoms themselves.
    """

    target = cfg.target
    if isinstance(target, GaussianMeasure):
        return ParticleMeasure.uniform(target.quasi_sample(cfg.target_samples, cfg.seed))
    if isinstance(target, GridMeasure):
        keep = target.masses > 0
        masses = target.masses[keep]
        return ParticleMeasure(target.points[keep], masses / masses.sum())
    return target


# Particle dynamics of one flow configuration
class ParticleDynamics:
    """Velocity field and integrator of a particle flow.

    The data law ``G # rho_u`` is handled in flow coordinates ``z = U^T G(u)``.
    For f-divergence energies an atom moves with
    ``v(u) = -J_z(u)^T f''(r) r (score_state - score_target)`` where
    ``r = rho_z / target`` and ``J_z = U^T J_G``. For the Wasserstein energy
    atoms move with ``v(u) = -2 J_G(u)^T (G(u) - T(G(u)))``, T the barycentric
    projection of the optimal matching to quasi-random target atoms.

    Attributes:
        cfg (FlowConfig): Flow settings.
        basis (NDArray[np.float64]): Columns of the flow coordinates.
    """

    def __init__(self, cfg: FlowConfig) -> None:
        """Prepare the target side of the velocity.

        Args:
            cfg (FlowConfig): Flow settings.
        """

        self.cfg = cfg
        self.basis = particle_basis(cfg.forward_map, cfg.target)
        self._target_field: DensityField | None = None
        self._target_atoms: ParticleMeasure | None = None
        if cfg.objective is FlowObjective.F_DIVERGENCE:
            self._target_field = target_field(cfg, self.basis)
        else:
            self._target_atoms = wasserstein_target_atoms(cfg)

    # Flow coordinates of the pushed atoms
    def coordinates(self, points: NDArray[np.float64]) -> NDArray[np.float64]:
        """Return ``z = U^T G(u)`` for each atom.

        Args:
            points (NDArray[np.float64]): Parameter atoms (N, n).

        Returns:
            NDArray[np.float64]: Flow coordinates (N, k).
        """

        return np.atleast_2d(self.cfg.forward_map(points)) @ self.basis

    # Data-space law of a state
    def snapshot(self, state: ParticleMeasure) -> ParticleMeasure:
        """Return the pushforward of ``state`` in flow coordinates.

        Args:
            state (ParticleMeasure): Parameter-space state.

        Returns:
            ParticleMeasure: Weighted atoms ``z_i``.
        """

        return ParticleMeasure(self.coordinates(state.points), state.weights)

    # Target in flow coordinates for diagnostics
    def diagnostic_target(self) -> Measure:
        """Return the law the snapshots are compared with.

        Returns:
            Measure: Grid targets as given, other targets restricted to ``Col(A)``.
        """

        target = self.cfg.target
        if isinstance(target, GridMeasure):
            return target
        if isinstance(target, ParticleMeasure):
            target = fit_gaussian(target)
        return reduced_gaussian(self.cfg.forward_map, target, conditional=True)

    # Jacobians at the atoms
    def _jacobians(self, points: NDArray[np.float64]) -> NDArray[np.float64]:
        forward_map = self.cfg.forward_map
        if isinstance(forward_map, LinearForwardMap):
            return np.broadcast_to(forward_map.matrix, (points.shape[0], *forward_map.matrix.shape))
        return np.stack([forward_map.jacobian_at(point) for point in points])

    # Density of the pushed atoms
    def _state_field(self, coordinates: NDArray[np.float64], weights: NDArray[np.float64]) -> DensityField:
        cloud = ParticleMeasure(coordinates, weights)
        if self.cfg.state_density is StateDensity.GAUSSIAN_FIT:
            fitted = fit_gaussian(cloud)
            return DensityField(fitted.log_density, fitted.score)
        if self.cfg.bandwidth is None:
            raise BandwidthRequiredError()
        bandwidth = self.cfg.bandwidth
        return DensityField(
            log_density=lambda z: kde_log_density(cloud, z, bandwidth),
            score=lambda z: kde_score(cloud, z, bandwidth),
        )

    # Data-space drive of the f-divergence energy
    def _divergence_drive(self, coordinates: NDArray[np.float64], weights: NDArray[np.float64]) -> NDArray[np.float64]:
        state = self._state_field(coordinates, weights)
        gap = state.score(coordinates) - self._target_field.score(coordinates)

        # f''(r) r is one for KL
        divergence = self.cfg.divergence
        if divergence.name is FDivergenceName.KL:
            return gap
        ratio = np.exp(
            np.asarray(state.log_density(coordinates)) - np.asarray(self._target_field.log_density(coordinates))
        )
        return (divergence.f_double_prime(ratio) * ratio)[:, None] * gap

    # Data-space drive of the Wasserstein energy
    def _wasserstein_drive(self, points: NDArray[np.float64], weights: NDArray[np.float64]) -> NDArray[np.float64]:
        atoms = self._target_atoms
        cap = int(get_setting("STOCHINVERSE_OT_SIZE_CAP", 1_000_000))
        if points.shape[0] * atoms.size > cap:
            raise SizeCapError(entries=points.shape[0] * atoms.size, cap=cap)

        # Optimal matching and its barycentric projection
        images = np.atleast_2d(self.cfg.forward_map(points))
        costs = cost_matrix(images, atoms.points, 2.0)
        plan = ot.emd(np.array(weights, dtype=float), np.array(atoms.weights, dtype=float), costs, numItermax=1_000_000)
        mass = plan.sum(axis=1)
        matched = np.divide(plan @ atoms.points, mass[:, None], out=images.copy(), where=mass[:, None] > 0)
        return 2.0 * (images - matched)

    # Velocity of every atom
    def velocity(self, points: NDArray[np.float64], weights: NDArray[np.float64]) -> NDArray[np.float64]:
        """Return the velocity of each atom.

        Args:
            points (NDArray[np.float64]): Parameter atoms (N, n).
            weights (NDArray[np.float64]): Atom weights (N,).

        Returns:
            NDArray[np.float64]: Velocities (N, n).

        Raises:
            BandwidthRequiredError: For kernel densities without a bandwidth.
            NonFiniteVelocityError: If any component is not finite.
        """

        jacobians = self._jacobians(points)

        # Drive in flow or data coordinates, pulled back through the Jacobian
        if self.cfg.objective is FlowObjective.WASSERSTEIN:
            drive = self._wasserstein_drive(points, weights)
        else:
            drive = self._divergence_drive(self.coordinates(points), weights) @ self.basis.T
        velocity = -np.einsum("nk,nkj->nj", drive, jacobians)

        # Reject blown-up fields
        bad = ~np.isfinite(velocity)
        if np.any(bad):
            raise NonFiniteVelocityError(atoms=int(np.count_nonzero(np.any(bad, axis=1))))
        return velocity

    # One explicit step
    def step(self, state: ParticleMeasure) -> ParticleMeasure:
        """Advance all atoms by one Euler or RK4 step, weights unchanged.

        Args:
            state (ParticleMeasure): Parameter-space state.

        Returns:
            ParticleMeasure: The advanced state.
        """

        dt, weights, points = self.cfg.dt, state.weights, state.points

        # Explicit Euler
        if self.cfg.scheme is not FlowScheme.PARTICLE_RK4:
            return state.with_points(points + dt * self.velocity(points, weights))

        # Classical Runge-Kutta
        k1 = self.velocity(points, weights)
        k2 = self.velocity(points + 0.5 * dt * k1, weights)
        k3 = self.velocity(points + 0.5 * dt * k2, weights)
        k4 = self.velocity(points + dt * k3, weights)
        return state.with_points(points + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4))


# One step of the f-divergence particle flow
def particle_flow_step(state: ParticleMeasure, cfg: FlowConfig) -> ParticleMeasure:
    """Advance a parameter-space particle state by one step of the flow.

    Args:
        state (ParticleMeasure): Atoms in parameter space.
        cfg (FlowConfig): Flow settings with a particle scheme.

    Returns:
        ParticleMeasure: The advanced state.

    Raises:
        BandwidthRequiredError: When the pushed density has no analytic form and no bandwidth is set.
        NonFiniteVelocityError: If any velocity component is not finite.
    """

    if not cfg.scheme.is_particle:
        raise UnsupportedCarrierError("Particle steps need a particle scheme.")
    return ParticleDynamics(cfg).step(state)


# One step of the Wasserstein-objective particle flow
def wasserstein_flow_step(state: ParticleMeasure, cfg: FlowConfig) -> ParticleMeasure:
    """Relax atoms towards their optimal matches among target atoms mapped back.

    Args:
        state (ParticleMeasure): Atoms in parameter space.
        cfg (FlowConfig): Flow settings with the Wasserstein objective.

    Returns:
        ParticleMeasure: The advanced state.
    """

    if cfg.objective is not FlowObjective.WASSERSTEIN:
        raise ValueError("Wasserstein steps need the Wasserstein objective.")
    return particle_flow_step(state, cfg)
