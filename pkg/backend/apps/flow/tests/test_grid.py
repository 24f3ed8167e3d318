# Standard library imports
import logging

# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import CFLViolationError, GridMismatchError
from apps.divergences.types import FDivergenceSpec
from apps.flow.services import (
    advance_density,
    equilibrium_flatness,
    flux_divergence,
    grid_fokker_planck_step,
    reduced_gaussian,
    run_flow,
)
from apps.flow.types import FlowConfig, FlowScheme
from apps.flow.utils import cfl_limit, grid_mobility
from apps.maps.types import LinearForwardMap
from apps.measures.services import discretize_gaussian
from apps.measures.types import GaussianMeasure

LINE = {"lower": [-8.0], "upper": [8.0]}


def grid_config(forward_map, target, dt, t_max, **kwargs):
    return FlowConfig(
        divergence=FDivergenceSpec.kl(),
        forward_map=forward_map,
        target=target,
        dt=dt,
        t_max=t_max,
        scheme=FlowScheme.GRID_FOKKER_PLANCK,
        **kwargs,
    )


def test_flux_conserves_mass():
    rng = np.random.default_rng(3)
    target = discretize_gaussian(GaussianMeasure([0.0, 0.0], [[1.0, 0.3], [0.3, 1.0]]), [-4, -4], [4, 4], (24, 20))
    density = rng.uniform(0.1, 1.0, size=target.shape)
    mobility = grid_mobility(LinearForwardMap([[1.0, 0.5], [0.0, 1.0]]), target)
    divergence = flux_divergence(density, np.log(target.density), mobility, target.widths)
    assert abs(divergence.sum()) * target.cell_volume < 1e-10


def test_target_is_a_fixed_point():
    target = discretize_gaussian(GaussianMeasure([0.5], [[2.0]]), shape=(128,), **LINE)
    mobility = grid_mobility(LinearForwardMap([[1.5]]), target)
    density, clamped = advance_density(np.array(target.density), np.log(target.density), mobility, target.widths, 1e-3)
    np.testing.assert_allclose(density, target.density, rtol=1e-10)
    assert clamped == 0.0


def test_mobility_of_reduced_grids():
    forward_map = LinearForwardMap([[1.0], [0.0]])
    grid = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(16,), **LINE)
    mobility = grid_mobility(forward_map, grid)
    assert mobility.shape == (16, 1, 1)
    np.testing.assert_allclose(mobility[..., 0, 0], 1.0)


def test_step_rejects_large_steps():
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(512,), **LINE)
    limit = cfl_limit(grid_mobility(LinearForwardMap([[1.0]]), target), target.widths)
    assert limit == pytest.approx(0.25 * (16.0 / 512) ** 2)
    with pytest.raises(CFLViolationError):
        grid_fokker_planck_step(target, LinearForwardMap([[1.0]]), target, 2.0 * limit)
    with pytest.raises(CFLViolationError):
        grid_config(LinearForwardMap([[1.0]]), target, 2.0 * limit, 1.0)


def test_step_rejects_other_grids():
    state = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(64,), **LINE)
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(65,), **LINE)
    with pytest.raises(GridMismatchError):
        grid_fokker_planck_step(state, LinearForwardMap([[1.0]]), target, 1e-4)


def test_single_step_moves_towards_the_target():
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(128,), **LINE)
    state = discretize_gaussian(GaussianMeasure([1.0], [[1.0]]), shape=(128,), **LINE)
    stepped = grid_fokker_planck_step(state, LinearForwardMap([[1.0]]), target, 1e-3)
    assert stepped.total_mass == pytest.approx(1.0)
    assert np.sum(stepped.points[:, 0] * stepped.masses) < np.sum(state.points[:, 0] * state.masses)


def test_clamping_is_logged_as_a_warning(caplog, monkeypatch):
    monkeypatch.setattr(logging.getLogger("apps"), "propagate", True)
    density = np.array([1.0, 0.01, 1.0, 0.01, 1.0, 0.01])
    with caplog.at_level(logging.WARNING, logger="apps.flow.services.grid"):
        stepped, clamped = advance_density(density, np.zeros(6), np.ones((6, 1, 1)), np.array([1.0]), 10.0)
    assert clamped > 0
    assert np.all(stepped >= 0)
    assert stepped.sum() == pytest.approx(1.0)
    assert any(
        record.levelno == logging.WARNING and "negative mass" in record.getMessage() for record in caplog.records
    )


def test_kl_never_grows_along_a_grid_run():
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(128,), **LINE)
    init = discretize_gaussian(GaussianMeasure([1.5], [[0.5]]), shape=(128,), **LINE)
    trace = run_flow(init, grid_config(LinearForwardMap([[1.0]]), target, 2e-3, 1.0, record_every=10))
    assert np.all(np.diff(trace.kl_to_target) <= 1e-3)
    assert trace.kl_to_target[-1] < trace.kl_to_target[0]


# Ornstein-Uhlenbeck flow, KL(t) = 2 exp(-2t)
def test_ornstein_uhlenbeck_decay_rate():
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(512,), **LINE)
    init = discretize_gaussian(GaussianMeasure([2.0], [[1.0]]), shape=(512,), **LINE)
    trace = run_flow(init, grid_config(LinearForwardMap([[1.0]]), target, 2e-4, 1.0, record_every=100))
    assert trace.valid
    assert trace.times[-1] == pytest.approx(1.0)
    assert trace.kl_to_target[0] == pytest.approx(2.0, rel=1e-3)
    assert trace.decay_fit.rate == pytest.approx(-2.0, rel=0.1)
    assert trace.decay_fit.r2 > 0.99


def test_long_run_is_flat_against_the_target():
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), shape=(128,), **LINE)
    init = discretize_gaussian(GaussianMeasure([1.0], [[1.0]]), shape=(128,), **LINE)
    trace = run_flow(init, grid_config(LinearForwardMap([[1.0]]), target, 3e-3, 7.0, record_every=500))
    assert equilibrium_flatness(trace.final_state, target) < 0.02
    assert trace.clamped_mass <= 1e-6


# Same flow in data and in Col(A) coordinates
@pytest.mark.parametrize(
    ("matrix", "target", "init"),
    [
        ([[-2.0]], GaussianMeasure([0.5], [[2.0]]), GaussianMeasure([-1.0], [[0.5]])),
        (
            [[0.0, 1.0], [2.0, 0.0]],
            GaussianMeasure([0.5, 0.0], [[1.0, 0.0], [0.0, 2.0]]),
            GaussianMeasure([1.0, -1.0], [[0.5, 0.0], [0.0, 1.5]]),
        ),
    ],
)
def test_reduced_flow_matches_the_data_flow(matrix, target, init):
    forward_map = LinearForwardMap(matrix)
    dim = target.dim
    box = {"lower": [-6.0] * dim, "upper": [6.0] * dim, "shape": (48,) * dim}

    # Data coordinates
    data_target = discretize_gaussian(target, **box)
    data_trace = run_flow(
        discretize_gaussian(init, **box),
        grid_config(forward_map, data_target, 2e-3, 0.2, record_every=10),
    )

    # Col(A) coordinates
    reduced_target = discretize_gaussian(reduced_gaussian(forward_map, target, conditional=True), **box)
    reduced_trace = run_flow(
        discretize_gaussian(reduced_gaussian(forward_map, init, conditional=False), **box),
        grid_config(forward_map, reduced_target, 2e-3, 0.2, record_every=10, reduced=True),
    )

    assert reduced_trace.reduced
    np.testing.assert_allclose(reduced_trace.times, data_trace.times)
    np.testing.assert_allclose(reduced_trace.kl_to_target, data_trace.kl_to_target, rtol=1e-8, atol=1e-12)


def test_off_diagonal_mobility_matches_the_gaussian_flow():
    root = np.sqrt(2.0)
    forward_map = LinearForwardMap([[(root + 1) / 2, (root - 1) / 2], [(root - 1) / 2, (root + 1) / 2]])
    np.testing.assert_allclose(forward_map.matrix @ forward_map.matrix.T, [[1.5, 0.5], [0.5, 1.5]])
    target = GaussianMeasure([0.0, 0.0], np.eye(2))
    init = GaussianMeasure([1.0, 0.5], np.eye(2))
    box = {"lower": [-6.0, -6.0], "upper": [6.0, 6.0], "shape": (96, 96)}

    # Grid scheme in data coordinates
    grid_target = discretize_gaussian(target, **box)
    trace = run_flow(
        discretize_gaussian(init, **box),
        grid_config(forward_map, grid_target, 1.5e-3, 0.3, record_every=200),
    )

    # Closed form, mean exp(-Bt) m0 with unit covariance
    mobility = forward_map.matrix @ forward_map.matrix.T
    values, vectors = np.linalg.eigh(mobility)
    mean = vectors @ np.diag(np.exp(-values * trace.times[-1])) @ vectors.T @ init.mean
    assert trace.kl_to_target[-1] == pytest.approx(0.5 * mean @ mean, rel=0.05)
