# Standard library imports
import itertools

# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import DimensionMismatchError, SizeCapError
from apps.divergences.services import wasserstein_1d, wasserstein_exact, wasserstein_to_gaussian_1d
from apps.measures.services import discretize_gaussian
from apps.measures.types import GaussianMeasure, ParticleMeasure


def test_single_transport():
    assert wasserstein_1d(ParticleMeasure([[0.0]], [1.0]), ParticleMeasure([[3.0]], [1.0]), p=2) == pytest.approx(3.0)


def test_monotone_matching_of_two_atoms():
    mu = ParticleMeasure.uniform([[0.0], [1.0]])
    nu = ParticleMeasure.uniform([[2.0], [3.0]])
    assert wasserstein_1d(mu, nu, p=2) == pytest.approx(2.0)


def test_translated_grid_gaussians():
    mu = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), [-8.0], [8.0], (1600,))
    nu = discretize_gaussian(GaussianMeasure([2.0], [[1.0]]), [-6.0], [10.0], (1600,))
    assert wasserstein_1d(mu, nu, p=2) == pytest.approx(2.0, abs=1e-3)


def test_one_dimensional_solver_rejects_planar_clouds():
    with pytest.raises(DimensionMismatchError):
        wasserstein_1d(ParticleMeasure([[0.0, 1.0]], [1.0]), ParticleMeasure([[0.0, 1.0]], [1.0]))


def test_discretized_gaussian_is_close_to_its_quantiles():
    gaussian = GaussianMeasure([0.5], [[2.0]])
    grid = discretize_gaussian(gaussian, [-9.5], [10.5], (2000,))
    assert wasserstein_to_gaussian_1d(grid, gaussian) < 5e-3
    assert wasserstein_to_gaussian_1d(grid, GaussianMeasure([1.5], [[2.0]])) == pytest.approx(1.0, abs=5e-3)


def test_exact_identical_measures():
    cloud = ParticleMeasure(np.random.default_rng(0).normal(size=(5, 2)), [0.1, 0.2, 0.3, 0.15, 0.25])
    value, coupling = wasserstein_exact(cloud, cloud)
    assert value == pytest.approx(0.0, abs=1e-9)
    np.testing.assert_allclose(coupling.plan, np.diag(cloud.weights), atol=1e-12)


def test_exact_matches_the_monotone_coupling_in_one_dimension():
    rng = np.random.default_rng(1)
    mu = ParticleMeasure(rng.normal(size=(7, 1)), rng.dirichlet(np.ones(7)))
    nu = ParticleMeasure(rng.normal(1.0, 2.0, size=(5, 1)), rng.dirichlet(np.ones(5)))
    for p in (1.0, 2.0, 3.0):
        value, coupling = wasserstein_exact(mu, nu, p)
        assert value == pytest.approx(wasserstein_1d(mu, nu, p), abs=1e-9)
        assert coupling.has_marginals(mu.weights, nu.weights)


def test_exact_matches_brute_force_permutations():
    rng = np.random.default_rng(2)
    x, y = rng.normal(size=(3, 2)), rng.normal(size=(3, 2))
    best = min(
        np.mean(np.sum((x - y[list(order)]) ** 2, axis=1)) for order in itertools.permutations(range(3))
    )
    value, _ = wasserstein_exact(ParticleMeasure.uniform(x), ParticleMeasure.uniform(y))
    assert value == pytest.approx(np.sqrt(best), abs=1e-9)


def test_exact_symmetry_and_triangle_inequality():
    rng = np.random.default_rng(3)
    for _ in range(10):
        a, b, c = (ParticleMeasure(rng.normal(size=(4, 2)), rng.dirichlet(np.ones(4))) for _ in range(3))
        ab, bc, ac = wasserstein_exact(a, b)[0], wasserstein_exact(b, c)[0], wasserstein_exact(a, c)[0]
        assert wasserstein_exact(b, a)[0] == pytest.approx(ab, abs=1e-9)
        assert ac <= ab + bc + 1e-9
        assert min(ab, bc, ac) >= 0


def test_size_cap(settings):
    settings.STOCHINVERSE_OT_SIZE_CAP = 10
    cloud = ParticleMeasure.uniform(np.arange(4.0)[:, None])
    with pytest.raises(SizeCapError):
        wasserstein_exact(cloud, cloud)
