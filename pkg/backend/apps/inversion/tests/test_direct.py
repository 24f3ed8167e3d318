# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import MissingInverseError, RankDeficientError, UnsupportedCarrierError
from apps.divergences.services import wasserstein_to_gaussian_1d
from apps.inversion.services import deterministic_solution, direct_invert, solution_set
from apps.maps.services import cubic_map, pseudo_inverse, pushforward
from apps.maps.types import LinearForwardMap, SmoothForwardMap
from apps.measures.services import discretize_gaussian
from apps.measures.types import GaussianMeasure, GridMeasure, ParticleMeasure


def test_identity_leaves_data_unchanged():
    identity = LinearForwardMap(np.eye(2))
    cloud = ParticleMeasure([[1.0, 2.0], [-1.0, 0.0]], [0.4, 0.6])
    gaussian = GaussianMeasure([1.0, 2.0], [[1.0, 0.2], [0.2, 2.0]])
    np.testing.assert_allclose(direct_invert(identity, cloud).points, cloud.points)
    inverted = direct_invert(identity, gaussian)
    np.testing.assert_allclose(inverted.mean, gaussian.mean)
    np.testing.assert_allclose(inverted.cov, gaussian.cov)


def test_scalar_division_of_a_dirac():
    result = direct_invert(LinearForwardMap([[2.0]]), ParticleMeasure([[6.0]], [1.0]))
    np.testing.assert_allclose(result.points, [[3.0]])


def test_underdetermined_gaussian_becomes_a_line_supported_cloud():
    forward_map = LinearForwardMap([[1.0, 0.0]])
    data = GaussianMeasure([0.0], [[1.0]])
    result = direct_invert(forward_map, data, seed=3)
    assert isinstance(result, ParticleMeasure)
    np.testing.assert_allclose(result.points[:, 1], 0.0, atol=1e-14)
    assert wasserstein_to_gaussian_1d(pushforward(forward_map, result), data) < 0.1


def test_sampling_is_reproducible():
    forward_map = LinearForwardMap([[1.0, 1.0]])
    data = GaussianMeasure([0.0], [[1.0]])
    first = direct_invert(forward_map, data, sample_count=64, seed=5)
    second = direct_invert(forward_map, data, sample_count=64, seed=5)
    np.testing.assert_array_equal(first.points, second.points)


def test_round_trip_is_exact_on_particles():
    rng = np.random.default_rng(0)
    forward_map = LinearForwardMap(rng.normal(size=(3, 3)) + 3.0 * np.eye(3))
    cloud = ParticleMeasure(rng.normal(size=(6, 3)), rng.dirichlet(np.ones(6)))
    round_trip = pushforward(forward_map, direct_invert(forward_map, cloud))
    np.testing.assert_allclose(round_trip.points, cloud.points, atol=1e-12)
    np.testing.assert_array_equal(round_trip.weights, cloud.weights)


def test_dirac_data_reproduces_the_minimal_norm_solution():
    rng = np.random.default_rng(1)
    forward_map = LinearForwardMap(rng.normal(size=(2, 3)))
    y = rng.normal(size=2)
    result = direct_invert(forward_map, ParticleMeasure([y], [1.0]))
    np.testing.assert_allclose(result.points[0], deterministic_solution(forward_map, y), atol=1e-12)
    np.testing.assert_allclose(result.points[0], np.linalg.lstsq(forward_map.matrix, y, rcond=None)[0], atol=1e-10)


def test_overdetermined_gaussian_stays_gaussian():
    forward_map = LinearForwardMap([[1.0], [1.0]])
    result = direct_invert(forward_map, GaussianMeasure([2.0, 4.0], np.eye(2)))
    np.testing.assert_allclose(result.mean, [3.0])
    np.testing.assert_allclose(result.cov, [[0.5]])


def test_grid_data_needs_a_square_map():
    data = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), [-5.0], [5.0], (50,))
    with pytest.raises(UnsupportedCarrierError):
        direct_invert(LinearForwardMap([[1.0], [2.0]]), GridMeasure([-5.0, -5.0], [5.0, 5.0], (1, 1), [0.01]))
    assert isinstance(direct_invert(LinearForwardMap([[2.0]]), data), GridMeasure)


def test_rank_deficient_maps_are_rejected():
    with pytest.raises(RankDeficientError):
        direct_invert(LinearForwardMap([[1.0, 1.0], [1.0, 1.0]]), ParticleMeasure([[1.0, 1.0]], [1.0]))


def test_smooth_maps_use_their_inverse():
    result = direct_invert(cubic_map(), ParticleMeasure([[10.0], [2.0]], [0.5, 0.5]))
    np.testing.assert_allclose(result.points, [[2.0], [1.0]], atol=1e-10)
    with pytest.raises(MissingInverseError):
        direct_invert(SmoothForwardMap(np.sinh, 1, 1), ParticleMeasure([[1.0]], [1.0]))


def test_solution_set_canonical_element():
    forward_map = LinearForwardMap([[1.0, 1.0]])
    data = ParticleMeasure([[2.0]], [1.0])
    handle = solution_set(forward_map, data)
    np.testing.assert_allclose(handle.canonical.points, [[1.0, 1.0]])
    np.testing.assert_allclose(pushforward(forward_map, handle.canonical).points, data.points)
    np.testing.assert_allclose(pseudo_inverse(forward_map) @ [2.0], [1.0, 1.0])
