# Third-party imports
import numpy as np
import pytest
from scipy import integrate, stats

# Local application imports
from apps.divergences.services import bures_distance, kl_gaussian, wasserstein_gaussian
from apps.maps.services import pushforward_gaussian
from apps.measures.types import GaussianMeasure


def test_identical_gaussians_are_at_distance_zero():
    gaussian = GaussianMeasure([1.0, 2.0], [[2.0, 0.4], [0.4, 1.0]])
    assert wasserstein_gaussian(gaussian, gaussian) == pytest.approx(0.0, abs=1e-6)
    assert kl_gaussian(gaussian, gaussian) == pytest.approx(0.0, abs=1e-12)


def test_one_dimensional_standard_deviation_gap():
    assert wasserstein_gaussian(GaussianMeasure([0.0], [[1.0]]), GaussianMeasure([0.0], [[4.0]])) == pytest.approx(1.0)


def test_pure_translation():
    first = GaussianMeasure([0.0, 0.0], np.eye(2))
    second = GaussianMeasure([3.0, 4.0], np.eye(2))
    assert wasserstein_gaussian(first, second) == pytest.approx(5.0, abs=1e-9)


def test_bures_matches_the_scalar_form_on_diagonal_covariances():
    value = bures_distance([0.0, 1.0], np.diag([1.0, 4.0]), [1.0, 1.0], np.diag([9.0, 1.0]))
    assert value == pytest.approx(np.sqrt(1.0 + 4.0 + 1.0), abs=1e-9)


def test_bures_accepts_singular_covariances():
    value = bures_distance([0.0, 0.0], np.diag([1.0, 0.0]), [0.0, 0.0], np.diag([4.0, 0.0]))
    assert value == pytest.approx(1.0, abs=1e-9)


def test_kl_unit_shift():
    assert kl_gaussian(GaussianMeasure([1.0], [[1.0]]), GaussianMeasure([0.0], [[1.0]])) == pytest.approx(0.5)


@pytest.mark.parametrize(("first", "second"), [((1.0, 1.0), (0.0, 1.0)), ((0.0, 2.0), (0.0, 1.0))])
def test_kl_matches_quadrature(first, second):
    p = stats.norm(first[0], np.sqrt(first[1]))
    q = stats.norm(second[0], np.sqrt(second[1]))
    expected, _ = integrate.quad(lambda x: p.pdf(x) * (p.logpdf(x) - q.logpdf(x)), -30.0, 30.0, epsabs=1e-12)
    value = kl_gaussian(GaussianMeasure([first[0]], [[first[1]]]), GaussianMeasure([second[0]], [[second[1]]]))
    assert value == pytest.approx(expected, abs=1e-8)


def test_variance_ratio_closed_form():
    value = kl_gaussian(GaussianMeasure([0.0], [[2.0]]), GaussianMeasure([0.0], [[1.0]]))
    assert value == pytest.approx(0.5 * (2.0 - 1.0 + np.log(0.5)))
    assert value == pytest.approx(0.15343, abs=1e-5)


def test_kl_is_invariant_under_invertible_linear_maps():
    rng = np.random.default_rng(6)
    A = rng.normal(size=(2, 2)) + 2.0 * np.eye(2)
    first = GaussianMeasure([1.0, 0.0], [[1.0, 0.3], [0.3, 0.5]])
    second = GaussianMeasure([0.0, -1.0], [[2.0, -0.2], [-0.2, 1.0]])
    mapped = kl_gaussian(pushforward_gaussian(A, None, first), pushforward_gaussian(A, None, second))
    assert mapped == pytest.approx(kl_gaussian(first, second), abs=1e-9)


def test_wasserstein_contracts_by_the_operator_norm():
    rng = np.random.default_rng(7)
    for _ in range(20):
        A = rng.normal(size=(2, 2))
        first = GaussianMeasure(rng.normal(size=2), np.diag(rng.uniform(0.5, 2.0, size=2)))
        second = GaussianMeasure(rng.normal(size=2), np.diag(rng.uniform(0.5, 2.0, size=2)))
        mapped = wasserstein_gaussian(pushforward_gaussian(A, None, first), pushforward_gaussian(A, None, second))
        assert mapped <= np.linalg.norm(A, 2) * wasserstein_gaussian(first, second) + 1e-8
