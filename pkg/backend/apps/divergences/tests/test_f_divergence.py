# Standard library imports
import math

# Third-party imports
import numpy as np
import pytest
from scipy import stats

# Local application imports
from apps.common.exceptions import GridMismatchError, NonConvexGeneratorError
from apps.divergences.services import f_divergence, f_divergence_grid, kl_gaussian
from apps.divergences.types import FDivergenceName, FDivergenceSpec
from apps.measures.services import discretize_gaussian, grid_from_log_density
from apps.measures.types import GaussianMeasure


def gaussian_grid(mean, variance, shape=(4000,)):
    return discretize_gaussian(GaussianMeasure([mean], [[variance]]), [-10.0], [11.0], shape)


def right_half_gaussian():
    return grid_from_log_density(
        lambda x: np.where(x[:, 0] > 0, -0.5 * x[:, 0] ** 2, -np.inf),
        [-10.0],
        [11.0],
        (4000,),
    )


@pytest.mark.parametrize("name", ["kl", "chi2", "tv"])
def test_divergence_of_a_measure_to_itself_is_zero(name):
    grid = gaussian_grid(0.0, 1.0)
    assert f_divergence_grid(FDivergenceSpec.from_name(name), grid, grid) == pytest.approx(0.0, abs=1e-14)


def test_grid_kl_of_unit_shift():
    value = f_divergence_grid(FDivergenceSpec.kl(), gaussian_grid(1.0, 1.0), gaussian_grid(0.0, 1.0))
    assert value == pytest.approx(0.5, abs=1e-3)


def test_grid_kl_matches_the_closed_form():
    first, second = GaussianMeasure([0.3], [[1.5]]), GaussianMeasure([-0.2], [[1.0]])
    value = f_divergence_grid(FDivergenceSpec.kl(), gaussian_grid(0.3, 1.5), gaussian_grid(-0.2, 1.0))
    assert value == pytest.approx(kl_gaussian(first, second), abs=1e-4)


def test_missing_support_gives_infinity():
    value = f_divergence_grid(FDivergenceSpec.kl(), gaussian_grid(0.0, 1.0), right_half_gaussian())
    assert math.isinf(value)


def test_total_variation_of_disjoint_supports_is_one():
    left = grid_from_log_density(lambda x: np.where(x[:, 0] < 0, 0.0, -np.inf), [-1.0], [1.0], (10,))
    right = grid_from_log_density(lambda x: np.where(x[:, 0] > 0, 0.0, -np.inf), [-1.0], [1.0], (10,))
    assert f_divergence_grid(FDivergenceSpec.total_variation(), left, right) == pytest.approx(1.0)


def test_total_variation_generator_is_half_the_absolute_gap():
    spec = FDivergenceSpec.from_name("tv")
    assert spec.name == FDivergenceName.TOTAL_VARIATION
    np.testing.assert_allclose(spec.f(np.array([0.0, 1.0, 3.0])), [0.5, 0.0, 1.0])
    assert spec.recession == pytest.approx(0.5)

    # TV between N(0, 1) and N(1, 1) is 2 Phi(1/2) - 1
    value = f_divergence_grid(spec, gaussian_grid(1.0, 1.0), gaussian_grid(0.0, 1.0))
    assert value == pytest.approx(2.0 * stats.norm.cdf(0.5) - 1.0, abs=1e-3)


def test_vanishing_cells_of_both_measures_contribute_nothing():
    half = right_half_gaussian()
    assert f_divergence_grid(FDivergenceSpec.kl(), half, half) == pytest.approx(0.0, abs=1e-14)


def test_grids_must_match():
    with pytest.raises(GridMismatchError):
        f_divergence_grid(FDivergenceSpec.kl(), gaussian_grid(0.0, 1.0), gaussian_grid(0.0, 1.0, shape=(3000,)))


def test_gaussian_pairs_use_the_closed_form():
    first, second = GaussianMeasure([0.3], [[1.0]]), GaussianMeasure([0.0], [[1.0]])
    assert f_divergence(FDivergenceSpec.kl(), first, second) == pytest.approx(0.045)


def test_built_in_generators():
    assert FDivergenceSpec.kl().strictly_convex
    assert FDivergenceSpec.chi_squared().name == FDivergenceName.CHI_SQUARED
    assert not FDivergenceSpec.total_variation().strictly_convex
    with pytest.raises(ValueError, match="custom"):
        FDivergenceSpec.from_name("custom")


def test_custom_generators_are_checked():
    hellinger = FDivergenceSpec.custom(
        lambda x: (np.sqrt(x) - 1.0) ** 2,
        lambda x: 1.0 - 1.0 / np.sqrt(x),
        lambda x: 0.5 * x**-1.5,
        recession=1.0,
    )
    assert hellinger.strictly_convex
    with pytest.raises(NonConvexGeneratorError):
        FDivergenceSpec.custom(lambda x: x**2, lambda x: 2.0 * x, lambda x: np.full_like(x, 2.0))
    with pytest.raises(NonConvexGeneratorError):
        FDivergenceSpec.custom(lambda x: 1.0 - x**2, lambda x: -2.0 * x, lambda x: np.full_like(x, -2.0))
