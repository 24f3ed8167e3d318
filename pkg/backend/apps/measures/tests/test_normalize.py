# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import ZeroMassError
from apps.measures.services import normalize
from apps.measures.types import GridMeasure, ParticleMeasure


@pytest.mark.parametrize(
    ("weights", "expected"),
    [
        ([2.0, 2.0], [0.5, 0.5]),
        ([1.0, 0.0, 3.0], [0.25, 0.0, 0.75]),
    ],
)
def test_particle_weights_are_rescaled(weights, expected):
    points = np.arange(len(weights), dtype=float)[:, None]
    measure = normalize(ParticleMeasure(points, weights, require_unit_mass=False))
    np.testing.assert_allclose(measure.weights, expected)
    np.testing.assert_array_equal(measure.points, points)


def test_uniform_grid_density_becomes_one():
    grid = GridMeasure([0.0], [1.0], (10,), np.full(10, 7.0), require_unit_mass=False)
    measure = normalize(grid)
    np.testing.assert_allclose(measure.density, 1.0)
    assert measure.total_mass == pytest.approx(1.0, abs=1e-10)


def test_zero_mass_is_rejected():
    with pytest.raises(ZeroMassError):
        normalize(ParticleMeasure([[0.0], [1.0]], [0.0, 0.0], require_unit_mass=False))


def test_overflowing_mass_is_rejected():
    grid = GridMeasure([0.0], [1.0], (2,), [1e308, 1e308], require_unit_mass=False)
    with pytest.raises(ZeroMassError):
        normalize(grid)
