# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import NotConvergedWarning
from apps.divergences.services import sinkhorn, wasserstein_exact
from apps.measures.types import ParticleMeasure


@pytest.fixture
def shifted_pair():
    atoms = np.linspace(0.0, 1.0, 10)[:, None]
    return ParticleMeasure.uniform(atoms), ParticleMeasure.uniform(atoms + 0.5)


def test_identical_measures_stay_within_the_entropic_envelope():
    cloud = ParticleMeasure.uniform(np.arange(5.0)[:, None])
    epsilon = 0.1
    result = sinkhorn(cloud, cloud, epsilon=epsilon)
    assert result.converged
    assert result.coupling.cost <= epsilon * np.log(5) + 1e-12
    assert np.all(np.argmax(result.coupling.plan, axis=1) == np.arange(5))


def test_small_epsilon_is_close_to_the_exact_value(shifted_pair):
    mu, nu = shifted_pair
    exact, _ = wasserstein_exact(mu, nu)
    result = sinkhorn(mu, nu, epsilon=0.01)
    assert exact == pytest.approx(0.5)
    assert result.value == pytest.approx(exact, rel=0.02)
    assert result.marginal_error <= 1e-9
    assert result.coupling.has_marginals(mu.weights, nu.weights, tol=1e-9)


def test_decreasing_epsilon_approaches_the_exact_value(shifted_pair):
    mu, nu = shifted_pair
    exact, _ = wasserstein_exact(mu, nu)
    gaps = [abs(sinkhorn(mu, nu, epsilon=epsilon).value - exact) for epsilon in (1.0, 0.1, 0.01)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_non_convergence_returns_the_best_iterate_with_a_warning(shifted_pair):
    mu, nu = shifted_pair
    with pytest.warns(NotConvergedWarning):
        result = sinkhorn(mu, nu, epsilon=0.01, max_iter=1, tol=1e-15)
    assert not result.converged
    assert result.iterations == 1
    assert np.isfinite(result.value)


def test_epsilon_must_be_positive(shifted_pair):
    with pytest.raises(ValueError, match="positive"):
        sinkhorn(*shifted_pair, epsilon=0.0)
