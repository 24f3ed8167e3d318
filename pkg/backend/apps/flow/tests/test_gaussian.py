# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import StiffnessWarning
from apps.flow.services import gaussian_flow_ode, record_steps
from apps.maps.types import LinearForwardMap
from apps.measures.types import GaussianMeasure

STANDARD = GaussianMeasure([0.0], [[1.0]])


def test_record_steps_end_at_the_final_step():
    np.testing.assert_array_equal(record_steps(10, 3), [0, 3, 6, 9, 10])
    np.testing.assert_array_equal(record_steps(10, 5), [0, 5, 10])
    np.testing.assert_array_equal(record_steps(0, 4), [0])


def test_unit_mobility_kl_is_exponential():
    trace = gaussian_flow_ode(GaussianMeasure([2.0], [[1.0]]), LinearForwardMap([[1.0]]), STANDARD, 0.01, 1.0)
    np.testing.assert_allclose(trace.kl_to_target, 2.0 * np.exp(-2.0 * trace.times), rtol=1e-6)
    np.testing.assert_allclose(trace.final_state.cov, [[1.0]], atol=1e-9)
    assert trace.reduced


def test_singular_value_scales_the_rate():
    trace = gaussian_flow_ode(
        GaussianMeasure([2.0], [[1.0]]), LinearForwardMap([[2.0]]), STANDARD, 0.01, 1.0, record_every=5
    )
    assert trace.decay_fit.rate == pytest.approx(-8.0, rel=1e-4)
    assert trace.decay_fit.r2 == pytest.approx(1.0)
    assert trace.times.shape == (21,)


def test_starting_at_the_target_stays_there():
    forward_map = LinearForwardMap([[1.0, 0.5], [0.0, 2.0]])
    target = GaussianMeasure([1.0, -1.0], [[2.0, 0.4], [0.4, 1.0]])
    trace = gaussian_flow_ode(target, forward_map, target, 0.005, 0.5)
    assert np.max(trace.kl_to_target) <= 1e-12
    assert not trace.decay_fit.defined


def test_covariance_relaxes_to_the_conditional():
    forward_map = LinearForwardMap([[1.0], [0.0]])
    target = GaussianMeasure([1.0, 2.0], [[1.0, 0.5], [0.5, 1.0]])
    init = GaussianMeasure([3.0, 0.0], [[2.0, 0.0], [0.0, 1.0]])
    trace = gaussian_flow_ode(init, forward_map, target, 0.02, 15.0, record_every=50)
    final = trace.final_state
    assert final.dim == 1
    np.testing.assert_allclose(final.mean, [0.0], atol=1e-6)
    np.testing.assert_allclose(final.cov, [[0.75]], atol=1e-6)


def test_large_steps_warn_about_stiffness():
    with pytest.warns(StiffnessWarning):
        gaussian_flow_ode(GaussianMeasure([2.0], [[1.0]]), LinearForwardMap([[2.0]]), STANDARD, 0.05, 1.0)


def test_zero_final_time_keeps_the_initial_law():
    trace = gaussian_flow_ode(GaussianMeasure([2.0], [[1.0]]), LinearForwardMap([[1.0]]), STANDARD, 0.01, 0.0)
    assert trace.times.shape == (1,)
    assert trace.kl_to_target[0] == pytest.approx(2.0)
    assert not trace.decay_fit.defined
