# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.maps.types import LinearForwardMap
from apps.measures.types import GaussianMeasure, ParticleMeasure
from apps.variational.services import SWEEP_COLUMNS, balanced_alpha, tikhonov_sweep

ALPHAS = np.logspace(-3, 1, 12)


@pytest.fixture
def canonical_sweep():
    forward_map = LinearForwardMap([[2.0]])
    truth = GaussianMeasure([0.0], [[4.0]])
    noisy = GaussianMeasure([0.2], [[4.0]])
    return forward_map, tikhonov_sweep(forward_map, truth, noisy, ALPHAS)


def test_sweep_table_layout(canonical_sweep):
    _, frame = canonical_sweep
    assert list(frame.columns) == SWEEP_COLUMNS
    assert len(frame) == 12
    np.testing.assert_allclose(frame["alpha"], ALPHAS)


def test_empirical_minimizer_is_near_the_balanced_alpha(canonical_sweep):
    forward_map, frame = canonical_sweep
    balance = balanced_alpha(forward_map, 0.2, 4.0)
    assert balance == pytest.approx(0.2)
    best = frame.loc[frame["error_w2"].idxmin(), "alpha"]
    step = np.log10(ALPHAS[1] / ALPHAS[0])
    assert abs(np.log10(best / balance)) <= step


def test_error_closed_form(canonical_sweep):
    _, frame = canonical_sweep
    # T = 2 / (4 + alpha^2) maps N(0.2, 4) to N(0.4 / s, 16 / s^2), compared with N(0, 1)
    s = 4.0 + frame["alpha"] ** 2
    expected = np.hypot(0.4 / s, 4.0 / s - 1.0)
    np.testing.assert_allclose(frame["error_w2"], expected, rtol=1e-9, atol=1e-12)


def test_bound_holds_for_moderate_alpha(canonical_sweep):
    _, frame = canonical_sweep
    moderate = frame[frame["alpha"] >= 0.5]
    assert (moderate["error_w2"] <= moderate["bound"] * (1 + 1e-6)).all()
    np.testing.assert_allclose(frame["bound"], frame["noise_term"] + frame["reg_term"])


def test_particle_sweep():
    forward_map = LinearForwardMap([[1.0], [1.0]])
    truth = ParticleMeasure([[1.0, 1.0], [-1.0, -1.0]], [0.5, 0.5])
    noisy = ParticleMeasure([[1.1, 0.9], [-0.9, -1.1]], [0.5, 0.5])
    frame = tikhonov_sweep(forward_map, truth, noisy, [0.1, 1.0])
    assert len(frame) == 2
    assert frame["error_w2"].iloc[0] < frame["error_w2"].iloc[1]


def test_non_positive_alpha_is_rejected():
    truth, data = GaussianMeasure([0.0], [[1.0]]), GaussianMeasure([0.1], [[1.0]])
    with pytest.raises(ValueError, match="positive"):
        tikhonov_sweep(LinearForwardMap([[1.0]]), truth, data, [0.0])
