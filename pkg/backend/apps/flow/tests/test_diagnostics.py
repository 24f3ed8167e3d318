# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import DimensionMismatchError
from apps.flow.services import (
    certify_decay,
    classify_equilibrium,
    decay_rate_bound,
    equilibrium_flatness,
    fit_decay,
    gaussian_flow_ode,
    reduced_gaussian,
    snapshot_divergences,
)
from apps.flow.types import DecayFit, EquilibriumClassification, EquilibriumLabel, FlowTrace
from apps.maps.services import cubic_map
from apps.maps.types import LinearForwardMap
from apps.measures.services import discretize_gaussian
from apps.measures.types import GaussianMeasure, LogConcavityCertificate, ParticleMeasure


def exponential_trace(times, kl):
    snapshots = tuple(GaussianMeasure([0.0], [[1.0]]) for _ in times)
    return FlowTrace(
        times=np.asarray(times, dtype=float),
        kl_to_target=np.asarray(kl, dtype=float),
        w2_to_target=np.zeros(len(times)),
        snapshots=snapshots,
        decay_fit=fit_decay(times, kl),
    )


def test_fit_of_an_exact_exponential():
    times = np.linspace(0.0, 2.0, 41)
    fit = fit_decay(times, 2.0 * np.exp(-2.0 * times))
    assert fit.rate == pytest.approx(-2.0)
    assert fit.r2 == pytest.approx(1.0)
    assert fit.samples == 21


def test_fit_uses_the_final_half():
    times = np.linspace(0.0, 1.0, 11)
    kl = np.where(times < 0.5, np.exp(-10.0 * times), np.exp(-5.0) * np.exp(-3.0 * (times - 0.5)))
    assert fit_decay(times, kl).rate == pytest.approx(-3.0)


@pytest.mark.parametrize(
    ("times", "kl"),
    [
        ([0.0], [1.0]),
        ([0.0, 1.0, 2.0, 3.0], [1.0, 0.5, 0.0, 0.0]),
        ([0.0, 1.0, 2.0, 3.0], [1.0, 0.5, 1e-16, 1e-15]),
    ],
)
def test_undefined_fits(times, kl):
    fit = fit_decay(times, kl)
    assert not fit.defined
    assert np.isnan(fit.rate)
    assert fit.samples == DecayFit.undefined().samples


def test_certificate_accepts_a_faster_decay():
    times = np.linspace(0.0, 1.0, 11)
    certificate = certify_decay(exponential_trace(times, np.exp(-3.0 * times)), 2.0)
    assert certificate.satisfied
    assert certificate.worst_ratio <= 1.0 / 1.05 + 1e-12


def test_certificate_rejects_a_slower_decay():
    times = np.linspace(0.0, 1.0, 11)
    certificate = certify_decay(exponential_trace(times, np.exp(-1.0 * times)), 2.0)
    assert not certificate.satisfied
    assert certificate.worst_ratio > 1.0
    assert certificate.rate == 2.0
    assert certificate.slack == 0.05


def test_rate_bound_of_a_linear_map():
    assert decay_rate_bound(LinearForwardMap([[2.0]]), GaussianMeasure([0.0], [[4.0]])) == pytest.approx(2.0)
    assert decay_rate_bound(LinearForwardMap(np.eye(2)), LogConcavityCertificate(0.5)) == pytest.approx(1.0)


def test_rate_bound_uses_the_restricted_target():
    forward_map = LinearForwardMap([[1.0], [0.0]])
    target = GaussianMeasure([1.0, 2.0], [[1.0, 0.5], [0.5, 1.0]])

    # Restriction N(0, 0.75) has constant 4/3
    assert decay_rate_bound(forward_map, target) == pytest.approx(2.0 * 4.0 / 3.0)


def test_rate_bound_of_a_smooth_map_needs_probes():
    forward_map = cubic_map()
    with pytest.raises(ValueError, match="probe points"):
        decay_rate_bound(forward_map, LogConcavityCertificate(1.0))
    assert decay_rate_bound(forward_map, LogConcavityCertificate(1.0), probe_points=[[1.0], [2.0]]) > 0


def test_flatness_of_the_target_is_zero():
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), [-6.0], [6.0], (64,))
    assert equilibrium_flatness(target, target) == pytest.approx(0.0, abs=1e-12)
    shifted = discretize_gaussian(GaussianMeasure([1.0], [[1.0]]), [-6.0], [6.0], (64,))
    assert equilibrium_flatness(shifted, target) > 0.5


def test_divergences_between_gaussians():
    kl, w2 = snapshot_divergences(GaussianMeasure([2.0], [[1.0]]), GaussianMeasure([0.0], [[1.0]]))
    assert kl == pytest.approx(2.0)
    assert w2 == pytest.approx(2.0)


def test_divergences_of_particles_against_a_grid():
    target = discretize_gaussian(GaussianMeasure([0.0], [[1.0]]), [-6.0], [6.0], (48,))
    cloud = ParticleMeasure(target.points, target.masses / target.masses.sum())
    kl, w2 = snapshot_divergences(cloud, target)
    assert kl == pytest.approx(0.0, abs=1e-10)
    assert w2 < 0.2


def test_degenerate_particle_clouds_have_infinite_kl():
    kl, w2 = snapshot_divergences(ParticleMeasure.uniform([[1.0], [1.0]]), GaussianMeasure([0.0], [[1.0]]))
    assert kl == np.inf
    assert w2 == pytest.approx(np.sqrt(2.0), rel=1e-2)


def test_reduced_gaussian_rejects_other_dimensions():
    forward_map = LinearForwardMap(np.diag([1.0, 1.0, 0.0]))
    with pytest.raises(DimensionMismatchError):
        reduced_gaussian(forward_map, GaussianMeasure([0.0] * 4, np.eye(4)), conditional=True)


def test_margin_decides_the_label():
    assert EquilibriumClassification.from_distances(0.01, 1.0).label is EquilibriumLabel.CONDITIONAL
    assert EquilibriumClassification.from_distances(1.0, 0.01).label is EquilibriumLabel.MARGINAL
    assert EquilibriumClassification.from_distances(0.4, 0.6).label is EquilibriumLabel.NEITHER


def test_uncorrelated_target_cannot_be_told_apart():
    forward_map = LinearForwardMap([[1.0], [0.0]])
    target = GaussianMeasure([1.0, 0.0], np.eye(2))
    trace = gaussian_flow_ode(GaussianMeasure([4.0, 0.0], np.eye(2)), forward_map, target, 0.01, 0.0)
    classification = classify_equilibrium(trace, forward_map, target)
    assert classification.label is EquilibriumLabel.NEITHER
    assert classification.conditional_distance == pytest.approx(classification.marginal_distance)


def test_gaussian_trace_is_classified_conditional():
    forward_map = LinearForwardMap([[1.0], [0.0]])
    target = GaussianMeasure([1.0, 2.0], [[1.0, 0.5], [0.5, 1.0]])
    trace = gaussian_flow_ode(GaussianMeasure([2.0, 0.0], np.eye(2)), forward_map, target, 0.02, 15.0)
    classification = classify_equilibrium(trace, forward_map, target)
    assert classification.label is EquilibriumLabel.CONDITIONAL
    assert classification.conditional_distance < 1e-4
