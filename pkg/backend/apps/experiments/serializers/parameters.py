# Standard library imports
from typing import Any

# Third-party imports
import numpy as np
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.serializers import FiniteFloatField
from apps.common.utils import get_setting
from apps.divergences.services import METRICS
from apps.flow.serializers import FlowConfigSerializer
from apps.inversion.services import DEFAULT_SAMPLE_COUNT
from apps.maps.serializers import MapField
from apps.maps.types import ForwardMap
from apps.measures.serializers import MeasureField
from apps.measures.types import Measure

# Default regularization weights of a sweep
DEFAULT_SWEEP_ALPHAS = [float(alpha) for alpha in np.logspace(-3, 1, 12)]


# Reject measures living in the wrong space
def check_dimensions(forward_map: ForwardMap, *, inputs: dict[str, Measure], outputs: dict[str, Measure]) -> None:
    """Check measure dimensions against the map.

    Args:
        forward_map (ForwardMap): The map.
        inputs (dict[str, Measure]): Parameter-space measures by field name.
        outputs (dict[str, Measure]): Data-space measures by field name.

    Raises:
        serializers.ValidationError: Keyed by the first offending field.
    """

    for name, measure in inputs.items():
        if measure is not None and measure.dim != forward_map.n_inputs:
            raise serializers.ValidationError({name: [_("Expected a measure on the parameter space.")]})
    for name, measure in outputs.items():
        if measure is not None and measure.dim != forward_map.n_outputs:
            raise serializers.ValidationError({name: [_("Expected a measure on the data space.")]})


# Distance between two measures
class DistanceParametersSerializer(serializers.Serializer):
    """Parameters of a ``distance`` experiment.

    With ``expected`` set, the run checks ``|value - expected| <= tolerance``.
    """

    mu = MeasureField()
    nu = MeasureField()
    metric = serializers.ChoiceField(choices=METRICS, default="w2")
    sinkhorn_eps = FiniteFloatField(required=False, allow_null=True, default=None)
    expected = FiniteFloatField(required=False, allow_null=True, default=None)
    tolerance = FiniteFloatField(min_value=0.0, default=1e-6)

    def validate_sinkhorn_eps(self, value: float | None) -> float | None:
        if value is not None and value <= 0:
            raise serializers.ValidationError(_("Must be positive."))
        return value

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        if attrs["mu"].dim != attrs["nu"].dim:
            raise serializers.ValidationError({"nu": [_("Both measures must have the same dimension.")]})
        return attrs


# Direct inversion of a data measure
class InvertParametersSerializer(serializers.Serializer):
    """Parameters of an ``invert`` experiment.

    With ``truth`` set, the run checks ``W2(solution, truth) <= tolerance``.
    """

    map = MapField()
    data = MeasureField()
    samples = serializers.IntegerField(min_value=1, max_value=1_000_000, default=DEFAULT_SAMPLE_COUNT)
    truth = MeasureField(required=False, allow_null=True, default=None)
    tolerance = FiniteFloatField(min_value=0.0, default=1e-6)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        check_dimensions(attrs["map"], inputs={"truth": attrs["truth"]}, outputs={"data": attrs["data"]})
        return attrs


# Stability sweep under data perturbations
class StabilityParametersSerializer(serializers.Serializer):
    """Parameters of a ``stability`` experiment."""

    map = MapField(linear_only=True)
    data = MeasureField(carriers=("gaussian",))
    metric = serializers.ChoiceField(choices=["w2", "kl"], default="w2")
    perturbations = serializers.ListField(
        child=FiniteFloatField(min_value=0.0),
        min_length=1,
        max_length=64,
        default=[0.1, 0.2, 0.4],
    )
    family = serializers.ChoiceField(choices=["mean_shift", "covariance_inflation"], default="mean_shift")
    workers = serializers.IntegerField(min_value=1, max_value=32, default=1)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        check_dimensions(attrs["map"], inputs={}, outputs={"data": attrs["data"]})
        return attrs


# Tikhonov weight sweep against a known truth
class RegularizeSweepParametersSerializer(serializers.Serializer):
    """Parameters of a ``regularizeSweep`` experiment.

    Defaults to twelve weights log-spaced over ``[1e-3, 10]``. The map must
    have full column rank and no fewer outputs than inputs.
    """

    map = MapField(linear_only=True)
    truth = MeasureField()
    data = MeasureField()
    alphas = serializers.ListField(child=FiniteFloatField(), min_length=1, max_length=256, default=DEFAULT_SWEEP_ALPHAS)

    def validate_alphas(self, value: list[float]) -> list[float]:
        if min(value) <= 0:
            raise serializers.ValidationError(_("Weights must be positive."))
        return value

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        if attrs["map"].n_outputs < attrs["map"].n_inputs:
            raise serializers.ValidationError({"map": [_("Expected at least as many outputs as inputs.")]})
        if not attrs["map"].is_full_rank:
            raise serializers.ValidationError({"map": [_("Expected a map of full column rank.")]})
        check_dimensions(attrs["map"], inputs={}, outputs={"truth": attrs["truth"], "data": attrs["data"]})
        return attrs


# One gradient flow run
class FlowConvergenceParametersSerializer(FlowConfigSerializer):
    """Parameters of a ``flowConvergence`` experiment, the same fields as a flow configuration."""

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        check_dimensions(attrs["map"], inputs={}, outputs={"target": attrs["target"]})
        return super().validate(attrs)


# KL and W2 flows from one initial law
class EquilibriumContrastParametersSerializer(serializers.Serializer):
    """Parameters of an ``equilibriumContrast`` experiment.

    The KL flow fits a Gaussian to the pushed particles, the W2 flow matches
    quasi-random target atoms. Both start from the same scrambled Sobol sample
    of ``init``.
    """

    map = MapField(linear_only=True)
    target = MeasureField(carriers=("gaussian",))
    init = MeasureField(carriers=("gaussian",))
    particles = serializers.IntegerField(min_value=2, max_value=20_000, default=512)
    target_samples = serializers.IntegerField(min_value=1, max_value=20_000, default=512)
    dt = FiniteFloatField(default=0.1)
    t_max = FiniteFloatField(min_value=0.0, default=5.0)
    record_every = serializers.IntegerField(min_value=1, default=10)

    def validate_dt(self, value: float) -> float:
        if value <= 0:
            raise serializers.ValidationError(_("Must be positive."))
        return value

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        check_dimensions(attrs["map"], inputs={"init": attrs["init"]}, outputs={"target": attrs["target"]})
        if 0 < attrs["t_max"] < attrs["dt"]:
            raise serializers.ValidationError({"t_max": [_("Must be zero or at least dt.")]})
        cap = int(get_setting("STOCHINVERSE_OT_SIZE_CAP", 1_000_000))
        if attrs["particles"] * attrs["target_samples"] > cap:
            raise serializers.ValidationError(
                {"target_samples": [_("Particles times target samples exceed the transport size cap.")]}
            )
        return attrs
