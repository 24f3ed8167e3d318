# Standard library imports
from pathlib import Path
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.utils import get_setting
from apps.experiments.serializers.parameters import (
    DistanceParametersSerializer,
    EquilibriumContrastParametersSerializer,
    FlowConvergenceParametersSerializer,
    InvertParametersSerializer,
    RegularizeSweepParametersSerializer,
    StabilityParametersSerializer,
)
from apps.experiments.types import ExperimentConfig, ExperimentKind

# Largest accepted seed
MAX_SEED = 2**64 - 1

# Parameter serializer per kind
PARAMETER_SERIALIZERS: dict[ExperimentKind, type[serializers.Serializer]] = {
    ExperimentKind.DISTANCE: DistanceParametersSerializer,
    ExperimentKind.INVERT: InvertParametersSerializer,
    ExperimentKind.STABILITY: StabilityParametersSerializer,
    ExperimentKind.REGULARIZE_SWEEP: RegularizeSweepParametersSerializer,
    ExperimentKind.FLOW_CONVERGENCE: FlowConvergenceParametersSerializer,
    ExperimentKind.EQUILIBRIUM_CONTRAST: EquilibriumContrastParametersSerializer,
}


# Experiment configuration file
class ExperimentConfigSerializer(serializers.Serializer):
    """Serializer for one experiment JSON file.

    The ``parameters`` object is validated by the serializer of the ``kind``.
    Context keys:

    - ``base_dir``: directory of the config file; measure and map file
      references and a relative ``output_dir`` resolve against it.
    - ``default_seed``: seed used when the file has none.
    - ``output_dir``: overrides the configured output directory.

    Without either output directory, runs go to ``STOCHINVERSE_OUTPUT_DIR/<name>``.
    Validated data carries the built ``ExperimentConfig`` under ``config``.

    Attributes:
        name (RegexField): Non-blank name, also the default directory name.
        kind (ChoiceField): Experiment kind.
        seed (IntegerField): Seed of every random stream.
        parameters (DictField): Kind specific parameters.
        output_dir (CharField): Output directory.
    """

    name = serializers.RegexField(
        r"^[A-Za-z0-9][A-Za-z0-9_.-]*$",
        max_length=128,
        error_messages={"invalid": _("Use letters, digits, '.', '_' and '-', starting with a letter or digit.")},
    )
    kind = serializers.ChoiceField(choices=[kind.value for kind in ExperimentKind])
    seed = serializers.IntegerField(min_value=0, max_value=MAX_SEED, required=False)
    parameters = serializers.DictField(default=dict)
    output_dir = serializers.CharField(required=False, max_length=4096)

    # Validate the parameters and build the configuration
    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Validate ``parameters`` for the kind and resolve seed and output directory.

        Args:
            attrs (dict[str, Any]): Field values.

        Returns:
            dict[str, Any]: Attributes with ``config`` added.

        Raises:
            serializers.ValidationError: With the parameter errors under ``parameters``.
        """

        # Resolve the seed
        kind = ExperimentKind(attrs["kind"])
        seed = attrs.get("seed", int(self.context.get("default_seed", 0)))
        base_dir = Path(self.context.get("base_dir", "."))

        # Kind specific parameters
        parameters = PARAMETER_SERIALIZERS[kind](
            data=attrs["parameters"],
            context={"base_dir": base_dir, "seed": seed},
        )
        if not parameters.is_valid():
            raise serializers.ValidationError({"parameters": parameters.errors})

        # Output directory, the override wins
        if self.context.get("output_dir") is not None:
            output_dir = Path(self.context["output_dir"])
        elif "output_dir" in attrs:
            output_dir = base_dir / attrs["output_dir"]
        else:
            output_dir = Path(get_setting("STOCHINVERSE_OUTPUT_DIR", "runs")) / attrs["name"]

        attrs["config"] = ExperimentConfig(
            name=attrs["name"],
            kind=kind,
            seed=seed,
            parameters=dict(parameters.validated_data),
            output_dir=output_dir,
            payload={**self.initial_data, "seed": seed},
        )
        return attrs
