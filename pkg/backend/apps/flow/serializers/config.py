# Standard library imports
import math
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import NumericalError
from apps.common.serializers import FiniteFloatField, VectorField
from apps.common.utils import get_setting
from apps.divergences.types import FDivergenceSpec
from apps.flow.services import reduced_gaussian
from apps.flow.types import FlowConfig, FlowObjective, FlowScheme, StateDensity
from apps.maps.serializers import MapField
from apps.maps.types import ForwardMap, LinearForwardMap
from apps.measures.serializers import MeasureField
from apps.measures.services import discretize_gaussian
from apps.measures.types import GaussianMeasure, Measure, ParticleMeasure

# Largest number of cells of a configured grid
MAX_GRID_CELLS = 4_000_000


# Box used to discretize Gaussians for the grid scheme
class GridBoxSerializer(serializers.Serializer):
    """Serializer for ``{"lower": [...], "upper": [...], "shape": [...]}``.

    Attributes:
        lower (VectorField): Lower corner.
        upper (VectorField): Upper corner.
        shape (ListField): Cells per axis.
    """

    lower = VectorField(help_text=_("Lower corner of the box."))
    upper = VectorField(help_text=_("Upper corner of the box."))
    shape = serializers.ListField(
        child=serializers.IntegerField(min_value=2, max_value=100_000),
        min_length=1,
        help_text=_("Number of cells per axis."),
    )

    # Consistent header
    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Check that the box has one entry per axis and positive widths.

        Args:
            attrs (dict[str, Any]): Field values.

        Returns:
            dict[str, Any]: The attributes.
        """

        if not len(attrs["lower"]) == len(attrs["upper"]) == len(attrs["shape"]):
            raise serializers.ValidationError({"shape": [_("Expected one entry per axis.")]})
        if any(high <= low for low, high in zip(attrs["lower"], attrs["upper"], strict=True)):
            raise serializers.ValidationError({"upper": [_("Upper corner must exceed the lower corner.")]})
        if math.prod(attrs["shape"]) > MAX_GRID_CELLS:
            raise serializers.ValidationError({"shape": [_("Grid has too many cells.")]})
        return attrs


# Flow run configuration
class FlowConfigSerializer(serializers.Serializer):
    """Serializer for the JSON configuration of a flow run.

    Validated data carries the built ``FlowConfig`` under ``config``, the initial
    state under ``init`` and the undiscretized target under ``target``. Particle
    schemes sample Gaussian initial laws with ``init_samples`` scrambled Sobol
    points. The grid scheme discretizes Gaussians on ``grid``, in ``Col(A)``
    coordinates when the grid has the rank dimension or ``reduced`` is set.
    The seed comes from ``context["seed"]``.
    """

    # Problem
    map = MapField(help_text=_("Forward map."))
    target = MeasureField(help_text=_("Data measure the flow is driven towards."))
    init = MeasureField(help_text=_("Initial state."))
    divergence = serializers.ChoiceField(choices=["kl", "chi2"], default="kl")

    # Discretization
    scheme = serializers.ChoiceField(choices=[scheme.value for scheme in FlowScheme], default=FlowScheme.PARTICLE_EULER)
    objective = serializers.ChoiceField(
        choices=[objective.value for objective in FlowObjective], default=FlowObjective.F_DIVERGENCE
    )
    state_density = serializers.ChoiceField(
        choices=[density.value for density in StateDensity], default=StateDensity.KDE
    )
    dt = FiniteFloatField(help_text=_("Time step."))
    t_max = FiniteFloatField(min_value=0.0, help_text=_("Final time."))
    bandwidth = FiniteFloatField(required=False, allow_null=True, default=None)
    record_every = serializers.IntegerField(min_value=1, default=1)
    kde_ratio = serializers.BooleanField(default=False)
    target_samples = serializers.IntegerField(min_value=1, max_value=100_000, default=512)
    init_samples = serializers.IntegerField(min_value=1, max_value=100_000, default=512)
    reduced = serializers.BooleanField(default=False)
    grid = GridBoxSerializer(required=False)

    # Outputs
    snapshot_times = serializers.ListField(child=FiniteFloatField(min_value=0.0), default=list)

    # Gaussian on the configured grid
    def _discretize(self, forward_map: ForwardMap, gaussian: GaussianMeasure, *, conditional: bool) -> Measure:
        box = self._validated_box
        if box is None:
            raise serializers.ValidationError({"grid": [_("The grid scheme needs a grid to discretize Gaussians.")]})
        reduced = isinstance(forward_map, LinearForwardMap) and (
            self._reduced or len(box["shape"]) < forward_map.n_outputs
        )
        if reduced:
            gaussian = reduced_gaussian(forward_map, gaussian, conditional=conditional)
        return discretize_gaussian(gaussian, box["lower"], box["upper"], box["shape"])

    # Settings a particle run needs before its first step
    def _check_particle_settings(self, attrs: dict[str, Any], init: ParticleMeasure) -> None:
        """Check the bandwidth and transport size of a particle run.

        Args:
            attrs (dict[str, Any]): Field values.
            init (ParticleMeasure): Initial atoms.

        Raises:
            serializers.ValidationError: Keyed by the field to change.
        """

        # Matching against target atoms
        if FlowObjective(attrs["objective"]) is FlowObjective.WASSERSTEIN:
            cap = int(get_setting("STOCHINVERSE_OT_SIZE_CAP", 1_000_000))
            if init.size * attrs["target_samples"] > cap:
                raise serializers.ValidationError(
                    {"target_samples": [_("Atoms times target samples exceed the transport size cap.")]}
                )
            return

        # Kernel estimates of the state or of target atoms
        target_atoms = isinstance(attrs["target"], ParticleMeasure)
        if target_atoms and not attrs["kde_ratio"]:
            raise serializers.ValidationError({"kde_ratio": [_("Particle targets need kde_ratio enabled.")]})
        kernel_state = StateDensity(attrs["state_density"]) is StateDensity.KDE
        if attrs["bandwidth"] is None and (kernel_state or target_atoms):
            raise serializers.ValidationError({"bandwidth": [_("Kernel density estimates need a bandwidth.")]})

    def validate_bandwidth(self, value: float | None) -> float | None:
        if value is not None and value <= 0:
            raise serializers.ValidationError(_("Must be positive."))
        return value

    # Build the run configuration
    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Build the initial state and the ``FlowConfig``.

        Args:
            attrs (dict[str, Any]): Field values.

        Returns:
            dict[str, Any]: Attributes with ``config`` added and ``init`` prepared.

        Raises:
            serializers.ValidationError: If the pieces do not fit together.
        """

        forward_map, target, init = attrs["map"], attrs["target"], attrs["init"]
        scheme = FlowScheme(attrs["scheme"])
        seed = int(self.context.get("seed", 0))
        self._validated_box = attrs.get("grid")
        self._reduced = attrs["reduced"]

        try:
            # Carriers each scheme starts from
            flow_target = target
            if scheme.is_particle and isinstance(init, GaussianMeasure):
                init = ParticleMeasure.uniform(init.quasi_sample(attrs["init_samples"], seed))
            if scheme is FlowScheme.GRID_FOKKER_PLANCK:
                if isinstance(target, GaussianMeasure):
                    flow_target = self._discretize(forward_map, target, conditional=True)
                if isinstance(init, GaussianMeasure):
                    init = self._discretize(forward_map, init, conditional=False)

            # Run settings
            config = FlowConfig(
                divergence=FDivergenceSpec.from_name(attrs["divergence"]),
                forward_map=forward_map,
                target=flow_target,
                dt=attrs["dt"],
                t_max=attrs["t_max"],
                scheme=scheme,
                bandwidth=attrs["bandwidth"],
                record_every=attrs["record_every"],
                objective=FlowObjective(attrs["objective"]),
                state_density=StateDensity(attrs["state_density"]),
                kde_ratio=attrs["kde_ratio"],
                target_samples=attrs["target_samples"],
                reduced=attrs["reduced"],
                seed=seed,
            )
        except ValueError as exc:
            raise serializers.ValidationError({"non_field_errors": [str(exc)]}) from None
        except NumericalError as exc:
            raise serializers.ValidationError({"non_field_errors": [exc.message]}) from None

        # Initial carrier and dimension
        if scheme is FlowScheme.GAUSSIAN_ODE and not isinstance(init, GaussianMeasure):
            raise serializers.ValidationError({"init": [_("The Gaussian scheme starts from a Gaussian.")]})
        if scheme.is_particle and not isinstance(init, ParticleMeasure):
            raise serializers.ValidationError({"init": [_("Particle schemes start from atoms or a Gaussian.")]})
        if scheme.is_particle and init.dim != forward_map.n_inputs:
            raise serializers.ValidationError({"init": [_("Particle states live in the parameter space.")]})
        if scheme.is_particle:
            self._check_particle_settings(attrs, init)

        attrs["init"] = init
        attrs["config"] = config
        return attrs
