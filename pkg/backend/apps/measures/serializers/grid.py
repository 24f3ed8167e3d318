# Standard library imports
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import InvalidMeasureError, ZeroMassError
from apps.common.serializers import VectorField
from apps.measures.services.normalize import normalize
from apps.measures.types import GridMeasure


# Grid measure serializer
class GridMeasureSerializer(serializers.Serializer):
    """Serializer for grid measure payloads.

    The payload carries the grid header and a flat row-major density array.
    Validated data carries the built ``GridMeasure`` under ``measure``.

    Attributes:
        lower (VectorField): Lower corner.
        upper (VectorField): Upper corner.
        shape (ListField): Cells per axis.
        density (VectorField): Flat row-major densities.
        renormalize (BooleanField): Rescale the density to unit mass.
    """

    # Grid header fields
    lower = VectorField(help_text=_("Lower corner of the box."))
    upper = VectorField(help_text=_("Upper corner of the box."))
    shape = serializers.ListField(
        child=serializers.IntegerField(min_value=1, max_value=100_000),
        min_length=1,
        help_text=_("Number of cells per axis."),
    )

    # Density values
    density = VectorField(help_text=_("Density values, flat and row-major."))

    # Optional renormalization
    renormalize = serializers.BooleanField(default=False, help_text=_("Rescale the density to unit mass."))

    # Build the measure
    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Build the grid measure and report invariant violations.

        Args:
            attrs (dict[str, Any]): Field values.

        Returns:
            dict[str, Any]: Attributes with the ``measure`` key added.

        Raises:
            serializers.ValidationError: If header and density disagree.
        """

        # Header consistency
        if not len(attrs["lower"]) == len(attrs["upper"]) == len(attrs["shape"]):
            raise serializers.ValidationError(
                {"shape": [_("lower, upper and shape must have one entry per axis.")]},
            ) from None

        try:
            # Build the measure, optionally rescaling
            measure = GridMeasure(
                attrs["lower"],
                attrs["upper"],
                tuple(attrs["shape"]),
                attrs["density"],
                require_unit_mass=not attrs["renormalize"],
            )
            if attrs["renormalize"]:
                measure = normalize(measure)
        except (InvalidMeasureError, ZeroMassError) as exc:
            # Report on the density field
            raise serializers.ValidationError({"density": [exc.message]}) from None

        # Store the measure
        attrs["measure"] = measure

        # Return the validated attributes
        return attrs

    # Serialize a measure
    def to_representation(self, instance: GridMeasure) -> dict[str, Any]:
        """Return the JSON payload of a grid measure.

        Args:
            instance (GridMeasure): The measure.

        Returns:
            dict[str, Any]: The payload.
        """

        return {
            "type": "grid",
            "lower": instance.lower.tolist(),
            "upper": instance.upper.tolist(),
            "shape": list(instance.shape),
            "density": instance.density.reshape(-1).tolist(),
        }
