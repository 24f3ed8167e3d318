# Standard library imports
from typing import Any

# Third-party imports
import numpy as np
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import InvalidMeasureError, ZeroMassError
from apps.common.serializers import MatrixField, VectorField
from apps.measures.services.normalize import normalize
from apps.measures.types import ParticleMeasure


# Particle measure serializer
class ParticleMeasureSerializer(serializers.Serializer):
    """Serializer for inline particle clouds.

    Weights default to uniform; given weights are rescaled to unit mass.
    Validated data carries the built ``ParticleMeasure`` under ``measure``.

    Attributes:
        points (MatrixField): Atom locations, one row per atom.
        weights (VectorField): Optional nonnegative masses.
    """

    # Atom locations
    points = MatrixField(help_text=_("Atom locations, one row per atom."))

    # Atom masses
    weights = VectorField(required=False, help_text=_("Nonnegative atom masses."))

    # Build the measure
    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Build the particle measure.

        Args:
            attrs (dict[str, Any]): Field values.

        Returns:
            dict[str, Any]: Attributes with the ``measure`` key added.

        Raises:
            serializers.ValidationError: If weights are invalid.
        """

        # Uniform weights unless given
        points = attrs["points"]
        weights = attrs.get("weights")
        if weights is None:
            weights = np.ones(points.shape[0])

        try:
            # Build and normalize the cloud
            attrs["measure"] = normalize(ParticleMeasure(points, weights, require_unit_mass=False))
        except (InvalidMeasureError, ZeroMassError) as exc:
            # Report on the weights field
            raise serializers.ValidationError({"weights": [exc.message]}) from None

        # Return the validated attributes
        return attrs

    # Serialize a measure
    def to_representation(self, instance: ParticleMeasure) -> dict[str, Any]:
        """Return the JSON payload of a particle cloud.

        Args:
            instance (ParticleMeasure): The measure.

        Returns:
            dict[str, Any]: The payload.
        """

        return {"type": "particles", "points": instance.points.tolist(), "weights": instance.weights.tolist()}
