# Standard library imports
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import ShapeError
from apps.common.serializers import FiniteFloatField, MatrixField
from apps.maps.types import LinearForwardMap


# Linear forward map serializer
class LinearMapSerializer(serializers.Serializer):
    """Serializer for ``{"matrix": [[...]]}`` payloads.

    Validated data carries the built ``LinearForwardMap`` under ``map``.

    Attributes:
        matrix (MatrixField): The matrix A.
        holder_exponent (FiniteFloatField): Regularity exponent of the inverse.
    """

    # Matrix field
    matrix = MatrixField(help_text=_("Forward matrix, one list per row."))

    # Regularity metadata
    holder_exponent = FiniteFloatField(required=False, default=1.0, min_value=0.0, max_value=1.0)

    # Build the map
    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Build the map and report invalid matrices on ``matrix``.

        Args:
            attrs (dict[str, Any]): Field values.

        Returns:
            dict[str, Any]: Attributes with the ``map`` key added.

        Raises:
            serializers.ValidationError: If the matrix is not valid.
        """

        try:
            # Build the map
            attrs["map"] = LinearForwardMap(attrs["matrix"], holder_exponent=attrs["holder_exponent"])
        except ShapeError as exc:
            raise serializers.ValidationError({"matrix": [exc.message]}) from None

        # Return the validated attributes
        return attrs

    # Serialize a map
    def to_representation(self, instance: LinearForwardMap) -> dict[str, Any]:
        """Return the JSON payload of a linear map.

        Args:
            instance (LinearForwardMap): The map.

        Returns:
            dict[str, Any]: The payload.
        """

        return {"matrix": instance.matrix.tolist(), "holder_exponent": instance.holder_exponent}
