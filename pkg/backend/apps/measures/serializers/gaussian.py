# Standard library imports
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import InvalidMeasureError
from apps.common.serializers import MatrixField, VectorField
from apps.measures.types import GaussianMeasure


# Gaussian measure serializer
class GaussianMeasureSerializer(serializers.Serializer):
    """Serializer for ``{"mean": [...], "cov": [[...]]}`` payloads.

    Validated data carries the built ``GaussianMeasure`` under ``measure``.

    Attributes:
        mean (VectorField): Mean vector.
        cov (MatrixField): Covariance matrix.
    """

    # Mean vector field
    mean = VectorField(help_text=_("Mean vector."))

    # Covariance matrix field
    cov = MatrixField(help_text=_("Symmetric positive definite covariance matrix."))

    # Build the measure
    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        """Build the Gaussian and report invariant violations on ``cov``.

        Args:
            attrs (dict[str, Any]): Field values.

        Returns:
            dict[str, Any]: Attributes with the ``measure`` key added.

        Raises:
            serializers.ValidationError: If the covariance is not valid.
        """

        try:
            # Build the measure
            attrs["measure"] = GaussianMeasure(attrs["mean"], attrs["cov"])
        except InvalidMeasureError as exc:
            # Report on the covariance field
            raise serializers.ValidationError({"cov": [exc.message]}) from None

        # Return the validated attributes
        return attrs

    # Serialize a measure
    def to_representation(self, instance: GaussianMeasure) -> dict[str, Any]:
        """Return the JSON payload of a Gaussian.

        Args:
            instance (GaussianMeasure): The measure.

        Returns:
            dict[str, Any]: The payload.
        """

        return {"type": "gaussian", "mean": instance.mean.tolist(), "cov": instance.cov.tolist()}
