# Standard library imports
from collections.abc import Iterable
from pathlib import Path
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import ConfigError
from apps.measures.types import GaussianMeasure, GridMeasure, Measure, ParticleMeasure

# Carrier classes by name
CARRIER_TYPES: dict[str, type] = {
    "gaussian": GaussianMeasure,
    "grid": GridMeasure,
    "particles": ParticleMeasure,
}


# Measure field for nested configuration payloads
class MeasureField(serializers.Field):
    """Field accepting an inline measure payload or a ``{"file": path}`` reference.

    File references are resolved against ``context["base_dir"]`` when present.
    The field may restrict the accepted carriers.

    Attributes:
        carriers (tuple[str, ...]): Accepted carrier names.
        default_error_messages (dict[str, str]): Error messages of the field.
    """

    # Error messages
    default_error_messages = {
        "invalid": _("Expected a measure object or a file reference."),
        "carrier": _("Measure carrier must be one of: {carriers}."),
    }

    # Initialize the field
    def __init__(self, carriers: Iterable[str] = ("gaussian", "grid", "particles"), **kwargs: Any) -> None:
        """Initialize the field.

        Args:
            carriers (Iterable[str]): Accepted carrier names.
            **kwargs: Keyword arguments for ``Field``.
        """

        # Store the accepted carriers
        self.carriers = tuple(carriers)
        super().__init__(**kwargs)

    # Convert the incoming payload
    def to_internal_value(self, data: Any) -> Measure:
        """Build the measure from an inline payload or a file.

        Args:
            data (Any): Incoming value.

        Returns:
            Measure: The measure.
        """

        # Local imports, the file helpers import the carrier serializers
        from apps.measures.utils.measure_files import load_measure, measure_from_payload  # noqa: PLC0415

        # Payload must be an object
        if not isinstance(data, dict):
            self.fail("invalid")

        try:
            # File references
            if "file" in data:
                if not isinstance(data["file"], str) or not data["file"]:
                    self.fail("invalid")
                base_dir = Path(self.context.get("base_dir", "."))
                measure = load_measure(base_dir / data["file"])
            else:
                # Inline payloads
                measure = measure_from_payload(data)
        except ConfigError as exc:
            # Surface the nested field errors
            raise serializers.ValidationError(exc.errors) from None

        # Restrict the carrier
        if not isinstance(measure, tuple(CARRIER_TYPES[name] for name in self.carriers)):
            self.fail("carrier", carriers=", ".join(self.carriers))

        # Return the measure
        return measure

    # Serialize a measure
    def to_representation(self, value: Measure) -> dict[str, Any]:
        """Return the JSON payload of a measure.

        Args:
            value (Measure): The measure.

        Returns:
            dict[str, Any]: The payload.
        """

        # Local import, see to_internal_value
        from apps.measures.utils.measure_files import measure_to_payload  # noqa: PLC0415

        return measure_to_payload(value)
