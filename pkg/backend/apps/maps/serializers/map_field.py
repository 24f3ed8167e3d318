# Standard library imports
from pathlib import Path
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

# Local application imports
from apps.common.exceptions import ConfigError
from apps.maps.types import ForwardMap, LinearForwardMap


# Forward map field for nested configuration payloads
class MapField(serializers.Field):
    """Field accepting ``{"matrix": ...}``, ``{"file": path}`` or ``{"name": ...}``.

    Named maps come from the smooth map catalog. File references are resolved
    against ``context["base_dir"]`` when present.

    Attributes:
        linear_only (bool): Whether smooth maps are rejected.
        default_error_messages (dict[str, str]): Error messages of the field.
    """

    # Error messages
    default_error_messages = {
        "invalid": _("Expected a map object with a matrix, a file or a name."),
        "linear": _("A linear map is required."),
    }

    # Initialize the field
    def __init__(self, *, linear_only: bool = False, **kwargs: Any) -> None:
        """Initialize the field.

        Args:
            linear_only (bool): Whether smooth maps are rejected.
            **kwargs: Keyword arguments for ``Field``.
        """

        self.linear_only = linear_only
        super().__init__(**kwargs)

    # Convert the incoming payload
    def to_internal_value(self, data: Any) -> ForwardMap:
        """Build the map from the payload.

        Args:
            data (Any): Incoming value.

        Returns:
            ForwardMap: The forward map.
        """

        # Local import, the file helpers import the map serializer
        from apps.maps.utils.map_files import load_map, map_from_payload  # noqa: PLC0415

        # Payload must be an object
        if not isinstance(data, dict):
            self.fail("invalid")

        try:
            # File references
            if "file" in data:
                if not isinstance(data["file"], str) or not data["file"]:
                    self.fail("invalid")
                forward_map = load_map(Path(self.context.get("base_dir", ".")) / data["file"])
            else:
                # Inline and named maps
                forward_map = map_from_payload(data)
        except ConfigError as exc:
            raise serializers.ValidationError(exc.errors) from None

        # Restrict to linear maps
        if self.linear_only and not isinstance(forward_map, LinearForwardMap):
            self.fail("linear")
        return forward_map

    # Serialize a map
    def to_representation(self, value: ForwardMap) -> dict[str, Any]:
        """Return the JSON payload of a linear map, or the dimensions of a smooth one.

        Args:
            value (ForwardMap): The map.

        Returns:
            dict[str, Any]: The payload.
        """

        from apps.maps.utils.map_files import map_to_payload  # noqa: PLC0415

        return map_to_payload(value)
