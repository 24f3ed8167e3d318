# Standard library imports
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _

# Local application imports
from apps.common.exceptions.base import StochInverseError


# Invalid experiment configuration
class ConfigError(StochInverseError):
    """Configuration failed validation.

    Attributes:
        errors (dict[str, Any]): Field-level messages keyed by field name.
    """

    default_message = _("Invalid configuration.")
    exit_code = 2

    # Initialize the error with field-level messages
    def __init__(self, errors: dict[str, Any] | list[Any] | str, message: str | None = None) -> None:
        """Initialize the error.

        Args:
            errors (dict[str, Any] | list[Any] | str): Field-level messages, usually
                ``ValidationError.detail`` from a serializer.
            message (str | None): Optional summary message.
        """

        # Normalize the error detail into plain Python values
        self.errors = _plain(errors)

        # Build a summary from the field errors
        summary = message or f"{self.default_message} {self.errors}"

        # Initialize the parent exception
        super().__init__(summary)


# Invalid plot input table
class SchemaError(StochInverseError):
    """Tabular input is empty or misses required columns.

    Attributes:
        missing (list[str]): Names of the missing columns.
    """

    default_message = _("Input table does not match the expected schema.")
    exit_code = 2

    # Initialize the error with the missing columns
    def __init__(self, missing: list[str] | None = None, message: str | None = None) -> None:
        """Initialize the error.

        Args:
            missing (list[str] | None): Missing column names.
            message (str | None): Optional message overriding the default.
        """

        # Store the missing columns
        self.missing = list(missing or [])

        # Build the message
        if message is None and self.missing:
            message = f"{self.default_message} Missing columns: {', '.join(self.missing)}"

        # Initialize the parent exception
        super().__init__(message, missing=self.missing)


# Convert DRF error details to plain values
def _plain(value: Any) -> Any:
    # Recurse into mappings
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}

    # Recurse into sequences
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]

    # Everything else becomes a string
    return str(value)
