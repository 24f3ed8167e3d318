# Standard library imports
from typing import Any

# Third-party imports
from django.utils.translation import gettext_lazy as _


# Base error for the whole project
class StochInverseError(Exception):
    """Base class for every error raised by the StochInverse apps.

    Subclasses set ``default_message`` and ``exit_code``. The exit code is what
    the management commands return when the error reaches the command line.

    Attributes:
        default_message (str): Message used when none is given.
        exit_code (int): Process exit code for the command line.
        context (dict[str, Any]): Extra values describing the failure.
    """

    # Message used when the caller gives none
    default_message = _("StochInverse error.")

    # Exit code reported by management commands
    exit_code = 3

    # Initialize the error
    def __init__(self, message: str | None = None, **context: Any) -> None:
        """Initialize the error.

        Args:
            message (str | None): Human readable message.
            **context: Values describing the failure, kept for logging.
        """

        # Store the context values
        self.context = context

        # Store the message
        self.message = str(message if message is not None else self.default_message)

        # Initialize the parent exception
        super().__init__(self.message)
