# Standard library imports
from typing import Any

# Third-party imports
from django.conf import settings


# Read a project setting with a fallback
def get_setting(name: str, default: Any) -> Any:
    """Read a project setting, falling back when Django is not configured.

    Args:
        name (str): Setting name, e.g. ``STOCHINVERSE_OT_SIZE_CAP``.
        default (Any): Value used when the setting is absent.

    Returns:
        Any: The configured value or the default.
    """

    # Library use without a settings module
    if not settings.configured:
        return default

    # Return the configured value
    return getattr(settings, name, default)
