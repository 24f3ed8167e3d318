# Local application imports
from apps.common.exceptions import ConfigError


# Parse a comma separated list of numbers
def parse_float_list(text: str, field: str) -> list[float]:
    """Parse ``"0.1,0.2,0.4"`` into floats.

    Args:
        text (str): Comma separated numbers, may be empty.
        field (str): Option name used as the error key.

    Returns:
        list[float]: The numbers.

    Raises:
        ConfigError: If an entry is not a number.
    """

    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ConfigError({field: [f"Expected comma separated numbers, got {text!r}."]}) from None
