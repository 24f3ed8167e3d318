#!/usr/bin/env python

# -----------------------------------------
# StochInverse command line
# -----------------------------------------

# Standard library imports
import os
import sys
from typing import NoReturn


# Entry point of every subcommand
def main() -> NoReturn:
    """
    Run a StochInverse subcommand.

    ``python manage.py <subcommand>`` dispatches to the management commands of
    the apps: distance, invert, stability, regularize, regularize_sweep, flow,
    plot and experiment. Exit codes are 0 on success, 1 when a verdict fails,
    2 for invalid configurations and 3 for numerical errors.

    Raises:
        ImportError: If Django is not installed or not in PYTHONPATH.
    """

    # Settings module unless the environment names another
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")

    try:
        # Import Django management module
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(  # noqa: TRY003
            "Couldn't import Django. Install backend/requirements.txt "  # noqa: EM101
            "into the active environment.",
        ) from exc

    # Dispatch to the subcommand
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
