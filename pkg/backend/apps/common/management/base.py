# Standard library imports
import logging
from argparse import ArgumentParser
from pathlib import Path
from typing import Any

# Third-party imports
from django.core.management.base import BaseCommand, CommandError

# Local application imports
from apps.common.exceptions import ConfigError, NumericalError, SchemaError, StochInverseError
from apps.common.renderers import ArtifactJSONRenderer

# Exit codes shared by every subcommand
EXIT_OK = 0
EXIT_VERDICT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

# Get the logger
logger = logging.getLogger(__name__)


# Base class for the project subcommands
class StochInverseCommand(BaseCommand):
    """Base class for the StochInverse management commands.

    Adds the global ``--seed``, ``--out`` and ``--quiet`` flags and maps project
    errors onto process exit codes: 0 success, 1 verdict failure, 2 configuration
    error, 3 numerical error. Subclasses implement ``add_command_arguments`` and
    ``run``; ``run`` returns ``True`` when all verdicts pass.

    Attributes:
        requires_system_checks (list): No system checks, there are no models.
    """

    # There are no models to check
    requires_system_checks = []

    # Add the global and command arguments
    def add_arguments(self, parser: ArgumentParser) -> None:
        """Add the global flags and the command's own arguments.

        Args:
            parser (ArgumentParser): The command's argument parser.
        """

        # Global flags
        parser.add_argument("--seed", type=int, default=0, help="Seed for every random stream.")
        parser.add_argument("--out", type=Path, default=None, help="Output file or directory.")
        parser.add_argument("--quiet", action="store_true", help="Only print results and errors.")

        # Command specific arguments
        self.add_command_arguments(parser)

    # Hook for command specific arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        """Add command specific arguments.

        Args:
            parser (ArgumentParser): The command's argument parser.
        """

    # Run the command body
    def run(self, **options: Any) -> bool:
        """Execute the command.

        Args:
            **options: Parsed command line options.

        Returns:
            bool: True when every verdict passed.
        """

        # Subclasses provide the body
        raise NotImplementedError

    # Handle the command
    def handle(self, *args: Any, **options: Any) -> None:
        """Run the command and translate project errors into exit codes.

        Args:
            *args: Positional arguments.
            **options: Parsed command line options.

        Raises:
            CommandError: With the exit code matching the failure.
        """

        # Quiet mode silences informational logging
        if options.get("quiet"):
            options["verbosity"] = 0
            logging.getLogger().setLevel(logging.WARNING)
            logging.getLogger("apps").setLevel(logging.WARNING)

        try:
            # Run the command body
            passed = self.run(**options)
        except (ConfigError, SchemaError) as exc:
            # Configuration and schema errors
            raise CommandError(exc.message, returncode=EXIT_CONFIG_ERROR) from exc
        except NumericalError as exc:
            # Numerical failures
            logger.exception("Numerical error in %s", self.__class__.__module__)
            raise CommandError(exc.message, returncode=EXIT_NUMERICAL_ERROR) from exc
        except StochInverseError as exc:
            # Any other project error
            raise CommandError(exc.message, returncode=exc.exit_code) from exc

        # Verdict failures
        if passed is False:
            raise CommandError("One or more verdicts failed.", returncode=EXIT_VERDICT_FAILURE)

    # Print a JSON record on stdout
    def emit(self, record: Any) -> None:
        """Write a JSON record to standard output.

        Args:
            record (Any): Value to render.
        """

        # Render and write
        self.stdout.write(ArtifactJSONRenderer().render(record).decode("utf-8"))

    # Print an informational message unless quiet
    def info(self, message: str, **options: Any) -> None:
        """Write an informational message when verbosity allows it.

        Args:
            message (str): The message.
            **options: Parsed options carrying ``verbosity``.
        """

        # Only at normal verbosity or higher
        if options.get("verbosity", 1) >= 1:
            self.stderr.write(message)
