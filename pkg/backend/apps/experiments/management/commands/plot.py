# Standard library imports
from argparse import ArgumentParser
from pathlib import Path
from typing import Any

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.management import StochInverseCommand
from apps.experiments.services import emit_plot
from apps.experiments.types import PlotKind


# SVG figure from a result table
class Command(StochInverseCommand):
    """Draw a decay curve, L-curve, stability ratio or density heatmap into ``--out``."""

    help = "Draw an SVG figure from a CSV result table."

    # Command arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--csv", type=Path, required=True, help="Input table.")
        parser.add_argument("--kind", choices=[kind.value for kind in PlotKind], required=True)

    # Command body
    def run(self, **options: Any) -> bool:
        if options["out"] is None:
            raise ConfigError({"out": ["The plot command needs --out."]})
        path = emit_plot(options["csv"], options["kind"], options["out"])
        self.info(f"Wrote {path}", **options)
        return True
