# Standard library imports
from argparse import ArgumentParser
from pathlib import Path
from typing import Any

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.management import StochInverseCommand
from apps.common.utils import write_json
from apps.divergences.services import METRICS, measure_distance
from apps.measures.utils import load_measure


# Distance between two measure files
class Command(StochInverseCommand):
    """Print ``{"metric", "value", "iterations"?}`` for two measure files."""

    help = "Distance or divergence between two measures."

    # Command arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--metric", choices=METRICS, default="w2")
        parser.add_argument("--mu", type=Path, required=True, help="First measure file.")
        parser.add_argument("--nu", type=Path, required=True, help="Second measure file.")
        parser.add_argument("--sinkhorn-eps", type=float, default=None, help="Use Sinkhorn with this epsilon.")

    # Command body
    def run(self, **options: Any) -> bool:
        # Entropic regularization must be positive
        if options["sinkhorn_eps"] is not None and not options["sinkhorn_eps"] > 0:
            raise ConfigError({"sinkhorn_eps": ["Must be positive."]})

        # Load both measures
        mu = load_measure(options["mu"])
        nu = load_measure(options["nu"])

        # Compute and print the record
        record = measure_distance(options["metric"], mu, nu, epsilon=options["sinkhorn_eps"])
        self.emit(record)

        # Optional copy on disk
        if options["out"] is not None:
            write_json(options["out"], record)
        return True
