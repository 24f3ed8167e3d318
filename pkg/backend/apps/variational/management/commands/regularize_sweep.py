# Standard library imports
from argparse import ArgumentParser
from pathlib import Path
from typing import Any

# Third-party imports
import numpy as np

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.management import StochInverseCommand
from apps.common.utils import parse_float_list, write_csv
from apps.divergences.services import wasserstein_distance
from apps.maps.types import LinearForwardMap
from apps.maps.utils import load_map
from apps.measures.services import second_moment
from apps.measures.utils import load_measure
from apps.variational.services import balanced_alpha, tikhonov_sweep

# Default ladder of weights
DEFAULT_ALPHAS = ",".join(f"{alpha:.6g}" for alpha in np.logspace(-3, 1, 12))


# L-curve table of the Tikhonov W2 solver
class Command(StochInverseCommand):
    """Write ``alpha,error_w2,noise_term,reg_term,bound`` rows to ``--out`` or stdout."""

    help = "Sweep of the W2-W2 regularization weight against a known truth."

    # Command arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--map", type=Path, required=True, help="Linear forward map file.")
        parser.add_argument("--truth", type=Path, required=True, help="True data measure file.")
        parser.add_argument("--data", type=Path, required=True, help="Noisy data measure file.")
        parser.add_argument("--alphas", default=DEFAULT_ALPHAS, help="Comma separated positive weights.")

    # Command body
    def run(self, **options: Any) -> bool:
        # Inputs
        alphas = parse_float_list(options["alphas"], "alphas")
        if not alphas or min(alphas) <= 0:
            raise ConfigError({"alphas": ["Expected at least one weight, all positive."]})
        forward_map = load_map(options["map"])
        if not isinstance(forward_map, LinearForwardMap):
            raise ConfigError({"map": ["The sweep needs a linear map."]})
        truth = load_measure(options["truth"])
        data = load_measure(options["data"])

        # Sweep
        frame = tikhonov_sweep(forward_map, truth, data, alphas)
        noise = float(wasserstein_distance(truth, data)["value"])
        self.info(f"Balanced alpha {balanced_alpha(forward_map, noise, second_moment(truth)):.6g}", **options)

        # Print or write the table
        if options["out"] is None:
            self.stdout.write(frame.to_csv(index=False, lineterminator="\n"), ending="")
        else:
            write_csv(options["out"], frame)
        return True
