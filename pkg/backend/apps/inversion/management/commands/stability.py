# Standard library imports
from argparse import ArgumentParser
from pathlib import Path
from typing import Any

# Third-party imports
import pandas as pd

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.management import StochInverseCommand
from apps.common.utils import parse_float_list, write_csv
from apps.inversion.services import stability_sweep
from apps.inversion.types import STABILITY_COLUMNS
from apps.maps.types import LinearForwardMap
from apps.maps.utils import load_map
from apps.measures.types import GaussianMeasure
from apps.measures.utils import load_measure


# Stability sweep on a Gaussian data file
class Command(StochInverseCommand):
    """Write a CSV with one stability report per perturbation level."""

    help = "Stability sweep of direct inversion under data perturbations."

    # Command arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--map", type=Path, required=True, help="Linear forward map file.")
        parser.add_argument("--data", type=Path, required=True, help="Gaussian data file.")
        parser.add_argument("--metric", choices=["w2", "kl"], default="w2")
        parser.add_argument("--perturb", default="0.1,0.2,0.4", help="Comma separated perturbation levels.")
        parser.add_argument("--family", choices=["mean_shift", "covariance_inflation"], default="mean_shift")
        parser.add_argument("--workers", type=int, default=1)

    # Command body
    def run(self, **options: Any) -> bool:
        # Inputs
        forward_map = load_map(options["map"])
        data = load_measure(options["data"])
        if not isinstance(forward_map, LinearForwardMap):
            raise ConfigError({"map": ["Stability sweeps need a linear map."]})
        if not isinstance(data, GaussianMeasure):
            raise ConfigError({"data": ["Stability sweeps perturb a Gaussian data measure."]})

        # Sweep
        reports = stability_sweep(
            forward_map,
            data,
            parse_float_list(options["perturb"], "perturb"),
            metric=options["metric"],
            family=options["family"],
            workers=options["workers"],
        )

        # Table of reports
        frame = pd.DataFrame([report.as_row() for report in reports], columns=STABILITY_COLUMNS)
        if options["out"] is None:
            self.stdout.write(frame.to_csv(index=False, lineterminator="\n"), ending="")
        else:
            write_csv(options["out"], frame)

        # Every level must satisfy its bound
        return all(report.satisfied for report in reports)
