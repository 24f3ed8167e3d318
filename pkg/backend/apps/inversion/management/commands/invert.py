# Standard library imports
from argparse import ArgumentParser
from pathlib import Path
from typing import Any

# Local application imports
from apps.common.management import StochInverseCommand
from apps.inversion.services import DEFAULT_SAMPLE_COUNT, direct_invert
from apps.maps.utils import load_map
from apps.measures.utils import load_measure, measure_to_payload, save_measure


# Direct inversion of a data file
class Command(StochInverseCommand):
    """Write ``G^{-1} # data`` to ``--out``, or print it when no output is given."""

    help = "Direct inversion of a data measure through a forward map."

    # Command arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--map", type=Path, required=True, help="Forward map file.")
        parser.add_argument("--data", type=Path, required=True, help="Data measure file.")
        parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLE_COUNT, help="Samples for singular images.")

    # Command body
    def run(self, **options: Any) -> bool:
        # Invert
        result = direct_invert(
            load_map(options["map"]),
            load_measure(options["data"]),
            sample_count=options["samples"],
            seed=options["seed"],
        )

        # Write or print the reconstruction
        if options["out"] is None:
            self.emit(measure_to_payload(result))
        else:
            save_measure(result, options["out"])
            self.info(f"Wrote {options['out']}", **options)
        return True
