# Standard library imports
import json
from argparse import ArgumentParser
from pathlib import Path
from typing import Any

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.management import StochInverseCommand
from apps.common.utils import read_json
from apps.flow.serializers import FlowConfigSerializer
from apps.flow.services import run_flow, summarize_flow, write_flow_outputs


# Gradient flow run from a JSON configuration
class Command(StochInverseCommand):
    """Write ``trace.csv``, the requested snapshots and ``report.json`` into ``--out``."""

    help = "Integrate a Wasserstein gradient flow towards a data measure."

    # Command arguments
    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--config", type=Path, required=True, help="Flow configuration file.")

    # Command body
    def run(self, **options: Any) -> bool:
        # Read and validate the configuration
        try:
            payload = read_json(options["config"])
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError({"config": [str(exc)]}) from None
        serializer = FlowConfigSerializer(
            data=payload,
            context={"base_dir": options["config"].parent, "seed": options["seed"]},
        )
        if not serializer.is_valid():
            raise ConfigError(serializer.errors)
        data = serializer.validated_data
        cfg = data["config"]

        # Integrate and summarize
        trace = run_flow(data["init"], cfg)
        report, passed = summarize_flow(trace, cfg, data["target"])

        # Print or write the outputs
        if options["out"] is None:
            self.emit(report)
            return passed
        write_flow_outputs(options["out"], trace, report, data["snapshot_times"])
        self.info(f"Wrote {options['out']}", **options)
        return passed
