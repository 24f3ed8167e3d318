# Standard library imports
import argparse
from pathlib import Path
from typing import Any

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.management import StochInverseCommand
from apps.common.renderers import to_json_value
from apps.experiments.services import load_experiment, run_batch, run_experiment


# Experiment runner
class Command(StochInverseCommand):
    """``experiment run <config.json>`` and ``experiment batch <dir> --jobs N [--dispatch]``.

    ``--seed`` applies to configurations without a seed. For ``run``, ``--out``
    replaces the output directory; for ``batch`` it is the parent of one
    directory per configuration file.
    """

    help = "Run one experiment configuration or a directory of them."

    # Command arguments
    def add_command_arguments(self, parser: argparse.ArgumentParser) -> None:
        actions = parser.add_subparsers(dest="action", required=True)

        # Single configuration
        run = actions.add_parser("run", help="Run one experiment configuration.")
        run.add_argument("config", type=Path, help="Experiment JSON file.")

        # Directory of configurations
        batch = actions.add_parser("batch", help="Run every configuration of a directory.")
        batch.add_argument("directory", type=Path, help="Directory of experiment JSON files.")
        batch.add_argument("--jobs", type=int, default=1, help="Configurations run at the same time.")
        batch.add_argument("--dispatch", action="store_true", help="Send the runs to Celery workers.")

        # Global flags are accepted after the action too
        for subparser in (run, batch):
            subparser.add_argument("--seed", type=int, default=argparse.SUPPRESS)
            subparser.add_argument("--out", type=Path, default=argparse.SUPPRESS)
            subparser.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    # Command body
    def run(self, **options: Any) -> bool:
        if options["action"] == "run":
            return self.run_single(**options)
        return self.run_directory(**options)

    # One configuration
    def run_single(self, **options: Any) -> bool:
        cfg = load_experiment(options["config"], default_seed=options["seed"], output_dir=options["out"])
        manifest = run_experiment(cfg)
        self.emit({"output_dir": Path(cfg.output_dir).absolute(), **to_json_value(manifest)})
        return manifest.passed

    # Every configuration of a directory
    def run_directory(self, **options: Any) -> bool:
        items = run_batch(
            options["directory"],
            jobs=options["jobs"],
            dispatch=options["dispatch"],
            default_seed=options["seed"],
            output_root=options["out"],
        )
        self.emit(
            [
                {
                    "config": item.config,
                    "passed": item.passed,
                    "config_hash": item.manifest.config_hash if item.manifest is not None else None,
                    "errors": item.errors,
                }
                for item in items
            ],
        )

        # Invalid files are configuration errors
        invalid = {item.config: item.errors for item in items if item.errors is not None}
        if invalid:
            raise ConfigError(invalid)
        return all(item.passed for item in items)
