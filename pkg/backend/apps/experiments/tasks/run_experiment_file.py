# Standard library imports
from typing import Any

# Third-party imports
from celery import shared_task

# Local application imports
from apps.common.exceptions import ConfigError
from apps.common.renderers import to_json_value
from apps.experiments.services.runner import load_experiment, run_experiment


# Run one experiment configuration file task
@shared_task(name="experiments.run_experiment")
def run_experiment_file(config_path: str, default_seed: int = 0, output_dir: str | None = None) -> dict[str, Any]:
    """Validate and run one experiment configuration file.

    This task backs ``experiment batch``. Configuration errors are returned
    rather than raised so a batch reports every file.

    Args:
        config_path (str): Experiment JSON file.
        default_seed (int): Seed used when the file has none.
        output_dir (str | None): Overrides the configured output directory.

    Returns:
        dict[str, Any]: ``config``, the JSON ``manifest`` or None, and the
            configuration ``errors`` or None.
    """

    try:
        # Validate and run
        cfg = load_experiment(config_path, default_seed=default_seed, output_dir=output_dir)
        manifest = run_experiment(cfg)
    except ConfigError as exc:
        # Return the field errors
        return {"config": config_path, "manifest": None, "errors": exc.errors}

    # Return the manifest as JSON values
    return {"config": config_path, "manifest": to_json_value(manifest), "errors": None}
