# Standard library imports
import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

# Third-party imports
from celery import group

# Local application imports
from apps.common.exceptions import ConfigError
from apps.experiments.services.runner import load_experiment
from apps.experiments.types import RunManifest

# Get the logger
logger = logging.getLogger(__name__)


# Outcome of one configuration in a batch
@dataclass(frozen=True)
class BatchItem:
    """Result of one configuration file of a batch.

    Attributes:
        config (str): Configuration file.
        manifest (RunManifest | None): Manifest of the run, None when the configuration was invalid.
        errors (Any): Field errors of an invalid configuration.
    """

    config: str
    manifest: RunManifest | None
    errors: Any = None

    @property
    def passed(self) -> bool:
        """Whether the run happened and every verdict passed."""
        return self.manifest is not None and self.manifest.passed

    # Build from a task result
    @classmethod
    def from_result(cls, result: dict[str, Any]) -> "BatchItem":
        """Rebuild an item from the JSON result of the run task.

        Args:
            result (dict[str, Any]): Task result.

        Returns:
            BatchItem: The item.
        """

        manifest = RunManifest.from_dict(result["manifest"]) if result["manifest"] is not None else None
        return cls(result["config"], manifest, result["errors"])


# Configuration files of a directory
def discover_configs(directory: str | Path) -> list[Path]:
    """Return the ``*.json`` files of ``directory`` in name order.

    Args:
        directory (str | Path): Batch directory.

    Returns:
        list[Path]: Configuration files.

    Raises:
        ConfigError: If the directory is missing or holds no configuration.
    """

    directory = Path(directory)
    if not directory.is_dir():
        raise ConfigError({"directory": [f"{directory} is not a directory."]})
    paths = sorted(path for path in directory.glob("*.json") if path.is_file())
    if not paths:
        raise ConfigError({"directory": [f"{directory} holds no JSON configuration."]})
    return paths


# Output directory of every valid configuration
def plan_outputs(paths: Sequence[Path], *, default_seed: int, output_root: Path | None) -> list[Path | None]:
    """Resolve the output directory of each configuration.

    With ``output_root`` each configuration writes to ``output_root/<file stem>``.
    Invalid configurations plan nothing; their task reports the errors.

    Args:
        paths (Sequence[Path]): Configuration files.
        default_seed (int): Seed used when a file has none.
        output_root (Path | None): Common parent of the output directories.

    Returns:
        list[Path | None]: Override per configuration, None to keep the configured one.

    Raises:
        ConfigError: If two configurations would write to the same directory.
    """

    overrides = [output_root / path.stem if output_root is not None else None for path in paths]
    owners: dict[Path, Path] = {}
    for path, override in zip(paths, overrides, strict=True):
        try:
            cfg = load_experiment(path, default_seed=default_seed, output_dir=override)
        except ConfigError:
            continue
        target = Path(cfg.output_dir).absolute()
        if target in owners:
            raise ConfigError({"output_dir": [f"{owners[target].name} and {path.name} both write to {target}."]})
        owners[target] = path
    return overrides


# Run every configuration of a directory
def run_batch(
    directory: str | Path,
    *,
    jobs: int = 1,
    dispatch: bool = False,
    default_seed: int = 0,
    output_root: str | Path | None = None,
) -> list[BatchItem]:
    """Run the experiment files of a directory concurrently.

    Locally, ``jobs`` threads apply the run task in process. With ``dispatch``
    the files are sent as a Celery group to the configured broker and the
    results are awaited.

    Args:
        directory (str | Path): Batch directory.
        jobs (int): Threads running configurations locally.
        dispatch (bool): Send the runs to Celery workers.
        default_seed (int): Seed used when a file has none.
        output_root (str | Path | None): Common parent of the output directories.

    Returns:
        list[BatchItem]: One item per configuration file, in name order.

    Raises:
        ConfigError: For an invalid directory, job count or colliding output directories.
    """

    # Local import, the task module imports the runner
    from apps.experiments.tasks import run_experiment_file  # noqa: PLC0415

    if jobs < 1:
        raise ConfigError({"jobs": ["Must be at least one."]})
    paths = discover_configs(directory)
    overrides = plan_outputs(
        paths,
        default_seed=default_seed,
        output_root=Path(output_root) if output_root is not None else None,
    )
    arguments = [
        (str(path), default_seed, str(override) if override is not None else None)
        for path, override in zip(paths, overrides, strict=True)
    ]
    logger.info("Batch of %d configurations from %s", len(arguments), directory)

    # Workers or local threads
    if dispatch:
        results = group(run_experiment_file.s(*args) for args in arguments).apply_async().get()
    else:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(lambda args: run_experiment_file.apply(args=args).get(), arguments))

    # Summarize
    items = [BatchItem.from_result(result) for result in results]
    failed = sum(not item.passed for item in items)
    logger.info("Batch finished, %d of %d configurations passed", len(items) - failed, len(items))
    return items
