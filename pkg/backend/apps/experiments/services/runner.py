# Standard library imports
import logging
import shutil
import tempfile
import time
from pathlib import Path
from typing import Any

# Local application imports
from apps.common.exceptions import ConfigError, NumericalError
from apps.common.utils import config_hash, package_versions, read_json, write_json
from apps.experiments.serializers import ExperimentConfigSerializer
from apps.experiments.services.kinds import KIND_RUNNERS
from apps.experiments.types import ExperimentConfig, RunManifest, Verdict

# Name of the manifest file in every output directory
MANIFEST_NAME = "manifest.json"

# Get the logger
logger = logging.getLogger(__name__)


# Validate a decoded configuration
def validate_experiment(
    payload: Any,
    *,
    base_dir: str | Path = ".",
    default_seed: int = 0,
    output_dir: str | Path | None = None,
) -> ExperimentConfig:
    """Validate a decoded experiment configuration.

    Args:
        payload (Any): Decoded JSON value.
        base_dir (str | Path): Directory file references resolve against.
        default_seed (int): Seed used when the configuration has none.
        output_dir (str | Path | None): Overrides the configured output directory.

    Returns:
        ExperimentConfig: The validated configuration.

    Raises:
        ConfigError: With field-level messages for any invalid value.
    """

    serializer = ExperimentConfigSerializer(
        data=payload,
        context={"base_dir": Path(base_dir), "default_seed": default_seed, "output_dir": output_dir},
    )
    if not serializer.is_valid():
        raise ConfigError(serializer.errors)
    return serializer.validated_data["config"]


# Read and validate a configuration file
def load_experiment(
    path: str | Path,
    *,
    default_seed: int = 0,
    output_dir: str | Path | None = None,
) -> ExperimentConfig:
    """Read an experiment JSON file and validate it.

    Args:
        path (str | Path): Configuration file.
        default_seed (int): Seed used when the file has none.
        output_dir (str | Path | None): Overrides the configured output directory.

    Returns:
        ExperimentConfig: The validated configuration.

    Raises:
        ConfigError: If the file cannot be read or is invalid.
    """

    path = Path(path)
    try:
        payload = read_json(path)
    except (OSError, ValueError) as exc:
        raise ConfigError({"config": [str(exc)]}) from None
    return validate_experiment(payload, base_dir=path.parent, default_seed=default_seed, output_dir=output_dir)


# Directories a run may replace
def _replaceable(path: Path) -> bool:
    return path.is_dir() and (not any(path.iterdir()) or (path / MANIFEST_NAME).is_file())


# Fresh directory next to the destination
def _staging_directory(output_dir: Path) -> Path:
    if output_dir.exists() and not _replaceable(output_dir):
        raise ConfigError({"output_dir": [f"{output_dir} exists and does not hold a previous run."]})
    output_dir.parent.mkdir(parents=True, exist_ok=True)
    return Path(tempfile.mkdtemp(dir=output_dir.parent, prefix=f".{output_dir.name}.", suffix=".tmp"))


# Swap the staged outputs into place
def _publish(staging: Path, output_dir: Path) -> None:
    if output_dir.exists():
        shutil.rmtree(output_dir)
    staging.replace(output_dir)


# Run one experiment
def run_experiment(cfg: ExperimentConfig) -> RunManifest:
    """Run an experiment and persist its outputs with ``manifest.json``.

    Outputs are written into a staging directory beside ``cfg.output_dir``,
    each file atomically, and the staging directory then replaces the output
    directory. An existing output directory is only replaced when it is empty
    or holds a previous run. Numerical failures do not escape: they become a
    failed ``execution`` verdict and the files written so far are kept.

    Args:
        cfg (ExperimentConfig): Validated configuration.

    Returns:
        RunManifest: The manifest, listing every file of the output directory.

    Raises:
        ConfigError: If the output directory holds unrelated files.
    """

    output_dir = Path(cfg.output_dir).absolute()
    manifest = RunManifest(
        name=cfg.name,
        kind=str(cfg.kind),
        seed=cfg.seed,
        config_hash=config_hash(cfg.payload),
        versions=package_versions(),
    )
    staging = _staging_directory(output_dir)
    logger.info("Experiment %s (%s) started, seed %d", cfg.name, cfg.kind, cfg.seed)

    # Run the kind, numerical failures become a verdict
    started = time.perf_counter()
    try:
        verdicts = KIND_RUNNERS[cfg.kind](cfg, staging)
        manifest.verdicts = [Verdict("execution", passed=True), *verdicts]
    except (NumericalError, ValueError) as exc:
        logger.warning("Experiment %s failed: %s", cfg.name, exc)
        manifest.verdicts = [Verdict("execution", passed=False, detail=f"{exc.__class__.__name__}: {exc}")]
    except BaseException:
        shutil.rmtree(staging, ignore_errors=True)
        raise
    manifest.wall_clock_seconds = time.perf_counter() - started

    # List the outputs, the manifest included
    produced = [path.relative_to(staging).as_posix() for path in staging.rglob("*") if path.is_file()]
    manifest.artifacts = sorted([*produced, MANIFEST_NAME])
    write_json(staging / MANIFEST_NAME, manifest)
    _publish(staging, output_dir)

    # Report the outcome
    for verdict in manifest.verdicts:
        if not verdict.passed:
            logger.warning("Verdict %s failed for %s: %s", verdict.criterion, cfg.name, verdict.detail or verdict.value)
    logger.info("Experiment %s finished in %.2fs", cfg.name, manifest.wall_clock_seconds)
    return manifest
