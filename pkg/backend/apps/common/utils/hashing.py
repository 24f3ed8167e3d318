# Standard library imports
import hashlib
import json
from importlib import metadata
from typing import Any

# Local application imports
from apps.common.renderers import to_json_value

# Packages reported in run manifests
REPORTED_PACKAGES = ("numpy", "scipy", "POT", "pandas", "matplotlib", "django", "djangorestframework", "celery")


# Hash a configuration
def config_hash(config: Any) -> str:
    """Return the SHA-256 hex digest of a configuration's canonical JSON.

    Args:
        config (Any): Configuration mapping or dataclass.

    Returns:
        str: Hex digest.
    """

    # Canonical JSON with sorted keys and no whitespace
    canonical = json.dumps(to_json_value(config), sort_keys=True, separators=(",", ":"))

    # Return the digest
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


# Collect package versions
def package_versions() -> dict[str, str]:
    """Return installed versions of the numerical and framework packages.

    Returns:
        dict[str, str]: Package name to version, ``"unknown"`` when missing.
    """

    # Look up every reported package
    versions = {}
    for name in REPORTED_PACKAGES:
        try:
            versions[name] = metadata.version(name)
        except metadata.PackageNotFoundError:
            versions[name] = "unknown"

    # Return the versions
    return versions
