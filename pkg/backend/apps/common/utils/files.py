# Standard library imports
import json
import os
import tempfile
from pathlib import Path
from typing import Any

# Third-party imports
import pandas as pd

# Local application imports
from apps.common.renderers import ArtifactJSONRenderer
from apps.common.utils.conf import get_setting


# Write bytes to a file atomically
def write_atomic(path: str | Path, content: bytes | str) -> Path:
    """Write content to ``path`` through a temporary file and a rename.

    Readers never observe a partially written file: the content goes to a
    temporary file in the destination directory which then replaces the target.

    Args:
        path (str | Path): Destination file.
        content (bytes | str): Content to write; strings are UTF-8 encoded.

    Returns:
        Path: The destination path.
    """

    # Resolve the destination and make sure its directory exists
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)

    # Encode text content
    if isinstance(content, str):
        content = content.encode("utf-8")

    # Write into a temporary file next to the target
    descriptor, temp_name = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(descriptor, "wb") as handle:
            handle.write(content)
            handle.flush()
            os.fsync(handle.fileno())

        # Replace the target in one step
        Path(temp_name).replace(target)
    except BaseException:
        # Remove the temporary file on failure
        Path(temp_name).unlink(missing_ok=True)
        raise

    # Return the destination
    return target


# Write a JSON document atomically
def write_json(path: str | Path, data: Any) -> Path:
    """Render ``data`` with the artifact renderer and write it atomically.

    Args:
        path (str | Path): Destination file.
        data (Any): Value to render.

    Returns:
        Path: The destination path.
    """

    # Render and write
    return write_atomic(path, ArtifactJSONRenderer().render(data))


# Write a table as CSV atomically
def write_csv(path: str | Path, frame: pd.DataFrame, *, header: bool = True) -> Path:
    """Write a data frame as CSV with the project float format.

    Args:
        path (str | Path): Destination file.
        frame (pd.DataFrame): Table to write, the index is dropped.
        header (bool): Whether the column names are written.

    Returns:
        Path: The destination path.
    """

    # Render with a fixed float format so repeated runs are byte identical
    text = frame.to_csv(
        index=False,
        header=header,
        float_format=get_setting("STOCHINVERSE_CSV_FLOAT_FORMAT", "%.17g"),
        lineterminator="\n",
    )

    # Write the rendered text
    return write_atomic(path, text)


# Read a JSON document
def read_json(path: str | Path) -> Any:
    """Read a JSON document.

    Args:
        path (str | Path): File to read.

    Returns:
        Any: The decoded value.
    """

    # Decode the file
    with Path(path).open(encoding="utf-8") as handle:
        return json.load(handle)
