"""Atomic file writes: write to a temp file in the destination directory, then rename."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from errors import ArtifactWriteError


def write_text_atomic(destination: str | Path, text: str) -> Path:
    """
    Write text to destination so readers never see a partial file.

    The temp file lives next to the destination so os.replace stays on one filesystem.
    """
    path = Path(destination)
    tmp_name: str | None = None
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(
            "w", encoding="utf-8", newline="", dir=path.parent, prefix=f".{path.name}.", delete=False
        ) as tmp:
            tmp_name = tmp.name
            tmp.write(text)
        os.replace(tmp_name, path)
    except OSError as e:
        if tmp_name is not None and os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise ArtifactWriteError(f"could not write {path}: {e}") from e
    return path
