"""JSON persistence with deterministic formatting."""

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Union

from src.utils.errors import InputError
from src.utils.logger import logger


def dumps(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, default=str) + "\n"


def write_json(path: Union[str, Path], data: Any) -> Path:
    """
    Write JSON atomically (temp file in the target directory, then replace).

    Args:
        path: Destination file
        data: JSON-serializable payload

    Returns:
        The destination path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(dumps(data))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.debug(f"wrote {path}")
    return path


def read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise InputError(f"file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e.msg}") from e
