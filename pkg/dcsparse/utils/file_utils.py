"""
File manipulation utilities for dcsparse inputs and outputs
"""
from pathlib import Path
from typing import Union

from dcsparse.exceptions import ParseError

PathLike = Union[str, Path]


def ensure_dir(path: PathLike) -> Path:
    """
    Ensure directory exists, create if not

    Args:
        path: Directory path

    Returns:
        Path object
    """
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def ensure_parent(path: PathLike) -> Path:
    """Create the parent directory of a file path"""
    path = Path(path)
    ensure_dir(path.parent)
    return path


def read_text(path: PathLike) -> str:
    """
    Read file content

    Raises:
        ParseError: file does not exist
    """
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"file not found: {path}", {"path": str(path)})
    return path.read_text(encoding="utf-8")


def sidecar_path(path: PathLike, suffix: str) -> Path:
    """
    Path next to `path` with `_suffix` appended to the stem

    Example:
        sidecar_path("runs/fit.csv", "trace")  # runs/fit_trace.csv
    """
    path = Path(path)
    extension = path.suffix or ".csv"
    return path.with_name(f"{path.stem}_{suffix}{extension}")
