"""Module with functions for 'paths' subpackage."""

from __future__ import annotations
from typing import Union
from pathlib import Path

PathLike = Union[Path, str]  # Path is included in PathLike
"""Str or pathlib Path. It can be also relative to current working directory."""


def validate_path(path: PathLike, error_prefix: None | str = None) -> Path:
    """Convert to pathlib path, resolve to full path and check if exists.

    Args:
        path (PathLike): Validated path.
        error_prefix (None | str): Prefix for raised error if file nor folder found. Defaults to None.

    Raises:
        FileNotFoundError: If file nor folder do not exists.

    Returns:
        Path: Pathlib Path object.

    Example:
        >>> from pathlib import Path
        >>> existing_path = validate_path(Path.cwd())
        >>> non_existing_path = validate_path("not_existing.csv", "Dataset not found")
        Traceback (most recent call last):
        FileNotFoundError: ...
    """
    path = Path(path).resolve()
    if not path.exists():
        prefix = f"{error_prefix}. " if error_prefix else ""
        raise FileNotFoundError(f"{prefix}Nothing found on defined path {path}")
    return path


def prepare_directory(path: PathLike) -> Path:
    """Create folder (with parents) if it does not exist and return resolved path.

    Raises:
        NotADirectoryError: If there is a file on the path.
    """
    path = Path(path).resolve()
    if path.exists() and not path.is_dir():
        raise NotADirectoryError(f"Output path {path} exists and it is not a folder.")
    path.mkdir(parents=True, exist_ok=True)
    return path
