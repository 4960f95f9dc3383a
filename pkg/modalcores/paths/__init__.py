"""Small helpers around paths used when reading inputs and writing artifacts."""

from modalcores.paths.paths_internal import PathLike, prepare_directory, validate_path

__all__ = ["PathLike", "prepare_directory", "validate_path"]
