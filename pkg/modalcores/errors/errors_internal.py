"""Module with exceptions for 'errors' subpackage."""

from __future__ import annotations


class ModalCoresError(Exception):
    """Base of all errors raised on purpose by modalcores."""


class ConfigError(ModalCoresError, ValueError):
    """Some parameter has invalid value. CLI exits with code 2."""


class DataError(ModalCoresError, ValueError):
    """Data can not be processed. CLI exits with code 3."""


class LevelGraphError(ModalCoresError):
    """Dynamic level graph was used in a way it does not support."""


class InvalidKError(ConfigError):
    """Neighbor count out of allowed range."""


class InvalidDimensionError(ConfigError):
    """Dimension must be positive integer."""


class InvalidDeltaError(ConfigError):
    """Confidence delta must be in open interval (0, 1)."""


class InvalidConfigError(ConfigError):
    """Combination of settings is not valid."""


class InvalidSpecError(ConfigError):
    """Synthetic generator spec is not valid."""


class TooFewPointsError(ConfigError):
    """Not enough samples for the requested default."""


class ParseError(DataError):
    """Input file has non numeric cell or ragged rows."""


class EmptyDatasetError(DataError):
    """No sample in dataset."""


class NonFiniteError(DataError):
    """Coordinates contain NaN or infinity."""


class ZeroRadiusError(DataError):
    """Some point has k-NN radius 0, so its density estimate is infinite."""


class DensityRangeError(DataError):
    """Density estimate does not fit into float64 (underflow or overflow)."""


class LengthMismatchError(DataError):
    """Two sequences that should be aligned have different lengths."""


class EmptySetError(DataError):
    """Point set is empty where nonempty one is required."""


class NoEstimatesError(DataError):
    """There is no modal-set estimate to assign points to."""


class FormatError(DataError):
    """Artifact file is not in expected format or has unsupported version."""


class InactiveNodeError(LevelGraphError):
    """Node was not added to the graph yet."""


class DuplicateNodeError(LevelGraphError):
    """Node is already in the graph."""


class NodeRangeError(LevelGraphError, IndexError):
    """Node index is outside ``[0, capacity)``."""
