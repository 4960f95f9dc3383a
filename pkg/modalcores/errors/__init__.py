"""Exceptions raised across the library.

There are three families. ``ConfigError`` means some parameter is wrong (bad k, delta, spec...),
``DataError`` means the data itself can not be processed (parse error, duplicates, empty sets...) and
``LevelGraphError`` means the dynamic graph was used in a wrong way. All of them inherit from
``ModalCoresError``, so one ``except`` catches everything the library raises on purpose.

Config and data errors are also ``ValueError`` so code that does not know this module still works.

>>> from modalcores.errors import InvalidKError, ConfigError
>>> issubclass(InvalidKError, ConfigError) and issubclass(InvalidKError, ValueError)
True
"""
from modalcores.errors.errors_internal import (
    ConfigError,
    DataError,
    DensityRangeError,
    DuplicateNodeError,
    EmptyDatasetError,
    EmptySetError,
    FormatError,
    InactiveNodeError,
    InvalidConfigError,
    InvalidDeltaError,
    InvalidDimensionError,
    InvalidKError,
    InvalidSpecError,
    LengthMismatchError,
    LevelGraphError,
    ModalCoresError,
    NodeRangeError,
    NoEstimatesError,
    NonFiniteError,
    ParseError,
    TooFewPointsError,
    ZeroRadiusError,
)

__all__ = [
    "ConfigError",
    "DataError",
    "DensityRangeError",
    "DuplicateNodeError",
    "EmptyDatasetError",
    "EmptySetError",
    "FormatError",
    "InactiveNodeError",
    "InvalidConfigError",
    "InvalidDeltaError",
    "InvalidDimensionError",
    "InvalidKError",
    "InvalidSpecError",
    "LengthMismatchError",
    "LevelGraphError",
    "ModalCoresError",
    "NodeRangeError",
    "NoEstimatesError",
    "NonFiniteError",
    "ParseError",
    "TooFewPointsError",
    "ZeroRadiusError",
]
