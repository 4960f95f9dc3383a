"""Module with functions for 'dataset' subpackage."""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Optional, Union
import hashlib

import mylogging
import numpy as np
import pandas as pd

from ..errors import (
    EmptyDatasetError,
    InvalidConfigError,
    InvalidKError,
    LengthMismatchError,
    NonFiniteError,
    ParseError,
)
from ..paths import PathLike, validate_path


@dataclass(frozen=True)
class Dataset:
    """Samples in R^d. Rows are points, Euclidean geometry.

    Points are copied into read-only float64 array, so dataset can be shared by parallel workers.

    Example:
        >>> data = Dataset([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
        >>> data.n, data.d
        (3, 2)
        >>> Dataset([[0.0], [float("nan")]])
        Traceback (most recent call last):
        modalcores.errors.errors_internal.NonFiniteError: ...
    """

    points: np.ndarray

    def __post_init__(self) -> None:
        points = np.array(self.points, dtype=np.float64)

        if points.ndim == 1:
            points = points.reshape(-1, 1)
        if points.ndim != 2:
            raise ParseError(f"Points must be n x d array, but got array with {points.ndim} dimensions.")
        if points.shape[0] == 0:
            raise EmptyDatasetError("Dataset has no points.")
        if points.shape[1] == 0:
            raise ParseError("Dataset has no feature column.")
        if not np.isfinite(points).all():
            bad_rows = np.flatnonzero(~np.isfinite(points).all(axis=1))
            raise NonFiniteError(
                f"Coordinates must be finite. Rows with NaN or Inf: {bad_rows[:10].tolist()}"
            )

        # Adding zero turns -0.0 into 0.0 so equal coordinates have equal bytes
        points = points + 0.0
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        """Number of points."""
        return self.points.shape[0]

    @property
    def d(self) -> int:
        """Ambient dimension."""
        return self.points.shape[1]

    def with_points(self, points: np.ndarray) -> Dataset:
        """New dataset with other coordinates of the same shape."""
        points = np.asarray(points)
        if points.shape != self.points.shape:
            raise LengthMismatchError(f"Expected points of shape {self.points.shape}, got {points.shape}.")
        return Dataset(points)


@dataclass(frozen=True)
class LabeledDataset:
    """Dataset with ground truth class of every point."""

    data: Dataset
    labels: np.ndarray

    def __post_init__(self) -> None:
        labels = np.asarray(self.labels)
        if labels.ndim != 1 or labels.shape[0] != self.data.n:
            raise LengthMismatchError(
                f"There must be one label per point. Points: {self.data.n}, labels: {labels.shape}."
            )
        labels = labels.astype(np.int64)
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)


@dataclass(frozen=True)
class ValidationReport:
    """Points whose k-th nearest distance (self included) is zero, so their density would be infinite."""

    k: int
    violations: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int64))

    @property
    def ok(self) -> bool:
        """True if there is no violation."""
        return self.violations.size == 0

    def message(self) -> str:
        """Human readable summary with a remedy."""
        if self.ok:
            return f"No point has {self.k} or more exact copies."
        return (
            f"{self.violations.size} points have at least k={self.k} exact copies (itself included), so "
            f"their k-NN radius is 0. First indices: {self.violations[:10].tolist()}. Use larger k, remove "
            "duplicates or add noise with --jitter."
        )


def validate(dataset: Dataset, k: int) -> ValidationReport:
    """Report points with zero k-NN radius.

    Radius of point is zero exactly if there are at least k identical points (itself included). It is
    counted exactly on coordinates, no distance is computed.

    Args:
        dataset (Dataset): Validated data.
        k (int): Neighbor count.

    Returns:
        ValidationReport: Report, no error raised.

    Example:
        >>> validate(Dataset([[0.0], [0.0], [1.0]]), k=2).violations
        array([0, 1])
        >>> validate(Dataset([[0.0], [0.0], [1.0]]), k=3).ok
        True
    """
    if k < 1:
        raise InvalidKError(f"k must be at least 1, got {k}.")

    _, inverse, counts = np.unique(dataset.points, axis=0, return_inverse=True, return_counts=True)
    inverse = np.asarray(inverse).reshape(-1)
    violations = np.flatnonzero(counts[inverse] >= k).astype(np.int64)

    return ValidationReport(k=k, violations=violations)


def _parse_labels(column: pd.Series) -> np.ndarray:
    """Integer labels are kept, anything else is mapped to dense integers in load order."""
    try:
        return np.array([int(i) for i in column], dtype=np.int64)
    except ValueError:
        codes, _ = pd.factorize(column, sort=False)
        return codes.astype(np.int64)


def load_csv(
    path: PathLike, has_header: bool = False, label_column: Optional[int] = None
) -> Union[Dataset, LabeledDataset]:
    """Load comma separated file with decimal numbers.

    Args:
        path (PathLike): Path to UTF-8 CSV file.
        has_header (bool, optional): Whether first row is header. Defaults to False.
        label_column (Optional[int], optional): Zero based index of column with ground truth. If None, all
            columns are features. Defaults to None.

    Raises:
        FileNotFoundError: If there is no file.
        ParseError: If there is non numeric feature cell or rows have different number of cells.
        EmptyDatasetError: If there is no data row.

    Returns:
        Union[Dataset, LabeledDataset]: Dataset, or LabeledDataset if label column is used.
    """
    path = validate_path(path, error_prefix="Dataset file not found")

    try:
        frame = pd.read_csv(
            path,
            header=0 if has_header else None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            comment="#",
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError as err:
        raise EmptyDatasetError(f"File {path} contains no data.") from err
    except pd.errors.ParserError as err:
        raise ParseError(f"File {path} is not valid CSV, rows may have different lengths. {err}") from err

    if frame.shape[0] == 0:
        raise EmptyDatasetError(f"File {path} contains no data row.")

    # Short rows are filled with NaN by pandas
    if frame.isna().to_numpy().any() or frame.apply(lambda column: column.str.strip() == "").to_numpy().any():
        raise ParseError(f"File {path} has empty cells or rows with different lengths.")

    labels = None
    if label_column is not None:
        if not -frame.shape[1] <= label_column < frame.shape[1]:
            raise InvalidConfigError(
                f"Label column {label_column} does not exist, file has {frame.shape[1]} columns."
            )
        label_name = frame.columns[label_column]
        labels = _parse_labels(frame[label_name].str.strip())
        frame = frame.drop(columns=label_name)

    try:
        points = frame.to_numpy(dtype=np.float64)
    except ValueError as err:
        raise ParseError(f"File {path} contains non numeric feature cell. {err}") from err

    data = Dataset(points)
    mylogging.info(f"Loaded {data.n} points in {data.d} dimensions from {path}.")

    return data if labels is None else LabeledDataset(data, labels)


def save_csv(
    dataset: Union[Dataset, LabeledDataset], path: PathLike, header: bool = False, comments: tuple = ()
) -> None:
    """Save dataset so ``load_csv`` reads exactly the same values.

    Floats are written with 17 significant digits. If labels are present, they are the last column.

    Args:
        dataset (Union[Dataset, LabeledDataset]): Saved data.
        path (PathLike): Where to save.
        header (bool, optional): Write header row (x0, x1, ..., label). Defaults to False.
        comments (tuple, optional): Lines written before the data prefixed with '#'. Defaults to ().
    """
    data = dataset.data if isinstance(dataset, LabeledDataset) else dataset
    frame = pd.DataFrame(data.points, columns=[f"x{i}" for i in range(data.d)])

    if isinstance(dataset, LabeledDataset):
        frame["label"] = dataset.labels

    with open(path, "w", encoding="utf-8", newline="") as file:
        for line in comments:
            file.write(f"# {line}\n")
        frame.to_csv(file, index=False, header=header, float_format="%.17g", lineterminator="\n")


def jitter(dataset: Dataset, scale: float, seed: int = 0) -> Dataset:
    """Add uniform noise from [-scale, scale] to every coordinate.

    It's the requested remedy for exact duplicates. Data are never perturbed silently.

    Example:
        >>> data = Dataset([[0.0], [0.0]])
        >>> jittered = jitter(data, 0.1, seed=1)
        >>> bool(jittered.points[0, 0] != jittered.points[1, 0])
        True
    """
    if scale < 0:
        raise InvalidConfigError(f"Jitter scale must be non negative, got {scale}.")
    if scale == 0:
        return dataset

    mylogging.warn(f"Uniform noise with scale {scale} (seed {seed}) added to all coordinates.")
    rng = np.random.default_rng(seed)
    return dataset.with_points(dataset.points + rng.uniform(-scale, scale, size=dataset.points.shape))


def fingerprint(dataset: Dataset) -> dict:
    """Provenance of a dataset: shape and sha256 of little endian float64 coordinates.

    Example:
        >>> fingerprint(Dataset([[0.0, 1.0]]))["n"]
        1
    """
    content = np.ascontiguousarray(dataset.points, dtype="<f8").tobytes()
    return {"n": dataset.n, "d": dataset.d, "sha256": hashlib.sha256(content).hexdigest()}
