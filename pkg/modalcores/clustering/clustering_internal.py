"""Module with functions for 'clustering' subpackage."""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import pandas as pd
from scipy.spatial import cKDTree
from scipy.spatial.distance import directed_hausdorff

from ..dataset import Dataset
from ..errors import EmptySetError, FormatError, NoEstimatesError
from ..mcores import modal_set_points, ModalSetEstimate
from ..paths import PathLike, validate_path

_CANDIDATES = 8
_TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ClusteringResult:
    """Every point labeled with position of the closest estimate.

    Attributes:
        labels (np.ndarray): Cluster id of every point, index into ``cores``.
        cores (list): Estimates used as cluster cores.
    """

    labels: np.ndarray
    cores: list

    def sizes(self) -> list[int]:
        """Number of points per cluster."""
        return np.bincount(self.labels, minlength=len(self.cores)).tolist()


def assign(dataset: Dataset, estimates: Sequence[ModalSetEstimate], workers: int = 1) -> ClusteringResult:
    """Assign every point to the closest estimate (distance to the nearest member).

    Ties are broken by lower position in ``estimates``, that is lower rank. Members of estimate always get
    its own label.

    Args:
        dataset (Dataset): Samples.
        estimates (Sequence[ModalSetEstimate]): Cluster cores in creation order.
        workers (int, optional): Threads used by tree queries. Defaults to 1.

    Raises:
        NoEstimatesError: If there is no estimate.

    Returns:
        ClusteringResult: Labels with used cores.

    Example:
        >>> data = Dataset([[0.0], [1.0], [2.0], [10.0]])
        >>> cores = [ModalSetEstimate((0,), 1.0, 0, 0), ModalSetEstimate((2,), 1.0, 2, 1)]
        >>> assign(data, cores).labels.tolist()
        [0, 0, 1, 1]
    """
    if not estimates:
        raise NoEstimatesError("There is no modal-set estimate to assign points to.")

    member_index = np.concatenate([np.asarray(i.members, dtype=np.int64) for i in estimates])
    owner = np.concatenate([np.full(i.size, label, dtype=np.int64) for label, i in enumerate(estimates)])
    if not member_index.size:
        raise NoEstimatesError("All estimates are empty.")

    points = dataset.points
    member_points = points[member_index]
    tree = cKDTree(member_points)
    n_candidates = min(_CANDIDATES, member_index.size)

    tree_distances, candidates = tree.query(points, k=n_candidates, workers=workers)
    tree_distances = np.asarray(tree_distances).reshape(dataset.n, n_candidates)
    candidates = np.asarray(candidates, dtype=np.int64).reshape(dataset.n, n_candidates)

    exact = np.sqrt(((member_points[candidates] - points[:, None, :]) ** 2).sum(-1))
    best = exact.min(axis=1)
    no_label = len(estimates)
    labels = np.where(exact == best[:, None], owner[candidates], no_label).min(axis=1)

    # All candidates may be tied, then there can be other tied members outside of them
    if n_candidates < member_index.size:
        risky = np.flatnonzero(tree_distances[:, -1] <= best * (1 + _TIE_TOLERANCE))
        for i in risky:
            ball = np.array(tree.query_ball_point(points[i], best[i] * (1 + _TIE_TOLERANCE)), dtype=np.int64)
            ball_exact = np.sqrt(((member_points[ball] - points[i]) ** 2).sum(-1))
            labels[i] = owner[ball][ball_exact == ball_exact.min()].min()

    labels[member_index] = owner

    return ClusteringResult(labels=labels, cores=list(estimates))


def _as_point_set(points) -> np.ndarray:
    array = np.asarray(points, dtype=np.float64)
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    if array.size == 0:
        raise EmptySetError("Point set must not be empty.")
    return array


def directed_distance(a, b) -> float:
    """Largest distance from point of ``a`` to its closest point in ``b``.

    Example:
        >>> directed_distance([0.0, 1.0], [0.0, 5.0])
        1.0
    """
    return float(directed_hausdorff(_as_point_set(a), _as_point_set(b))[0])


def hausdorff(a, b) -> float:
    """Hausdorff distance of two finite point sets.

    Args:
        a (array_like): Points of shape (m, d). One dimensional input is treated as points in R^1.
        b (array_like): Points of shape (p, d).

    Raises:
        EmptySetError: If some set is empty.

    Returns:
        float: Maximum of both directed distances.

    Example:
        >>> hausdorff([0.0, 1.0], [0.0, 5.0])
        4.0
        >>> hausdorff([[0.0, 0.0]], [[3.0, 4.0]])
        5.0
    """
    return max(directed_distance(a, b), directed_distance(b, a))


@dataclass(frozen=True)
class MatchedPair:
    """Estimate matched with a true modal-set."""

    estimate: ModalSetEstimate
    truth: int
    distance: float


@dataclass(frozen=True)
class MatchReport:
    """Result of greedy one to one matching of estimates and true modal-sets.

    Attributes:
        pairs (list[MatchedPair]): Matches by increasing distance.
        unmatched_estimates (list[ModalSetEstimate]): Estimates without truth.
        unmatched_truths (list[int]): Indices of truth sets without estimate.
    """

    pairs: list = field(default_factory=list)
    unmatched_estimates: list = field(default_factory=list)
    unmatched_truths: list = field(default_factory=list)

    @property
    def max_distance(self) -> float:
        """Largest distance among matched pairs, nan if nothing matched."""
        return max((i.distance for i in self.pairs), default=float("nan"))

    def records(self) -> list[dict]:
        """Rows usable for table or JSON."""
        return [
            {
                "estimate_rank": i.estimate.rank,
                "truth": i.truth,
                "hausdorff": i.distance,
                "estimate_size": i.estimate.size,
            }
            for i in self.pairs
        ]


def match_estimates_to_truth(
    estimates: Sequence[ModalSetEstimate], truth_sets: Sequence, dataset: Dataset
) -> MatchReport:
    """Greedy minimal distance matching of estimates to true modal-sets.

    All pairs are sorted by Hausdorff distance (ties by estimate position and truth index) and taken if both
    sides are still free.

    Args:
        estimates (Sequence[ModalSetEstimate]): Estimates whose coordinates come from ``dataset``.
        truth_sets (Sequence): Point sets of true modal-sets.
        dataset (Dataset): Samples the estimates index.

    Returns:
        MatchReport: Pairs and what stayed unmatched.

    Example:
        >>> data = Dataset([[0.0], [10.0], [20.0]])
        >>> estimates = [ModalSetEstimate((0,), 1.0, 0, 0), ModalSetEstimate((1,), 1.0, 1, 1)]
        >>> report = match_estimates_to_truth(estimates, [[[9.0]]], data)
        >>> [(i.estimate.rank, i.truth, i.distance) for i in report.pairs]
        [(1, 0, 1.0)]
        >>> [i.rank for i in report.unmatched_estimates]
        [0]
    """
    truths = [_as_point_set(i) for i in truth_sets]
    estimate_points = [modal_set_points(dataset, i) for i in estimates]

    candidates = sorted(
        (hausdorff(points, truth), position, truth_index)
        for position, points in enumerate(estimate_points)
        for truth_index, truth in enumerate(truths)
    )

    used_estimates: set[int] = set()
    used_truths: set[int] = set()
    pairs = []

    for distance, position, truth_index in candidates:
        if position in used_estimates or truth_index in used_truths:
            continue
        used_estimates.add(position)
        used_truths.add(truth_index)
        pairs.append(MatchedPair(estimate=estimates[position], truth=truth_index, distance=distance))

    return MatchReport(
        pairs=pairs,
        unmatched_estimates=[j for i, j in enumerate(estimates) if i not in used_estimates],
        unmatched_truths=[i for i in range(len(truths)) if i not in used_truths],
    )


def write_labels(labels: np.ndarray, path: PathLike, comments: Sequence[str] = ()) -> None:
    """Save labels as single column CSV aligned with input rows. Comments are written as '#' lines."""
    with open(path, "w", encoding="utf-8", newline="") as file:
        for line in comments:
            file.write(f"# {line}\n")
        column = pd.Series(np.asarray(labels, dtype=np.int64))
        column.to_csv(file, index=False, header=False, lineterminator="\n")


def read_labels(path: PathLike) -> np.ndarray:
    """Load labels saved with ``write_labels``. Lines starting with '#' are skipped.

    Raises:
        FormatError: If there is other than one column or some label is not integer.
    """
    path = validate_path(path, error_prefix="Labels file not found")

    try:
        frame = pd.read_csv(path, header=None, comment="#", dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as err:
        raise FormatError(f"Labels file {path} is empty.") from err
    except pd.errors.ParserError as err:
        raise FormatError(f"Labels file {path} must have single column. {err}") from err

    if frame.shape[1] != 1:
        raise FormatError(f"Labels file {path} must have single column, it has {frame.shape[1]}.")

    try:
        return np.array([int(i) for i in frame[0]], dtype=np.int64)
    except ValueError as err:
        raise FormatError(f"Labels in {path} must be integers. {err}") from err
