"""Module with functions for 'knn_index' subpackage."""

from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
import struct

import mylogging
import numpy as np
from scipy.spatial import cKDTree

from ..dataset import Dataset, fingerprint
from ..errors import FormatError, InvalidConfigError, InvalidKError, LengthMismatchError
from ..paths import PathLike, validate_path

MAX_TREE_DIMENSION = 16
"""Above this dimension kd-tree is slower than chunked brute force."""

INDEX_MAGIC = b"MCKNN"
INDEX_FORMAT_VERSION = 1
_HEADER = struct.Struct("<5sHqqq32s")

_CHUNK_ELEMENTS = 2**22
_TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class KnnIndex:
    """Exact k nearest neighbors of every sample point, the point itself included.

    Row ``i`` of ``neighbors`` starts with ``i`` (distance 0), the rest is sorted by distance with ties broken
    by ascending index.

    Attributes:
        k (int): Neighbor count.
        neighbors (np.ndarray): Int array of shape (n, k).
        distances (np.ndarray): Float array of shape (n, k) aligned with ``neighbors``.
    """

    k: int
    neighbors: np.ndarray
    distances: np.ndarray

    def __post_init__(self) -> None:
        neighbors = np.array(self.neighbors, dtype=np.int64)
        distances = np.array(self.distances, dtype=np.float64)

        if neighbors.ndim != 2 or neighbors.shape[1] != self.k:
            raise LengthMismatchError(f"Neighbors must have shape (n, {self.k}), got {neighbors.shape}.")
        if distances.shape != neighbors.shape:
            raise LengthMismatchError(
                f"Distances shape {distances.shape} differs from neighbors shape {neighbors.shape}."
            )

        neighbors.setflags(write=False)
        distances.setflags(write=False)
        object.__setattr__(self, "neighbors", neighbors)
        object.__setattr__(self, "distances", distances)

    @property
    def n(self) -> int:
        """Number of indexed points."""
        return self.neighbors.shape[0]

    @property
    def radii(self) -> np.ndarray:
        """r_k of every point, the k-th smallest distance (self included)."""
        return self.distances[:, self.k - 1]

    def truncate(self, k: int) -> KnnIndex:
        """Index for smaller k. Rows are prefixes, so it equals index built with that k.

        Example:
            >>> index = knn_brute_force(Dataset([[0.0], [1.0], [2.0], [10.0]]), 3)
            >>> index.truncate(2).radii.tolist()
            [1.0, 1.0, 1.0, 8.0]
        """
        if not 1 <= k <= self.k:
            raise InvalidKError(f"Index can be truncated to k in [1, {self.k}], got {k}.")
        return KnnIndex(k, self.neighbors[:, :k], self.distances[:, :k])

    @cached_property
    def mutual_neighbors(self) -> list[np.ndarray]:
        """For every point, sorted indices of points it shares mutual k-NN edge with.

        Pair (i, j) is an edge if ``||x_i - x_j|| <= min(r_k(i), r_k(j))``. Both directions of the pair are
        checked on the neighbor lists, so the relation is symmetric.
        """
        n, k = self.neighbors.shape
        rows = np.repeat(np.arange(n, dtype=np.int64), k)
        cols = self.neighbors.reshape(-1)
        dists = self.distances.reshape(-1)

        mask = (cols != rows) & (dists <= self.radii[cols])
        rows, cols = rows[mask], cols[mask]

        codes = np.unique(np.concatenate([rows * n + cols, cols * n + rows]))
        starts = np.searchsorted(codes // n, np.arange(n + 1))
        targets = codes % n

        return [targets[starts[i] : starts[i + 1]] for i in range(n)]

    def n_edges(self) -> int:
        """Number of undirected mutual k-NN edges."""
        return sum(len(i) for i in self.mutual_neighbors) // 2


def _check_k(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise InvalidKError(f"k must satisfy 1 <= k <= n = {n}, got k={k}. Use k >= 2 for density estimates.")


def _chunks(n_rows: int, row_size: int):
    step = max(1, _CHUNK_ELEMENTS // max(1, row_size))
    for start in range(0, n_rows, step):
        yield np.arange(start, min(start + step, n_rows))


def _sort_candidates(rows: np.ndarray, candidates: np.ndarray, distances: np.ndarray) -> np.ndarray:
    """Order of candidate columns per row: self first, then distance, then index."""
    key = np.where(candidates == rows[:, None], -1.0, distances)
    return np.lexsort((candidates, key), axis=-1)


def _brute_rows(points: np.ndarray, rows: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    n = points.shape[0]
    distances = np.sqrt(((points[None, :, :] - points[rows, None, :]) ** 2).sum(-1))
    candidates = np.broadcast_to(np.arange(n, dtype=np.int64), distances.shape)
    order = _sort_candidates(rows, candidates, distances)[:, :k]
    return np.take_along_axis(candidates, order, axis=1), np.take_along_axis(distances, order, axis=1)


def knn_brute_force(dataset: Dataset, k: int) -> KnnIndex:
    """All pairs computation of exact k-NN. Slow, used as reference.

    Args:
        dataset (Dataset): Indexed points.
        k (int): Neighbor count, self included.

    Raises:
        InvalidKError: If not 1 <= k <= n.

    Returns:
        KnnIndex: Index with the same tie-break rule as ``build_index``.

    Example:
        >>> knn_brute_force(Dataset([[0.0]]), 1).neighbors.tolist()
        [[0]]
    """
    _check_k(k, dataset.n)
    points = dataset.points

    neighbors = np.empty((dataset.n, k), dtype=np.int64)
    distances = np.empty((dataset.n, k), dtype=np.float64)

    for rows in _chunks(dataset.n, dataset.n * dataset.d):
        neighbors[rows], distances[rows] = _brute_rows(points, rows, k)

    return KnnIndex(k, neighbors, distances)


def build_index(dataset: Dataset, k: int, workers: int = 1) -> KnnIndex:
    """Exact k-NN index accelerated with kd-tree.

    Tree proposes k + 1 candidates per point, distances are recomputed the same way as in
    ``knn_brute_force`` and sorted with the deterministic tie-break. If there is a tie on the candidate
    boundary, the row is resolved with ball query, so result never depends on the tree's own tie order.

    Args:
        dataset (Dataset): Indexed points.
        k (int): Neighbor count, self included.
        workers (int, optional): Threads used by tree queries. Defaults to 1.

    Raises:
        InvalidKError: If not 1 <= k <= n.

    Returns:
        KnnIndex: Exact index.

    Example:
        >>> index = build_index(Dataset([[0.0], [1.0], [2.0], [10.0]]), 2)
        >>> index.radii.tolist()
        [1.0, 1.0, 1.0, 8.0]
        >>> index.neighbors.tolist()
        [[0, 1], [1, 0], [2, 1], [3, 2]]
    """
    _check_k(k, dataset.n)

    if dataset.d > MAX_TREE_DIMENSION:
        mylogging.info(f"Dimension {dataset.d} is high, using brute force k-NN.")
        return knn_brute_force(dataset, k)

    points = dataset.points
    n = dataset.n
    n_candidates = min(k + 1, n)
    tree = cKDTree(points)

    neighbors = np.empty((n, k), dtype=np.int64)
    distances = np.empty((n, k), dtype=np.float64)
    tied_rows = []

    for rows in _chunks(n, n_candidates * dataset.d):
        _, candidates = tree.query(points[rows], k=n_candidates, workers=workers)
        candidates = np.asarray(candidates, dtype=np.int64).reshape(len(rows), n_candidates)

        exact = np.sqrt(((points[candidates] - points[rows, None, :]) ** 2).sum(-1))
        order = _sort_candidates(rows, candidates, exact)
        candidates = np.take_along_axis(candidates, order, axis=1)
        exact = np.take_along_axis(exact, order, axis=1)

        neighbors[rows] = candidates[:, :k]
        distances[rows] = exact[:, :k]

        if n_candidates < n:
            boundary = exact.max(axis=1)
            tied_rows.extend(rows[exact[:, k - 1] >= boundary * (1 - _TIE_TOLERANCE)].tolist())

    for i in tied_rows:
        radius = distances[i, k - 1] * (1 + _TIE_TOLERANCE)
        candidates = np.array(tree.query_ball_point(points[i], radius), dtype=np.int64)
        exact = np.sqrt(((points[candidates] - points[i]) ** 2).sum(-1))
        order = _sort_candidates(np.array([i]), candidates[None, :], exact[None, :])[0, :k]
        neighbors[i], distances[i] = candidates[order], exact[order]

    if tied_rows:
        mylogging.info(f"{len(tied_rows)} points had distance ties on k-NN boundary, resolved exactly.")

    return KnnIndex(k, neighbors, distances)


def radius_neighbors(dataset: Dataset, radius: float, workers: int = 1) -> list[np.ndarray]:
    """Sorted indices of all points within ``radius`` (inclusive) of every point, self included.

    Example:
        >>> [i.tolist() for i in radius_neighbors(Dataset([[0.0], [0.5], [10.0]]), 0.6)]
        [[0, 1], [0, 1], [2]]
    """
    if not radius > 0:
        raise InvalidConfigError(f"Radius must be positive, got {radius}.")

    points = dataset.points

    if dataset.d > MAX_TREE_DIMENSION:
        result = []
        for rows in _chunks(dataset.n, dataset.n * dataset.d):
            distances = np.sqrt(((points[None, :, :] - points[rows, None, :]) ** 2).sum(-1))
            result.extend(np.flatnonzero(row <= radius) for row in distances)
        return result

    tree = cKDTree(points)
    lists = tree.query_ball_point(points, radius, workers=workers, return_sorted=True)
    return [np.array(i, dtype=np.int64) for i in lists]


def dump_index(index: KnnIndex, dataset: Dataset, path: PathLike) -> None:
    """Save index in binary form so the preprocessing can be skipped on rerun.

    Header (magic, format version, k, n, d and sha256 of the data) is followed by little endian int64
    neighbors and float64 distances in row order.
    """
    if index.n != dataset.n:
        raise LengthMismatchError(f"Index has {index.n} points but dataset {dataset.n}.")

    digest = bytes.fromhex(fingerprint(dataset)["sha256"])
    header = _HEADER.pack(INDEX_MAGIC, INDEX_FORMAT_VERSION, index.k, dataset.n, dataset.d, digest)

    with open(path, "wb") as file:
        file.write(header)
        file.write(np.ascontiguousarray(index.neighbors, dtype="<i8").tobytes())
        file.write(np.ascontiguousarray(index.distances, dtype="<f8").tobytes())


def load_index(path: PathLike, dataset: None | Dataset = None) -> KnnIndex:
    """Load index saved with ``dump_index``.

    Args:
        path (PathLike): Index file.
        dataset (None | Dataset, optional): If given, it's checked that index was built on the same data.
            Defaults to None.

    Raises:
        FormatError: If file is not an index, has other version, is truncated or belongs to other data.
    """
    path = validate_path(path, error_prefix="Index file not found")
    content = path.read_bytes()

    if len(content) < _HEADER.size:
        raise FormatError(f"File {path} is too short to be k-NN index.")

    magic, version, k, n, d, digest = _HEADER.unpack_from(content)

    if magic != INDEX_MAGIC:
        raise FormatError(f"File {path} is not k-NN index.")
    if version != INDEX_FORMAT_VERSION:
        raise FormatError(f"Index format version {version} is not supported, expected {INDEX_FORMAT_VERSION}")
    if len(content) != _HEADER.size + 16 * n * k:
        raise FormatError(f"Index file {path} is truncated or corrupted.")
    if dataset is not None and (
        (dataset.n, dataset.d) != (n, d) or digest.hex() != fingerprint(dataset)["sha256"]
    ):
        raise FormatError(f"Index in {path} was built for other data.")

    offset = _HEADER.size
    neighbors = np.frombuffer(content, dtype="<i8", count=n * k, offset=offset).reshape(n, k)
    distances = np.frombuffer(content, dtype="<f8", count=n * k, offset=offset + 8 * n * k).reshape(n, k)

    return KnnIndex(int(k), neighbors.astype(np.int64), distances.astype(np.float64))
