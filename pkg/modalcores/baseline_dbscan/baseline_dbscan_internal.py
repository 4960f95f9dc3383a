"""Module with functions for 'baseline_dbscan' subpackage."""

from __future__ import annotations
from dataclasses import dataclass
import math

import mylogging
import numpy as np

from ..dataset import Dataset
from ..errors import InvalidConfigError
from ..knn_index import radius_neighbors
from ..levelgraph import LevelGraph

NOISE = -1


@dataclass(frozen=True)
class DbscanConfig:
    """DBSCAN parameters.

    Attributes:
        eps (float): Neighborhood radius.
        min_pts (int): Minimal neighborhood size (point itself included) of core point.
    """

    eps: float
    min_pts: int = 5

    def __post_init__(self) -> None:
        if not (isinstance(self.eps, (int, float)) and math.isfinite(self.eps) and self.eps > 0):
            raise InvalidConfigError(f"'eps' must be positive, got {self.eps!r}.")
        if isinstance(self.min_pts, bool) or not isinstance(self.min_pts, (int, np.integer)):
            raise InvalidConfigError(f"'min_pts' must be integer, got {self.min_pts!r}.")
        if self.min_pts < 1:
            raise InvalidConfigError(f"'min_pts' must be integer at least 1, got {self.min_pts!r}.")


@dataclass(frozen=True)
class DbscanResult:
    """Cluster of every point (``NOISE`` is -1) and which points are core points."""

    labels: np.ndarray
    core_mask: np.ndarray

    @property
    def n_clusters(self) -> int:
        """Number of clusters."""
        return int(self.labels.max()) + 1 if self.labels.size else 0


def dbscan(dataset: Dataset, config: DbscanConfig, workers: int = 1) -> DbscanResult:
    """Exact DBSCAN.

    Clusters are connected components of core points, two core points being connected if they are not
    farther than ``eps``. Clusters are numbered by their smallest point index. Border point joins the
    adjacent cluster with the lowest id.

    Args:
        dataset (Dataset): Samples.
        config (DbscanConfig): Parameters.
        workers (int, optional): Threads used by radius queries. Defaults to 1.

    Returns:
        DbscanResult: Labels with core points.

    Example:
        >>> data = Dataset([[0.0], [0.5], [1.0], [10.0]])
        >>> dbscan(data, DbscanConfig(eps=0.6, min_pts=2)).labels.tolist()
        [0, 0, 0, -1]
    """
    neighborhoods = radius_neighbors(dataset, config.eps, workers=workers)
    core_mask = np.array([len(i) >= config.min_pts for i in neighborhoods], dtype=bool)
    core_points = np.flatnonzero(core_mask).tolist()

    graph = LevelGraph(dataset.n)
    for i in core_points:
        graph.add_node(i)
    for i in core_points:
        for j in neighborhoods[i].tolist():
            if core_mask[j]:
                graph.union(i, j)

    labels = np.full(dataset.n, NOISE, dtype=np.int64)
    cluster_ids: dict[int, int] = {}
    for i in core_points:
        labels[i] = cluster_ids.setdefault(graph.component_of(i), len(cluster_ids))

    for i in np.flatnonzero(~core_mask).tolist():
        adjacent = [labels[j] for j in neighborhoods[i].tolist() if core_mask[j]]
        if adjacent:
            labels[i] = min(adjacent)

    mylogging.info(
        f"DBSCAN found {len(cluster_ids)} clusters, {int((labels == NOISE).sum())} noise points "
        f"(eps={config.eps}, min_pts={config.min_pts})."
    )

    return DbscanResult(labels=labels, core_mask=core_mask)
