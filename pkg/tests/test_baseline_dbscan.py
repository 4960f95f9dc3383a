"""Tests for baseline_dbscan subpackage."""

from __future__ import annotations
from pathlib import Path
import sys

import numpy as np
import pytest

root_path = Path(__file__).parents[1].as_posix()  # pylint: disable=no-member
sys.path.insert(0, root_path)

from modalcores.baseline_dbscan import dbscan, DbscanConfig, NOISE  # pylint: disable=wrong-import-position
from modalcores.dataset import Dataset  # pylint: disable=wrong-import-position
from modalcores.errors import InvalidConfigError  # pylint: disable=wrong-import-position
from modalcores.metrics import adjusted_rand_index  # pylint: disable=wrong-import-position

# pylint: disable=missing-function-docstring


def test_hand_example():
    result = dbscan(Dataset([[0.0], [0.5], [1.0], [10.0]]), DbscanConfig(eps=0.6, min_pts=2))

    assert result.labels.tolist() == [0, 0, 0, NOISE]
    assert result.core_mask.tolist() == [True, True, True, False]
    assert result.n_clusters == 1


def test_extreme_parameters():
    data = Dataset([[0.0], [0.5], [1.0], [10.0]])

    assert dbscan(data, DbscanConfig(eps=0.01, min_pts=2)).labels.tolist() == [NOISE] * 4
    assert dbscan(data, DbscanConfig(eps=0.01, min_pts=2)).n_clusters == 0
    assert dbscan(data, DbscanConfig(eps=0.01, min_pts=1)).labels.tolist() == [0, 1, 2, 3]
    assert dbscan(data, DbscanConfig(eps=100.0, min_pts=4)).labels.tolist() == [0, 0, 0, 0]


def test_border_point_joins_lowest_cluster():
    # Point 5.0 is border point of both clusters
    data = Dataset([[0.0], [0.1], [0.2], [0.3], [5.0], [9.7], [9.8], [9.9], [10.0]])
    result = dbscan(data, DbscanConfig(eps=4.75, min_pts=4))

    assert result.core_mask.tolist() == [True] * 4 + [False] + [True] * 4
    assert result.labels.tolist() == [0, 0, 0, 0, 0, 1, 1, 1, 1]


def test_two_blobs_with_noise():
    rng = np.random.default_rng(0)
    points = np.vstack([rng.normal(size=(200, 2)) * 0.3, rng.normal(size=(200, 2)) * 0.3 + 5, [[20.0, 20.0]]])

    result = dbscan(Dataset(points), DbscanConfig(eps=0.5, min_pts=5))

    assert result.n_clusters == 2
    assert result.labels[-1] == NOISE
    assert len(set(result.labels[:200].tolist()) - {NOISE}) == 1
    assert len(set(result.labels[200:400].tolist()) - {NOISE}) == 1


def test_permutation_invariance():
    rng = np.random.default_rng(1)
    points = np.vstack([rng.normal(size=(150, 2)), rng.normal(size=(150, 2)) + 4])
    config = DbscanConfig(eps=0.4, min_pts=5)
    result = dbscan(Dataset(points), config)
    labels, core = result.labels, result.core_mask

    for _ in range(10):
        order = rng.permutation(len(points))
        shuffled = dbscan(Dataset(points[order]), config)

        assert (shuffled.core_mask == core[order]).all()
        assert ((shuffled.labels == NOISE) == (labels[order] == NOISE)).all()

        # Border points may join other adjacent cluster, core points may not
        in_core = core[order]
        assert adjusted_rand_index(labels[order][in_core], shuffled.labels[in_core]) == pytest.approx(1.0)


def test_invalid_config():
    for eps in (0, -1.0, float("nan"), float("inf")):
        with pytest.raises(InvalidConfigError):
            DbscanConfig(eps=eps)
    for min_pts in (0, 2.5, True):
        with pytest.raises(InvalidConfigError):
            DbscanConfig(eps=1.0, min_pts=min_pts)  # type: ignore
