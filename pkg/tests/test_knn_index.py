"""Tests for knn_index subpackage."""

from __future__ import annotations
from pathlib import Path
import sys

import numpy as np
import pytest

root_path = Path(__file__).parents[1].as_posix()  # pylint: disable=no-member
sys.path.insert(0, root_path)

from modalcores.dataset import Dataset  # pylint: disable=wrong-import-position
from modalcores.errors import FormatError, InvalidKError  # pylint: disable=wrong-import-position
from modalcores.knn_index import (  # pylint: disable=wrong-import-position
    build_index,
    dump_index,
    knn_brute_force,
    load_index,
    MAX_TREE_DIMENSION,
    radius_neighbors,
)
from tests.helpers.oracles import brute_knn, mutual_edges  # pylint: disable=wrong-import-position

# pylint: disable=missing-function-docstring

four_points = Dataset([[0.0], [1.0], [2.0], [10.0]])


def test_hand_example():
    for index in (build_index(four_points, 2), knn_brute_force(four_points, 2)):
        assert index.radii.tolist() == [1.0, 1.0, 1.0, 8.0]
        assert index.neighbors[:, 0].tolist() == [0, 1, 2, 3]

    # Point 1 has neighbors 0 and 2 at the same distance, lower index wins
    assert build_index(four_points, 2).neighbors[1].tolist() == [1, 0]


def test_self_is_first_neighbor():
    assert build_index(four_points, 1).radii.tolist() == [0.0, 0.0, 0.0, 0.0]

    single = knn_brute_force(Dataset([[3.0, 4.0]]), 1)
    assert single.radii.tolist() == [0.0]
    assert single.neighbors.tolist() == [[0]]

    with pytest.raises(InvalidKError):
        build_index(four_points, 5)
    with pytest.raises(InvalidKError):
        knn_brute_force(four_points, 0)


def test_tree_equals_brute_force():
    rng = np.random.default_rng(0)

    for _ in range(50):
        n = int(rng.integers(2, 201))
        d = int(rng.integers(1, 4))
        k = int(rng.integers(2, min(15, n) + 1))
        data = Dataset(rng.normal(size=(n, d)))

        tree = build_index(data, k)
        brute = knn_brute_force(data, k)

        assert np.array_equal(tree.neighbors, brute.neighbors)
        assert np.allclose(tree.distances, brute.distances, rtol=1e-12, atol=0)


def test_against_independent_oracle():
    rng = np.random.default_rng(1)
    points = rng.uniform(size=(60, 3))

    neighbors, distances = brute_knn(points, 10)
    index = build_index(Dataset(points), 10)

    assert np.array_equal(index.neighbors, neighbors)
    assert np.allclose(index.distances, distances, rtol=1e-12)


def test_ties_on_grid():
    # Lattice has many equal distances, both methods must resolve them by index
    grid = np.array([[i, j] for i in range(8) for j in range(8)], dtype=float)
    data = Dataset(grid)

    for k in (2, 5, 9, 13):
        assert np.array_equal(build_index(data, k).neighbors, knn_brute_force(data, k).neighbors)
        assert np.array_equal(build_index(data, k).neighbors, brute_knn(grid, k)[0])


def test_high_dimension_uses_brute_force():
    rng = np.random.default_rng(2)
    data = Dataset(rng.normal(size=(40, MAX_TREE_DIMENSION + 4)))

    assert np.array_equal(build_index(data, 6).neighbors, knn_brute_force(data, 6).neighbors)


def test_truncate_is_prefix():
    rng = np.random.default_rng(4)
    data = Dataset(rng.normal(size=(100, 2)))
    big = build_index(data, 20)

    for k in (2, 7, 20):
        small = build_index(data, k)
        assert np.array_equal(big.truncate(k).neighbors, small.neighbors)
        assert np.array_equal(big.truncate(k).radii, small.radii)

    with pytest.raises(InvalidKError):
        big.truncate(21)


def test_mutual_neighbors():
    index = build_index(four_points, 2)

    assert [i.tolist() for i in index.mutual_neighbors] == [[1], [0, 2], [1], []]
    assert index.n_edges() == 2

    rng = np.random.default_rng(5)
    points = rng.normal(size=(80, 2))
    index = build_index(Dataset(points), 6)
    edges = {(i, int(j)) for i, row in enumerate(index.mutual_neighbors) for j in row if i < j}

    assert edges == mutual_edges(points, 6)
    assert all(i in index.mutual_neighbors[j] for i, row in enumerate(index.mutual_neighbors) for j in row)


def test_radius_neighbors():
    lists = radius_neighbors(Dataset([[0.0], [0.5], [1.0], [10.0]]), 0.6)

    assert [i.tolist() for i in lists] == [[0, 1], [0, 1, 2], [1, 2], [3]]


def test_dump_and_load(tmp_path):
    rng = np.random.default_rng(6)
    data = Dataset(rng.normal(size=(50, 3)))
    index = build_index(data, 7)
    path = tmp_path / "index.bin"

    dump_index(index, data, path)
    loaded = load_index(path, data)

    assert loaded.k == 7
    assert np.array_equal(loaded.neighbors, index.neighbors)
    assert np.array_equal(loaded.distances, index.distances)

    with pytest.raises(FormatError):
        load_index(path, data.with_points(data.points + 1))

    path.write_bytes(path.read_bytes()[:-8])
    with pytest.raises(FormatError):
        load_index(path)

    (tmp_path / "other.bin").write_bytes(b"not an index at all, just some bytes here")
    with pytest.raises(FormatError):
        load_index(tmp_path / "other.bin")
