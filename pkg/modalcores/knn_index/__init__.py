"""Exact k nearest neighbors with k-NN radii.

The query point itself is counted as its own nearest neighbor, so ``r_k`` is the distance that makes the
closed ball around the point contain k sample points. With k=1 all radii are zero, meaningful k starts at 2.

Distance ties are broken by ascending index, so neighbor lists are deterministic across runs.

Examples:
=========

    >>> from modalcores.dataset import Dataset
    >>> data = Dataset([[0.0], [1.0], [2.0], [10.0]])
    >>> index = build_index(data, k=2)
    >>> index.radii.tolist()
    [1.0, 1.0, 1.0, 8.0]

Points 0 and 2 are not mutual neighbors, because their distance 2 is bigger than both radii.

    >>> [i.tolist() for i in index.mutual_neighbors]
    [[1], [0, 2], [1], []]

Brute force gives the same result.

    >>> bool((knn_brute_force(data, 2).neighbors == index.neighbors).all())
    True
"""
from modalcores.knn_index.knn_index_internal import (
    build_index,
    dump_index,
    INDEX_FORMAT_VERSION,
    KnnIndex,
    knn_brute_force,
    load_index,
    MAX_TREE_DIMENSION,
    radius_neighbors,
)

__all__ = [
    "build_index",
    "dump_index",
    "INDEX_FORMAT_VERSION",
    "KnnIndex",
    "knn_brute_force",
    "load_index",
    "MAX_TREE_DIMENSION",
    "radius_neighbors",
]
