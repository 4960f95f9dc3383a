"""Clustering with modal-set estimates as cluster cores and set distances for evaluation.

Every point is assigned to the closest estimate, distance to estimate being the distance to its nearest
member. There is no noise label.

Examples:
=========

    >>> from modalcores.dataset import Dataset
    >>> from modalcores.mcores import ModalSetEstimate
    >>> data = Dataset([[0.0], [3.0], [10.0]])
    >>> cores = [ModalSetEstimate((0,), 1.0, 0, 0), ModalSetEstimate((2,), 0.5, 2, 1)]
    >>> assign(data, cores).labels.tolist()
    [0, 0, 1]

Hausdorff distance compares estimates with true modal-sets.

    >>> hausdorff([0.0], [3.0])
    3.0
"""
from modalcores.clustering.clustering_internal import (
    assign,
    ClusteringResult,
    directed_distance,
    hausdorff,
    match_estimates_to_truth,
    MatchedPair,
    MatchReport,
    read_labels,
    write_labels,
)

__all__ = [
    "assign",
    "ClusteringResult",
    "directed_distance",
    "hausdorff",
    "match_estimates_to_truth",
    "MatchedPair",
    "MatchReport",
    "read_labels",
    "write_labels",
]
