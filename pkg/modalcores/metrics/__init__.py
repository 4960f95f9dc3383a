"""Clustering quality against ground truth: adjusted Rand index and adjusted mutual information.

Both scores are 1 for identical partitions (whatever the label names are) and around 0 for random labelings.
Mutual information uses natural logarithm and the max entropy normalization.

Examples:
=========

    >>> adjusted_rand_index([1, 1, 2, 2], [1, 1, 1, 2])
    0.0
    >>> report = score([0, 0, 1, 1, 2], [7, 7, 3, 3, 1])
    >>> report.ari, report.ami
    (1.0, 1.0)
    >>> report.contingency.shape
    (3, 3)
"""
from modalcores.metrics.metrics_internal import (
    adjusted_mutual_information,
    adjusted_rand_index,
    contingency,
    entropy,
    expected_mutual_information,
    mutual_information,
    score,
    ScoreReport,
)

__all__ = [
    "adjusted_mutual_information",
    "adjusted_rand_index",
    "contingency",
    "entropy",
    "expected_mutual_information",
    "mutual_information",
    "score",
    "ScoreReport",
]
