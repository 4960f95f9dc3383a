"""Module with functions for 'metrics' subpackage."""

from __future__ import annotations
from dataclasses import dataclass
from math import comb, log

import numpy as np
from scipy.special import gammaln

from ..errors import LengthMismatchError


@dataclass(frozen=True)
class ScoreReport:
    """Agreement of clustering with ground truth.

    Attributes:
        ari (float): Adjusted Rand index.
        ami (float): Adjusted mutual information (max entropy normalization).
        contingency (np.ndarray): Cluster x class count table.
    """

    ari: float
    ami: float
    contingency: np.ndarray

    def as_dict(self) -> dict:
        """Scores without the table."""
        return {"ari": self.ari, "ami": self.ami}


def contingency(labels_a, labels_b) -> np.ndarray:
    """Count table ``n_ij`` of points with label i in ``labels_a`` and label j in ``labels_b``.

    Rows follow sorted unique labels of ``labels_a`` and columns sorted unique labels of ``labels_b``.

    Raises:
        LengthMismatchError: If labelings have different length or are empty.

    Example:
        >>> contingency([1, 1, 2, 2], [1, 1, 1, 2])
        array([[2, 0],
               [1, 1]])
    """
    labels_a = np.asarray(labels_a).reshape(-1)
    labels_b = np.asarray(labels_b).reshape(-1)

    if labels_a.shape != labels_b.shape:
        raise LengthMismatchError(f"Labelings have different length, {labels_a.size} and {labels_b.size}.")
    if labels_a.size == 0:
        raise LengthMismatchError("Labelings must not be empty.")

    _, rows = np.unique(labels_a, return_inverse=True)
    _, cols = np.unique(labels_b, return_inverse=True)
    rows, cols = rows.reshape(-1), cols.reshape(-1)

    table = np.zeros((rows.max() + 1, cols.max() + 1), dtype=np.int64)
    np.add.at(table, (rows, cols), 1)
    return table


def _identical(table: np.ndarray) -> bool:
    """Partitions are equal if every row and every column has one nonzero cell."""
    nonzero = table > 0
    return bool((nonzero.sum(axis=0) == 1).all() and (nonzero.sum(axis=1) == 1).all())


def adjusted_rand_index(labels_a, labels_b) -> float:
    """Adjusted Rand index with pair counting (Hubert and Arabie adjustment).

    If the denominator is zero, 1.0 is returned for identical partitions and 0.0 otherwise.

    Examples:
        >>> adjusted_rand_index([1, 1, 2, 2], [1, 1, 1, 2])
        0.0
        >>> adjusted_rand_index([0, 0, 1], [5, 5, 3])
        1.0
    """
    table = contingency(labels_a, labels_b)

    if _identical(table):
        return 1.0

    n = int(table.sum())
    index = sum(comb(int(i), 2) for i in table.ravel() if i > 1)
    sum_a = sum(comb(int(i), 2) for i in table.sum(axis=1))
    sum_b = sum(comb(int(i), 2) for i in table.sum(axis=0))
    total = comb(n, 2)

    expected = sum_a * sum_b / total
    maximum = (sum_a + sum_b) / 2

    if maximum == expected:
        return 0.0

    return (index - expected) / (maximum - expected)


def entropy(labels) -> float:
    """Entropy of labeling in nats.

    Example:
        >>> round(entropy([0, 1]), 6) == round(log(2), 6)
        True
    """
    _, counts = np.unique(np.asarray(labels).reshape(-1), return_counts=True)
    return _entropy_of_counts(counts)


def _entropy_of_counts(counts: np.ndarray) -> float:
    counts = counts[counts > 0].astype(np.float64)
    total = counts.sum()
    return float(-np.sum(counts / total * (np.log(counts) - log(total))))


def _mutual_information_of_table(table: np.ndarray) -> float:
    n = float(table.sum())
    a = table.sum(axis=1).astype(np.float64)
    b = table.sum(axis=0).astype(np.float64)
    rows, cols = np.nonzero(table)
    n_ij = table[rows, cols].astype(np.float64)
    return float(np.sum(n_ij / n * (np.log(n_ij) + log(n) - np.log(a[rows]) - np.log(b[cols]))))


def mutual_information(labels_a, labels_b) -> float:
    """Mutual information of two labelings in nats."""
    return _mutual_information_of_table(contingency(labels_a, labels_b))


def _expected_mutual_information_of_table(table: np.ndarray) -> float:
    n = int(table.sum())
    a = table.sum(axis=1)
    b = table.sum(axis=0)
    log_n_factorial = gammaln(n + 1)
    result = 0.0

    for a_i in a.tolist():
        for b_j in b.tolist():
            start = max(1, a_i + b_j - n)
            stop = min(a_i, b_j)
            if start > stop:
                continue
            n_ij = np.arange(start, stop + 1, dtype=np.float64)

            log_probability = (
                gammaln(a_i + 1)
                + gammaln(b_j + 1)
                + gammaln(n - a_i + 1)
                + gammaln(n - b_j + 1)
                - log_n_factorial
                - gammaln(n_ij + 1)
                - gammaln(a_i - n_ij + 1)
                - gammaln(b_j - n_ij + 1)
                - gammaln(n - a_i - b_j + n_ij + 1)
            )
            term = n_ij / n * (np.log(n_ij) + log(n) - log(a_i) - log(b_j))
            result += float(np.sum(term * np.exp(log_probability)))

    return result


def expected_mutual_information(labels_a, labels_b) -> float:
    """Expected mutual information of labelings with the same cluster sizes under random permutation.

    Hypergeometric model, natural logarithms.
    """
    return _expected_mutual_information_of_table(contingency(labels_a, labels_b))


def adjusted_mutual_information(labels_a, labels_b) -> float:
    """Adjusted mutual information ``(MI - E[MI]) / (max(H(a), H(b)) - E[MI])``.

    If the denominator is zero, 1.0 is returned for identical partitions and 0.0 otherwise.

    Examples:
        >>> adjusted_mutual_information([0, 0, 1, 1], [1, 1, 0, 0])
        1.0
        >>> adjusted_mutual_information([0, 0, 0, 0], [0, 0, 1, 1])
        0.0
    """
    table = contingency(labels_a, labels_b)

    if _identical(table):
        return 1.0

    mutual = _mutual_information_of_table(table)
    expected = _expected_mutual_information_of_table(table)
    normalizer = max(_entropy_of_counts(table.sum(axis=1)), _entropy_of_counts(table.sum(axis=0)))
    denominator = normalizer - expected

    if abs(denominator) < 1e-15:
        return 0.0

    return float((mutual - expected) / denominator)


def score(labels_a, labels_b) -> ScoreReport:
    """Both adjusted scores with the contingency table.

    Example:
        >>> report = score([0, 0, 1, 1], [0, 0, 1, 1])
        >>> report.ari, report.ami
        (1.0, 1.0)
    """
    return ScoreReport(
        ari=adjusted_rand_index(labels_a, labels_b),
        ami=adjusted_mutual_information(labels_a, labels_b),
        contingency=contingency(labels_a, labels_b),
    )
