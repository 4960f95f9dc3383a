"""Exact DBSCAN used as baseline in comparisons.

Core point has at least ``min_pts`` points (itself included) within ``eps``. Points that are neither core
nor next to a core point are noise, labeled -1.

Examples:
=========

    >>> from modalcores.dataset import Dataset
    >>> result = dbscan(Dataset([[0.0], [1.0], [3.0]]), DbscanConfig(eps=0.5, min_pts=2))
    >>> result.labels.tolist()
    [-1, -1, -1]
    >>> dbscan(Dataset([[0.0], [1.0], [3.0]]), DbscanConfig(eps=1.0, min_pts=1)).labels.tolist()
    [0, 0, 1]
"""
from modalcores.baseline_dbscan.baseline_dbscan_internal import dbscan, DbscanConfig, DbscanResult, NOISE

__all__ = ["dbscan", "DbscanConfig", "DbscanResult", "NOISE"]
