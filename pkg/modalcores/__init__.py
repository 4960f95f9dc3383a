"""Estimate modal-sets of unknown density from samples and cluster with them.

Modal-set is a connected set where density is locally maximal, it can be a single point (ordinary mode), a
ring, a segment or any other shape. ``modalcores`` finds all of them with the M-cores level descent over a
mutual k-nearest-neighbor graph. Estimates are cluster cores, every point is assigned to the closest one.

Installation
============

Python >=3.9. Install with::

    pip install modalcores

Python library
==============

**subpackages**

- :py:mod:`modalcores.dataset` - loading, validation and saving of samples
- :py:mod:`modalcores.knn_index` - exact k nearest neighbors and mutual k-NN graph
- :py:mod:`modalcores.density` - k-NN density and level resolution beta_k
- :py:mod:`modalcores.levelgraph` - incremental connected components
- :py:mod:`modalcores.mcores` - modal-set estimation
- :py:mod:`modalcores.clustering` - assignment to cluster cores and Hausdorff matching
- :py:mod:`modalcores.metrics` - adjusted Rand index and adjusted mutual information
- :py:mod:`modalcores.synthgen` - synthetic data with known modal-sets
- :py:mod:`modalcores.baseline_dbscan` - exact DBSCAN for comparison
- :py:mod:`modalcores.cli` - command line interface
- :py:mod:`modalcores.config`, :py:mod:`modalcores.errors`, :py:mod:`modalcores.misc`,
  :py:mod:`modalcores.paths` - helpers

Example
=======

    >>> import modalcores
    >>> spec = modalcores.synthgen.preset_spec("two-gaussians-1d", n=400)
    >>> sample = modalcores.synthgen.generate(spec, seed=1)
    >>> data = sample.data
    >>> k = modalcores.density.default_k(data.n)
    >>> index = modalcores.knn_index.build_index(data, k)
    >>> density = modalcores.density.knn_density(index, data.n, data.d)
    >>> config = modalcores.mcores.McoresConfig(k=k)
    >>> estimates = modalcores.mcores.estimate_modal_sets(data, index, density, config)
    >>> labels = modalcores.clustering.assign(data, estimates).labels
    >>> modalcores.metrics.adjusted_rand_index(sample.labels, labels) > 0.9
    True

Command line
============

Run ``modalcores --help`` or ``python -m modalcores --help``.
"""
from modalcores import (
    baseline_dbscan,
    cli,
    clustering,
    config,
    dataset,
    density,
    errors,
    knn_index,
    levelgraph,
    mcores,
    metrics,
    misc,
    paths,
    synthgen,
)

__all__ = [
    "baseline_dbscan",
    "cli",
    "clustering",
    "config",
    "dataset",
    "density",
    "errors",
    "knn_index",
    "levelgraph",
    "mcores",
    "metrics",
    "misc",
    "paths",
    "synthgen",
]

__version__ = "1.0.0"

__license__ = "MIT"
