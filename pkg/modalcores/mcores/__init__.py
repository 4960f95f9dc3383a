"""M-cores estimator of modal-sets.

Points are processed in descending order of k-NN density. While descending, mutual k-NN graph of points
above lower level grows and whenever processed point lies in component that does not intersect any estimate
yet, the high density part of that component becomes new estimate (cluster core).

``eps0`` allows the density to vary on estimated set and ``eps_prune`` merges components that are connected
slightly below the level. With both zero, the procedure is the basic one.

Examples:
=========

    >>> from modalcores.dataset import Dataset
    >>> from modalcores.knn_index import build_index
    >>> from modalcores.density import knn_density
    >>> data = Dataset([[0.0], [1.0], [2.0], [50.0], [51.0], [52.0]])
    >>> index = build_index(data, k=2)
    >>> density = knn_density(index, data.n, data.d)
    >>> result = run_mcores(data, index, density, McoresConfig(k=2))
    >>> [i.members for i in result.estimates]
    [(0, 1, 2), (3, 4, 5)]
    >>> result.clamped
    True

Estimates are stored as JSON lines with provenance header (see ``write_estimates`` and ``read_estimates``).
"""
from modalcores.mcores.mcores_internal import (
    ESTIMATES_FORMAT,
    ESTIMATES_FORMAT_VERSION,
    estimate_modal_sets,
    high_level_estimates,
    McoresConfig,
    McoresResult,
    modal_set_points,
    ModalSetEstimate,
    read_estimates,
    run_mcores,
    write_estimates,
)

__all__ = [
    "ESTIMATES_FORMAT",
    "ESTIMATES_FORMAT_VERSION",
    "estimate_modal_sets",
    "high_level_estimates",
    "McoresConfig",
    "McoresResult",
    "modal_set_points",
    "ModalSetEstimate",
    "read_estimates",
    "run_mcores",
    "write_estimates",
]
