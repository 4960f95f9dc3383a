"""k-NN density estimate and the parameter math around it.

``f_k(x) = k / (n * v_d * r_k(x)^d)`` where ``v_d`` is volume of the unit ball. Points are later processed
in descending order of f_k, ties by ascending index.

Examples:
=========

    >>> from modalcores.dataset import Dataset
    >>> from modalcores.knn_index import build_index
    >>> data = Dataset([[0.0], [1.0], [2.0], [10.0]])
    >>> density = knn_density(build_index(data, k=2), n=data.n, d=data.d)
    >>> density.values.tolist()
    [0.25, 0.25, 0.25, 0.03125]

Level slack beta_k has practical form used in experiments and theoretical form with confidence constant.

    >>> beta_k(BetaConfig(mode="practical"), k=100, n=1000, d=2)
    0.2
    >>> default_k(6000)
    38
"""
from modalcores.density.density_internal import (
    BETA_MODES,
    beta_k,
    BetaConfig,
    BetaMode,
    c_delta_n,
    DEFAULT_DELTA,
    default_k,
    DensityEstimate,
    knn_density,
    log_unit_ball_volume,
    unit_ball_volume,
)

__all__ = [
    "BETA_MODES",
    "beta_k",
    "BetaConfig",
    "BetaMode",
    "c_delta_n",
    "DEFAULT_DELTA",
    "default_k",
    "DensityEstimate",
    "knn_density",
    "log_unit_ball_volume",
    "unit_ball_volume",
]
