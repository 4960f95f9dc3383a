"""Module with functions for 'density' subpackage."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Optional
import math

import numpy as np
from scipy.special import gammaln
from typing_extensions import Literal

from ..errors import (
    DensityRangeError,
    InvalidConfigError,
    InvalidDeltaError,
    InvalidDimensionError,
    InvalidKError,
    LengthMismatchError,
    TooFewPointsError,
    ZeroRadiusError,
)
from ..knn_index import KnnIndex

BetaMode = Literal["theoretical", "practical", "custom"]
BETA_MODES = ("theoretical", "practical", "custom")
DEFAULT_DELTA = 0.05


def _check_dimension(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)) or d < 1:
        raise InvalidDimensionError(f"Dimension must be positive integer, got {d!r}.")


def unit_ball_volume(d: int) -> float:
    """Volume of unit ball in R^d, ``pi^(d/2) / Gamma(d/2 + 1)``.

    Computed with recurrence ``v_d = v_(d-2) * 2 * pi / d`` so small dimensions are exact to rounding.

    Examples:
        >>> unit_ball_volume(1)
        2.0
        >>> unit_ball_volume(2) == math.pi
        True
        >>> unit_ball_volume(3)
        4.18879...
    """
    _check_dimension(d)
    volume = 2.0 if d % 2 else 1.0
    for i in range(2 + d % 2, d + 1, 2):
        volume *= 2 * math.pi / i
    return volume


def log_unit_ball_volume(d: int) -> float:
    """Natural logarithm of ``unit_ball_volume``, usable also where the volume underflows."""
    _check_dimension(d)
    return float(d / 2 * math.log(math.pi) - gammaln(d / 2 + 1))


@dataclass(frozen=True)
class DensityEstimate:
    """k-NN density at every sample point with the order in which points are processed.

    Attributes:
        values (np.ndarray): f_k of every point.
        log_values (np.ndarray): Natural logarithm of ``values``.
        order (np.ndarray): Point indices by descending f_k, ties by ascending index.
        k (int): Neighbor count.
        n (int): Sample size.
        d (int): Dimension.
    """

    values: np.ndarray
    log_values: np.ndarray
    order: np.ndarray
    k: int
    n: int
    d: int

    def __post_init__(self) -> None:
        for name in ("values", "log_values", "order"):
            array = np.array(getattr(self, name))
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def max_value(self) -> float:
        """Highest density value."""
        return float(self.values[self.order[0]])


def knn_density(index: KnnIndex, n: int, d: int) -> DensityEstimate:
    """Compute ``f_k(x) = k / (n * v_d * r_k(x)^d)`` at every sample point.

    Args:
        index (KnnIndex): k-NN index of the samples.
        n (int): Sample size.
        d (int): Dimension.

    Raises:
        ZeroRadiusError: If some point has at least k exact copies.
        DensityRangeError: If some value can not be represented in float64.

    Returns:
        DensityEstimate: Values and the processing order.

    Example:
        >>> from modalcores.dataset import Dataset
        >>> from modalcores.knn_index import build_index
        >>> density = knn_density(build_index(Dataset([[0.0], [1.0], [2.0], [10.0]]), 2), n=4, d=1)
        >>> density.values.tolist()
        [0.25, 0.25, 0.25, 0.03125]
        >>> density.order.tolist()
        [0, 1, 2, 3]
    """
    _check_dimension(d)
    if index.n != n:
        raise LengthMismatchError(f"Index contains {index.n} points but n={n}.")

    k = index.k
    radii = index.radii

    zero = np.flatnonzero(radii == 0)
    if zero.size:
        raise ZeroRadiusError(
            f"{zero.size} points have k-NN radius 0 (at least k={k} identical points), e.g. indices "
            f"{zero[:10].tolist()}. Density would be infinite. Check data with 'validate', use larger k, "
            "remove duplicates or add noise with --jitter."
        )

    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        values = k / (n * unit_ball_volume(d) * radii**d)

    log_values = math.log(k) - math.log(n) - log_unit_ball_volume(d) - d * np.log(radii)

    if not (np.isfinite(values).all() and (values > 0).all()):
        raise DensityRangeError(
            f"Density values do not fit into float64 (log density from {log_values.min():.4g} to "
            f"{log_values.max():.4g}) in dimension {d}. Rescale the coordinates."
        )

    order = np.lexsort((np.arange(n), -values))

    return DensityEstimate(values=values, log_values=log_values, order=order, k=k, n=n, d=d)


def _check_delta(delta: float) -> None:
    if not 0 < delta < 1:
        raise InvalidDeltaError(f"Confidence delta must be in open interval (0, 1), got {delta}.")


@dataclass(frozen=True)
class BetaConfig:
    """How the level slack beta_k is computed.

    Attributes:
        mode (BetaMode): 'theoretical' is ``4 * C_delta_n / sqrt(k)``, 'practical' is ``2 / sqrt(k)`` and
            'custom' is ``custom_value``.
        delta (float): Confidence in (0, 1) used in theoretical mode.
        custom_value (Optional[float]): Positive value used in custom mode.
    """

    mode: BetaMode = "practical"
    delta: float = DEFAULT_DELTA
    custom_value: Optional[float] = None

    def __post_init__(self) -> None:
        if self.mode not in BETA_MODES:
            raise InvalidConfigError(f"Beta mode must be one of {BETA_MODES}, got {self.mode!r}.")
        _check_delta(self.delta)
        if self.mode == "custom" and (self.custom_value is None or not self.custom_value > 0):
            raise InvalidConfigError(f"Custom beta mode needs positive value, got {self.custom_value!r}.")


def c_delta_n(delta: float, n: float, d: float) -> float:
    """Confidence constant ``16 * log(2 / delta) * sqrt(d * log(n))`` with natural logarithms.

    ``n`` and ``d`` can be real, it's only a formula.

    Example:
        >>> c_delta_n(2 / math.e, n=math.e, d=1)
        16.0...
    """
    _check_delta(delta)
    if not n >= 2:
        raise TooFewPointsError(f"Sample size must be at least 2, got {n}.")
    if not d > 0:
        raise InvalidDimensionError(f"Dimension must be positive, got {d}.")
    return 16 * math.log(2 / delta) * math.sqrt(d * math.log(n))


def beta_k(config: BetaConfig, k: int, n: float, d: float) -> float:
    """Level slack used by M-cores.

    Examples:
        >>> beta_k(BetaConfig("practical"), k=4, n=100, d=1)
        1.0
        >>> beta_k(BetaConfig("custom", custom_value=0.1), k=4, n=100, d=1)
        0.1
    """
    if k < 2:
        raise InvalidKError(f"k must be at least 2 (the point itself is its first neighbor), got {k}.")

    if config.mode == "practical":
        return 2 / math.sqrt(k)
    if config.mode == "theoretical":
        return 4 * c_delta_n(config.delta, n, d) / math.sqrt(k)
    return float(config.custom_value)


def default_k(n: float) -> int:
    """Default neighbor count ``max(2, round(log(n)^2 / 2))``, halves rounded up.

    Examples:
        >>> default_k(6000)
        38
        >>> default_k(8)
        2
    """
    if not n >= 8:
        raise TooFewPointsError(f"Default k needs at least 8 points, got {n}. Set k explicitly.")
    return max(2, math.floor(0.5 * math.log(n) ** 2 + 0.5))
