"""Tests for density subpackage."""

from __future__ import annotations
from decimal import Decimal, getcontext
from pathlib import Path
import math
import sys

import numpy as np
import pytest

root_path = Path(__file__).parents[1].as_posix()  # pylint: disable=no-member
sys.path.insert(0, root_path)

from modalcores.dataset import Dataset  # pylint: disable=wrong-import-position
from modalcores.density import (  # pylint: disable=wrong-import-position
    beta_k,
    BetaConfig,
    c_delta_n,
    default_k,
    knn_density,
    log_unit_ball_volume,
    unit_ball_volume,
)
from modalcores.errors import (  # pylint: disable=wrong-import-position
    DensityRangeError,
    InvalidConfigError,
    InvalidDeltaError,
    InvalidDimensionError,
    InvalidKError,
    TooFewPointsError,
    ZeroRadiusError,
)
from modalcores.knn_index import build_index, KnnIndex  # pylint: disable=wrong-import-position
from tests.helpers.oracles import brute_density  # pylint: disable=wrong-import-position

# pylint: disable=missing-function-docstring


def test_unit_ball_volume():
    assert unit_ball_volume(1) == 2.0
    assert unit_ball_volume(2) == pytest.approx(math.pi, rel=1e-15)
    assert unit_ball_volume(3) == pytest.approx(4 * math.pi / 3, rel=1e-15)

    for d in range(1, 30):
        expected = math.pi ** (d / 2) / math.gamma(d / 2 + 1)
        assert unit_ball_volume(d) == pytest.approx(expected, rel=1e-12)
        assert log_unit_ball_volume(d) == pytest.approx(math.log(expected), rel=1e-12, abs=1e-12)

    with pytest.raises(InvalidDimensionError):
        unit_ball_volume(0)


def test_knn_density_hand_example():
    data = Dataset([[0.0], [1.0], [2.0], [10.0]])
    density = knn_density(build_index(data, 2), data.n, data.d)

    assert density.values.tolist() == [0.25, 0.25, 0.25, 0.03125]
    assert np.allclose(np.exp(density.log_values), density.values, rtol=1e-12)
    # Equal values are ordered by index
    assert density.order.tolist() == [0, 1, 2, 3]
    assert density.max_value == 0.25


def test_knn_density_scaling():
    rng = np.random.default_rng(0)

    for d in (1, 2, 3):
        points = rng.normal(size=(100, d))
        original = knn_density(build_index(Dataset(points), 5), 100, d)
        doubled = knn_density(build_index(Dataset(2 * points), 5), 100, d)

        assert np.allclose(doubled.values, original.values * 2.0**-d, rtol=1e-12)


def test_knn_density_against_oracle():
    rng = np.random.default_rng(1)
    points = rng.uniform(size=(100, 2))

    density = knn_density(build_index(Dataset(points), 8), 100, 2)

    assert np.allclose(density.values, brute_density(points, 8), rtol=1e-12)


def test_knn_density_errors():
    data = Dataset([[0.0], [0.0], [1.0]])

    with pytest.raises(ZeroRadiusError):
        knn_density(build_index(data, 2), data.n, data.d)

    # Tiny radii in high dimension overflow float64
    tiny = KnnIndex(2, [[0, 1], [1, 0]], [[0.0, 1e-20], [0.0, 1e-20]])
    with pytest.raises(DensityRangeError):
        knn_density(tiny, 2, 20)


def test_c_delta_n():
    assert c_delta_n(2 / math.e, n=math.e, d=1) == pytest.approx(16.0, rel=1e-14)

    assert c_delta_n(0.05, 100, 2) < c_delta_n(0.05, 1000, 2) < c_delta_n(0.05, 1000, 3)

    getcontext().prec = 50
    expected = 16 * (Decimal(40).ln()) * (2 * Decimal(1000).ln()).sqrt()
    assert c_delta_n(0.05, 1000, 2) == pytest.approx(float(expected), rel=1e-12)

    with pytest.raises(InvalidDeltaError):
        c_delta_n(1.0, 1000, 2)
    with pytest.raises(TooFewPointsError):
        c_delta_n(0.05, 1, 2)


def test_beta_k():
    assert beta_k(BetaConfig("practical"), k=4, n=100, d=2) == 1.0
    assert beta_k(BetaConfig("practical"), k=100, n=100, d=2) == 0.2
    assert beta_k(BetaConfig("theoretical", delta=2 / math.e), k=64, n=math.e, d=1) == pytest.approx(8.0)
    assert beta_k(BetaConfig("custom", custom_value=0.3), k=64, n=100, d=1) == 0.3

    with pytest.raises(InvalidKError):
        beta_k(BetaConfig(), k=1, n=100, d=1)
    with pytest.raises(InvalidConfigError):
        BetaConfig("custom")
    with pytest.raises(InvalidConfigError):
        BetaConfig("other")  # type: ignore
    with pytest.raises(InvalidDeltaError):
        BetaConfig(delta=0)


def test_default_k():
    assert default_k(math.e**4) == 8
    assert default_k(8) == 2

    getcontext().prec = 50
    half_square = Decimal(6000).ln() ** 2 / 2
    assert default_k(6000) == int((half_square + Decimal("0.5")).to_integral_value(rounding="ROUND_FLOOR"))
    assert default_k(6000) == 38

    with pytest.raises(TooFewPointsError):
        default_k(7)
