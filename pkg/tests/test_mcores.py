"""Tests for mcores subpackage."""

from __future__ import annotations
from pathlib import Path
import sys

import numpy as np
import pytest

root_path = Path(__file__).parents[1].as_posix()  # pylint: disable=no-member
sys.path.insert(0, root_path)

from modalcores.dataset import Dataset  # pylint: disable=wrong-import-position
from modalcores.density import BetaConfig, knn_density  # pylint: disable=wrong-import-position
from modalcores.errors import (  # pylint: disable=wrong-import-position
    FormatError,
    InvalidConfigError,
    InvalidKError,
    LengthMismatchError,
)
from modalcores.knn_index import build_index  # pylint: disable=wrong-import-position
from modalcores.mcores import (  # pylint: disable=wrong-import-position
    estimate_modal_sets,
    high_level_estimates,
    McoresConfig,
    modal_set_points,
    read_estimates,
    run_mcores,
    write_estimates,
)
from tests.helpers.oracles import straight_descent  # pylint: disable=wrong-import-position

# pylint: disable=missing-function-docstring


def fit(points, k: int, **config):
    data = Dataset(points)
    index = build_index(data, k)
    density = knn_density(index, data.n, data.d)
    return data, density, run_mcores(data, index, density, McoresConfig(k=k, **config))


def test_config_validation():
    with pytest.raises(InvalidKError):
        McoresConfig(k=1)
    with pytest.raises(InvalidKError):
        McoresConfig(k=2.5)  # type: ignore
    with pytest.raises(InvalidConfigError):
        McoresConfig(k=5, eps0=-1.0)


def test_hand_example_with_clamped_level():
    _, _, result = fit([[0.0], [1.0], [2.0], [10.0]], 2)

    assert result.clamped
    assert result.beta == pytest.approx(2**0.5)
    assert [(i.members, i.creation_level, i.founder, i.rank) for i in result.estimates] == [
        ((0, 1, 2), 0.25, 0, 0),
        ((3,), 0.03125, 3, 1),
    ]


def test_inputs_must_match():
    data = Dataset([[0.0], [1.0], [2.0], [10.0]])
    index = build_index(data, 3)
    density = knn_density(index, 4, 1)

    with pytest.raises(InvalidConfigError):
        run_mcores(data, index, density, McoresConfig(k=2))

    other = Dataset([[0.0], [1.0], [2.0]])
    with pytest.raises(LengthMismatchError):
        run_mcores(other, index, density, McoresConfig(k=3))


def test_two_blobs():
    rng = np.random.default_rng(0)
    left = rng.uniform(0, 1, size=(400, 2))
    right = rng.uniform(0, 1, size=(400, 2)) + [20.0, 0.0]

    _, _, result = fit(np.vstack([left, right]), 30)

    assert result.count == 2
    sides = sorted(set(np.array(i.members) >= 400) for i in result.estimates)
    assert sides == [{False}, {True}]


def test_first_estimate_contains_density_argmax():
    rng = np.random.default_rng(1)
    _, density, result = fit(rng.normal(size=(2000, 2)), 50)

    first = result.estimates[0]
    assert first.rank == 0
    assert first.founder == density.order[0]
    assert int(np.argmax(density.values)) in first.members
    assert first.creation_level == density.max_value


def test_against_straight_descent():
    rng = np.random.default_rng(2)

    for trial in range(12):
        n = int(rng.integers(30, 120))
        d = int(rng.integers(1, 3))
        k = int(rng.integers(3, 12))
        points = np.vstack([rng.normal(size=(n // 2, d)), rng.normal(size=(n - n // 2, d)) + 6])
        beta = 0.05 if trial % 2 else 2 / np.sqrt(k)
        eps0 = 0.0 if trial % 3 else 0.001

        _, _, result = fit(points, k, beta=BetaConfig("custom", custom_value=float(beta)), eps0=eps0)
        expected = straight_descent(points, k, float(beta), eps0=eps0)

        assert [(i.members, i.founder) for i in result.estimates] == expected


def test_estimates_are_disjoint_and_ordered():
    rng = np.random.default_rng(3)
    _, _, result = fit(rng.normal(size=(500, 2)), 10, beta=BetaConfig("custom", custom_value=0.05))

    levels = [i.creation_level for i in result.estimates]
    assert levels == sorted(levels, reverse=True)
    assert [i.rank for i in result.estimates] == list(range(result.count))

    members = [j for i in result.estimates for j in i.members]
    assert len(members) == len(set(members))
    assert all(i.founder in i.members for i in result.estimates)


def test_pruning_never_adds_estimates():
    rng = np.random.default_rng(4)
    points = rng.normal(size=(600, 2))
    beta = BetaConfig("custom", custom_value=0.05)

    counts = [fit(points, 15, beta=beta, eps_prune=eps)[2].count for eps in (0.0, 0.001, 0.01, 0.1)]

    assert counts == sorted(counts, reverse=True)


def test_estimate_modal_sets_and_points():
    data = Dataset([[0.0], [1.0], [2.0], [10.0]])
    index = build_index(data, 2)
    estimates = estimate_modal_sets(data, index, knn_density(index, 4, 1), McoresConfig(k=2))

    assert modal_set_points(data, estimates[1]).tolist() == [[10.0]]


def test_high_level_estimates():
    data, density, result = fit([[0.0], [1.0], [2.0], [10.0]], 2)

    assert high_level_estimates(result.estimates, density, 0) == result.estimates
    top = high_level_estimates(result.estimates, density, 1)
    assert len(top) >= 1
    assert all(i.creation_level == density.max_value for i in top)
    assert data.n == 4

    with pytest.raises(InvalidConfigError):
        high_level_estimates(result.estimates, density, 1.5)


def test_write_and_read_estimates(tmp_path):
    _, _, result = fit([[0.0], [1.0], [2.0], [10.0]], 2)
    path = tmp_path / "estimates.jsonl"
    provenance = {"config": {"k": 2}}

    write_estimates(result.estimates, path, provenance)
    estimates, header = read_estimates(path)

    assert estimates == result.estimates
    assert header["provenance"] == provenance

    copy = tmp_path / "copy.jsonl"
    write_estimates(estimates, copy, provenance)
    assert copy.read_bytes() == path.read_bytes()

    path.write_text('{"format": "other"}\n', encoding="utf-8")
    with pytest.raises(FormatError):
        read_estimates(path)

    path.write_text('{"format": "modalcores-estimates", "version": 99}\n', encoding="utf-8")
    with pytest.raises(FormatError):
        read_estimates(path)

    path.write_text("not json\n", encoding="utf-8")
    with pytest.raises(FormatError):
        read_estimates(path)
