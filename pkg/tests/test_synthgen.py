"""Tests for synthgen subpackage."""

from __future__ import annotations
from pathlib import Path
import sys

import numpy as np
import pytest

root_path = Path(__file__).parents[1].as_posix()  # pylint: disable=no-member
sys.path.insert(0, root_path)

from modalcores.errors import FormatError, InvalidSpecError  # pylint: disable=wrong-import-position
from modalcores.synthgen import (  # pylint: disable=wrong-import-position
    connected_parts,
    gen_gaussian_mixture,
    gen_manifold_noise,
    gen_rings,
    generate,
    ManifoldNoiseSpec,
    MixtureSpec,
    preset_spec,
    PRESETS,
    read_truth,
    RingSpec,
    segment_points,
    write_truth,
)

# pylint: disable=missing-function-docstring


def test_noiseless_rings_lie_on_circles():
    spec = RingSpec(centers=[[0, 0], [4, 0]], radii=[1.0, 2.0], counts=[100, 50], noise_sigma=0.0)
    sample = gen_rings(spec, seed=3)

    left = np.linalg.norm(sample.data.points[:100], axis=1)
    right = np.linalg.norm(sample.data.points[100:] - [4, 0], axis=1)

    assert np.allclose(left, 1.0)
    assert np.allclose(right, 2.0)
    assert sample.labels.tolist() == [0] * 100 + [1] * 50


def test_three_rings_preset():
    spec = preset_spec("three-rings")
    sample = generate(spec, seed=0)

    assert sample.data.n == 6000
    assert sample.data.d == 2
    assert len(sample.truth) == 3
    assert all(i.shape == (1000, 2) for i in sample.truth)
    assert np.bincount(sample.labels).tolist() == [2000, 2000, 2000]
    assert spec.discretization_bound == pytest.approx(2 * np.pi / 1000)

    # Noise is 0.003, so nothing is farther than 0.03 from its ring
    for label, center in enumerate(spec.centers):
        radii = np.linalg.norm(sample.data.points[sample.labels == label] - center, axis=1)
        assert np.abs(radii - 1.0).max() < 0.03


def test_stratified_angles():
    spec = RingSpec(centers=[[1, 2]], radii=[2.0], counts=[500], noise_sigma=0.0, angles="stratified")
    points = gen_rings(spec, seed=5).data.points - [1, 2]

    angles = np.mod(np.arctan2(points[:, 1], points[:, 0]), 2 * np.pi)
    arcs = np.floor(angles / (2 * np.pi / 500)).astype(int)

    # One point in every arc
    assert arcs.tolist() == list(range(500))

    gaps = np.diff(np.sort(angles), append=2 * np.pi + angles.min())
    assert gaps.max() < 2 * (2 * np.pi / 500)


def test_generators_are_deterministic():
    for name in PRESETS:
        spec = preset_spec(name, n=200)
        first, second = generate(spec, seed=11), generate(spec, seed=11)

        assert np.array_equal(first.data.points, second.data.points)
        assert np.array_equal(first.labels, second.labels)
        assert all(np.array_equal(i, j) for i, j in zip(first.truth, second.truth))

    spec = preset_spec("three-gaussians", n=200)
    assert not np.array_equal(generate(spec, seed=12).data.points, generate(spec, seed=11).data.points)


def test_gaussian_mixture():
    spec = MixtureSpec(means=[[0.0, 0.0], [10.0, 0.0]], stds=[1.0, [0.5, 2.0]], weights=[0.25, 0.75], n=4000)
    sample = gen_gaussian_mixture(spec, seed=0)

    assert [i.tolist() for i in sample.truth] == [[[0.0, 0.0]], [[10.0, 0.0]]]
    assert abs(np.mean(sample.labels == 1) - 0.75) < 0.03

    second = sample.data.points[sample.labels == 1]
    assert np.allclose(second.mean(axis=0), [10.0, 0.0], atol=0.15)
    assert np.allclose(second.std(axis=0), [0.5, 2.0], rtol=0.1)


def test_manifold_noise():
    base = np.concatenate([segment_points([0, 0], [4, 0], 401), segment_points([0, 3], [4, 3], 401)])
    spec = ManifoldNoiseSpec(base, sigma=0.1, n=1000)
    sample = gen_manifold_noise(spec, seed=0)

    assert spec.discretization_gap == pytest.approx(0.01)
    assert len(sample.truth) == 2
    assert [i.shape[0] for i in sample.truth] == [401, 401]
    assert set(sample.labels.tolist()) == {0, 1}
    assert np.abs(sample.data.points[sample.labels == 1][:, 1] - 3).max() < 0.6


def test_connected_parts():
    points = np.array([[0.0], [5.0], [1.0], [6.0], [20.0]])

    assert connected_parts(points, 1.5).tolist() == [0, 1, 0, 1, 2]
    assert connected_parts(points, 0.0).tolist() == [0, 1, 2, 3, 4]
    assert connected_parts(points, 100.0).tolist() == [0, 0, 0, 0, 0]


def test_invalid_specs():
    with pytest.raises(InvalidSpecError):
        RingSpec(centers=[[0.0]], radii=[1.0], counts=[10])
    with pytest.raises(InvalidSpecError):
        RingSpec(centers=[[0, 0]], radii=[1.0, 2.0], counts=[10])
    with pytest.raises(InvalidSpecError):
        RingSpec(centers=[[0, 0]], radii=[-1.0], counts=[10])
    with pytest.raises(InvalidSpecError):
        RingSpec(centers=[[0, 0]], radii=[1.0], counts=[10], noise_sigma=-0.1)
    with pytest.raises(InvalidSpecError):
        RingSpec(centers=[[0, 0]], radii=[1.0], counts=[10], angles="grid")  # type: ignore
    with pytest.raises(InvalidSpecError):
        MixtureSpec(means=[[0.0]], stds=[1.0], weights=[0.5], n=10)
    with pytest.raises(InvalidSpecError):
        MixtureSpec(means=[[0.0]], stds=[0.0], weights=[1.0], n=10)
    with pytest.raises(InvalidSpecError):
        MixtureSpec(means=[[0.0, 0.0]], stds=[[1.0, 1.0, 1.0]], weights=[1.0], n=10)
    with pytest.raises(InvalidSpecError):
        ManifoldNoiseSpec(np.zeros((3, 2)), sigma=0.0, n=10)
    with pytest.raises(InvalidSpecError):
        preset_spec("four-rings")
    with pytest.raises(InvalidSpecError):
        generate("spec")  # type: ignore


def test_truth_file(tmp_path):
    truth = generate(preset_spec("three-gaussians", n=100)).truth
    path = tmp_path / "truth.jsonl"

    write_truth(truth, path, provenance={"preset": "three-gaussians"})
    loaded = read_truth(path)

    assert len(loaded) == 3
    assert all(np.array_equal(i, j) for i, j in zip(loaded, truth))

    path.write_text('{"format": "modalcores-estimates", "version": 1}\n', encoding="utf-8")
    with pytest.raises(FormatError):
        read_truth(path)

    path.write_text(
        '{"format": "modalcores-truth", "version": 1}\n{"index": 0, "points": []}\n', encoding="utf-8"
    )
    with pytest.raises(FormatError):
        read_truth(path)
