"""Tests for dataset subpackage."""

from __future__ import annotations
from pathlib import Path
import sys

import numpy as np
import pytest

root_path = Path(__file__).parents[1].as_posix()  # pylint: disable=no-member
sys.path.insert(0, root_path)

from modalcores.dataset import (  # pylint: disable=wrong-import-position
    Dataset,
    fingerprint,
    jitter,
    LabeledDataset,
    load_csv,
    save_csv,
    validate,
)
from modalcores.errors import (  # pylint: disable=wrong-import-position
    EmptyDatasetError,
    InvalidConfigError,
    InvalidKError,
    NonFiniteError,
    ParseError,
)

# pylint: disable=missing-function-docstring


def write(tmp_path: Path, content: str, name: str = "data.csv") -> Path:
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return path


def test_load_csv(tmp_path):
    path = write(tmp_path, "0,0\n1,0\n0,1\n")

    data = load_csv(path)
    assert isinstance(data, Dataset)
    assert (data.n, data.d) == (3, 2)
    assert data.points.tolist() == [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]

    labeled = load_csv(path, label_column=1)
    assert isinstance(labeled, LabeledDataset)
    assert (labeled.data.n, labeled.data.d) == (3, 1)
    assert labeled.labels.tolist() == [0, 0, 1]


def test_load_csv_header_comments_and_string_labels(tmp_path):
    path = write(tmp_path, "# comment\nx,y,name\n0.5,1,b\n2,3,a\n4,5,b\n")

    labeled = load_csv(path, has_header=True, label_column=-1)

    assert labeled.data.points.tolist() == [[0.5, 1.0], [2.0, 3.0], [4.0, 5.0]]
    assert labeled.labels.tolist() == [0, 1, 0]


def test_load_csv_errors(tmp_path):
    with pytest.raises(ParseError):
        load_csv(write(tmp_path, "0,0\na,b\n"))

    with pytest.raises(ParseError):
        load_csv(write(tmp_path, "0,0\n1\n"))

    with pytest.raises(EmptyDatasetError):
        load_csv(write(tmp_path, ""))

    with pytest.raises(EmptyDatasetError):
        load_csv(write(tmp_path, "x,y\n"), has_header=True)

    with pytest.raises(NonFiniteError):
        load_csv(write(tmp_path, "0,inf\n"))

    with pytest.raises(InvalidConfigError):
        load_csv(write(tmp_path, "0,0\n"), label_column=5)

    with pytest.raises(FileNotFoundError):
        load_csv(tmp_path / "missing.csv")


def test_dataset_is_read_only():
    data = Dataset([0.0, 1.0, 2.0])

    assert (data.n, data.d) == (3, 1)
    with pytest.raises(ValueError):
        data.points[0, 0] = 5.0
    with pytest.raises(EmptyDatasetError):
        Dataset(np.empty((0, 2)))


def test_validate():
    assert validate(Dataset([[0.0], [1.0], [2.0]]), k=2).ok

    report = validate(Dataset([[0.0], [0.0], [1.0]]), k=2)
    assert report.violations.tolist() == [0, 1]
    assert "--jitter" in report.message()

    assert validate(Dataset([[0.0], [0.0], [1.0]]), k=3).ok

    with pytest.raises(InvalidKError):
        validate(Dataset([[0.0]]), k=0)


def test_save_csv_is_exact_inverse(tmp_path):
    rng = np.random.default_rng(3)
    data = Dataset(rng.normal(size=(20, 3)) * 1e3)
    labeled = LabeledDataset(data, rng.integers(0, 4, size=20))
    path = tmp_path / "saved.csv"

    save_csv(labeled, path, header=True, comments=("generated",))
    loaded = load_csv(path, has_header=True, label_column=-1)

    assert np.array_equal(loaded.data.points, data.points)
    assert np.array_equal(loaded.labels, labeled.labels)
    assert path.read_text(encoding="utf-8").startswith("# generated\n")


def test_jitter_and_fingerprint():
    data = Dataset([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]])

    assert jitter(data, 0.0) is data

    jittered = jitter(data, 0.01, seed=5)
    assert np.abs(jittered.points - data.points).max() <= 0.01
    assert validate(jittered, k=2).ok
    assert np.array_equal(jittered.points, jitter(data, 0.01, seed=5).points)

    with pytest.raises(InvalidConfigError):
        jitter(data, -1.0)

    assert fingerprint(data) == fingerprint(Dataset([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]]))
    assert fingerprint(data) != fingerprint(jittered)
    assert fingerprint(Dataset([[-0.0]])) == fingerprint(Dataset([[0.0]]))
