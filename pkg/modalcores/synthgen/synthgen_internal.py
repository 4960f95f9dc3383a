"""Module with functions for 'synthgen' subpackage."""

from __future__ import annotations
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence, Union
import json
import math

import mylogging
import numpy as np
from scipy.spatial import cKDTree
from typing_extensions import Literal

from ..dataset import Dataset
from ..errors import FormatError, InvalidSpecError
from ..knn_index import radius_neighbors
from ..levelgraph import LevelGraph
from ..paths import PathLike, validate_path

TRUTH_FORMAT = "modalcores-truth"
TRUTH_FORMAT_VERSION = 1

AngleSampling = Literal["uniform", "stratified"]


class SyntheticSample(NamedTuple):
    """Generated data with ground truth.

    Attributes:
        data (Dataset): Samples.
        truth (list[np.ndarray]): True modal-sets, each as finite point set of shape (m, d).
        labels (np.ndarray): Index of the truth component every sample was drawn around.
    """

    data: Dataset
    truth: list
    labels: np.ndarray


def _as_points(values, name: str) -> np.ndarray:
    try:
        array = np.array(values, dtype=np.float64)
    except (TypeError, ValueError) as err:
        raise InvalidSpecError(f"'{name}' must be numeric. {err}") from err
    if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
        raise InvalidSpecError(f"'{name}' must be nonempty list of points, got shape {array.shape}.")
    if not np.isfinite(array).all():
        raise InvalidSpecError(f"'{name}' must be finite.")
    return array


@dataclass(frozen=True)
class RingSpec:
    """Circles with isotropic Gaussian noise.

    Ring lies in the plane of the first two coordinates through its center. Admissibility of k can not be
    checked on data, but for these rings the true density is known: it's constant along each ring, so every
    ring is a modal-set when rings are farther than the noise scale from each other.

    Attributes:
        centers (Sequence): Ring centers, points with dimension at least 2.
        radii (Sequence[float]): Ring radii.
        counts (Sequence[int]): Number of samples per ring.
        noise_sigma (float): Standard deviation of the Gaussian noise.
        truth_resolution (int): Number of points of each discretized true ring.
        angles (AngleSampling): 'uniform' draws every angle independently. 'stratified' splits the circle
            into ``count`` equal arcs and draws one angle uniformly from each, so there are no gaps longer
            than two arcs and k-NN density is nearly constant along the ring.
    """

    centers: Sequence
    radii: Sequence[float]
    counts: Sequence[int]
    noise_sigma: float = 0.05
    truth_resolution: int = 1000
    angles: AngleSampling = "uniform"

    def __post_init__(self) -> None:
        centers = _as_points(self.centers, "centers")
        if centers.shape[1] < 2:
            raise InvalidSpecError("Rings need at least 2 dimensions.")
        if not len(self.radii) == len(self.counts) == centers.shape[0]:
            raise InvalidSpecError("There must be the same number of centers, radii and counts.")
        if not all(i > 0 for i in self.radii):
            raise InvalidSpecError(f"Radii must be positive, got {list(self.radii)}.")
        if not all(isinstance(i, (int, np.integer)) and i >= 1 for i in self.counts):
            raise InvalidSpecError(f"Counts must be positive integers, got {list(self.counts)}.")
        if not self.noise_sigma >= 0:
            raise InvalidSpecError(f"Noise sigma must be non negative, got {self.noise_sigma}.")
        if self.truth_resolution < 3:
            raise InvalidSpecError(f"Truth resolution must be at least 3, got {self.truth_resolution}.")
        if self.angles not in ("uniform", "stratified"):
            raise InvalidSpecError(f"Angles must be 'uniform' or 'stratified', got {self.angles!r}.")

        object.__setattr__(self, "centers", tuple(tuple(i) for i in centers.tolist()))
        object.__setattr__(self, "radii", tuple(float(i) for i in self.radii))
        object.__setattr__(self, "counts", tuple(int(i) for i in self.counts))

        self._warn_overlaps()

    def _warn_overlaps(self) -> None:
        centers = np.array(self.centers)
        margin = 6 * self.noise_sigma

        for i in range(len(self.radii)):
            for j in range(i + 1, len(self.radii)):
                distance = float(np.linalg.norm(centers[i] - centers[j]))
                outer_gap = distance - self.radii[i] - self.radii[j]
                inner_gap = abs(self.radii[i] - self.radii[j]) - distance
                gap = max(0.0, outer_gap, inner_gap)
                if gap <= margin:
                    mylogging.warn(
                        f"Rings {i} and {j} overlap after 3 sigma dilation (gap {gap:.4g}, sigma "
                        f"{self.noise_sigma}). They may not be separate modal-sets."
                    )

    @property
    def n(self) -> int:
        """Total number of samples."""
        return sum(self.counts)

    @property
    def d(self) -> int:
        """Dimension."""
        return len(self.centers[0])

    @property
    def discretization_bound(self) -> float:
        """Bound of Hausdorff distance of discretized and continuous ring, ``2 pi r / resolution``."""
        return 2 * math.pi * max(self.radii) / self.truth_resolution


@dataclass(frozen=True)
class MixtureSpec:
    """Gaussian mixture with diagonal covariances. Its modes (approximately the means) are point modal-sets.

    Attributes:
        means (Sequence): Component means.
        stds (Sequence): Standard deviations per component, scalar or one per coordinate.
        weights (Sequence[float]): Positive weights summing to 1.
        n (int): Number of samples.
    """

    means: Sequence
    stds: Sequence
    weights: Sequence[float]
    n: int

    def __post_init__(self) -> None:
        means = _as_points(self.means, "means")
        count, d = means.shape

        if not len(self.stds) == len(self.weights) == count:
            raise InvalidSpecError("There must be the same number of means, stds and weights.")

        stds = []
        for i in self.stds:
            try:
                std = np.broadcast_to(np.asarray(i, dtype=np.float64), (d,))
            except (TypeError, ValueError) as err:
                raise InvalidSpecError(f"Standard deviation must be scalar or {d} values, got {i}.") from err
            if not (std > 0).all():
                raise InvalidSpecError(f"Standard deviations must be positive, got {i}.")
            stds.append(tuple(std.tolist()))

        weights = np.asarray(self.weights, dtype=np.float64)
        if not (weights > 0).all() or abs(weights.sum() - 1) > 1e-9:
            raise InvalidSpecError(f"Weights must be positive and sum to 1, got {list(self.weights)}.")
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidSpecError(f"Number of samples must be positive integer, got {self.n}.")

        object.__setattr__(self, "means", tuple(tuple(i) for i in means.tolist()))
        object.__setattr__(self, "stds", tuple(stds))
        object.__setattr__(self, "weights", tuple(weights.tolist()))

    @property
    def d(self) -> int:
        """Dimension."""
        return len(self.means[0])


@dataclass(frozen=True)
class ManifoldNoiseSpec:
    """Uniform distribution on a compact set blurred by Gaussian noise.

    Attributes:
        base (np.ndarray): Finite discretization of the set, shape (m, d).
        sigma (float): Noise scale.
        n (int): Number of samples.
    """

    base: np.ndarray
    sigma: float
    n: int

    def __post_init__(self) -> None:
        base = _as_points(self.base, "base")
        base.setflags(write=False)
        object.__setattr__(self, "base", base)

        if not self.sigma > 0:
            raise InvalidSpecError(f"Sigma must be positive, got {self.sigma}.")
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidSpecError(f"Number of samples must be positive integer, got {self.n}.")

    @property
    def discretization_gap(self) -> float:
        """Largest distance from base point to its nearest other base point."""
        if self.base.shape[0] < 2:
            return 0.0
        distances, _ = cKDTree(self.base).query(self.base, k=2)
        return float(distances[:, 1].max())


def ring_points(center: Sequence[float], radius: float, angles: np.ndarray) -> np.ndarray:
    """Points of a circle in the plane of the first two coordinates."""
    points = np.tile(np.asarray(center, dtype=np.float64), (len(angles), 1))
    points[:, 0] += radius * np.cos(angles)
    points[:, 1] += radius * np.sin(angles)
    return points


def gen_rings(spec: RingSpec, seed: int = 0) -> SyntheticSample:
    """Sample points on rings (angles by ``spec.angles``) and add Gaussian noise.

    Example:
        >>> spec = RingSpec(centers=[[0, 0], [5, 0]], radii=[1, 1], counts=[50, 30], noise_sigma=0.0)
        >>> sample = gen_rings(spec, seed=1)
        >>> sample.data.n, len(sample.truth), sample.truth[0].shape
        (80, 2, (1000, 2))
        >>> distances = np.linalg.norm(sample.data.points[:50], axis=1)
        >>> bool(np.allclose(distances, 1.0))
        True
    """
    rng = np.random.default_rng(seed)
    parts, labels = [], []

    for label, (center, radius, count) in enumerate(zip(spec.centers, spec.radii, spec.counts)):
        if spec.angles == "stratified":
            angles = (np.arange(count) + rng.uniform(size=count)) * (2 * np.pi / count)
        else:
            angles = rng.uniform(0, 2 * np.pi, size=count)
        noise = rng.normal(0, spec.noise_sigma, size=(count, spec.d)) if spec.noise_sigma else 0.0
        parts.append(ring_points(center, radius, angles) + noise)
        labels.append(np.full(count, label, dtype=np.int64))

    grid = 2 * np.pi * np.arange(spec.truth_resolution) / spec.truth_resolution
    truth = [ring_points(center, radius, grid) for center, radius in zip(spec.centers, spec.radii)]

    return SyntheticSample(Dataset(np.concatenate(parts)), truth, np.concatenate(labels))


def gen_gaussian_mixture(spec: MixtureSpec, seed: int = 0) -> SyntheticSample:
    """Sample Gaussian mixture. Truth are the means as singleton sets.

    Example:
        >>> spec = MixtureSpec(means=[[0.0]], stds=[1.0], weights=[1.0], n=100)
        >>> sample = gen_gaussian_mixture(spec, seed=0)
        >>> sample.data.n, [i.tolist() for i in sample.truth]
        (100, [[[0.0]]])
    """
    rng = np.random.default_rng(seed)
    means = np.array(spec.means)
    stds = np.array(spec.stds)

    labels = rng.choice(len(spec.weights), size=spec.n, p=np.array(spec.weights))
    points = means[labels] + rng.standard_normal((spec.n, spec.d)) * stds[labels]
    truth = [means[i : i + 1].copy() for i in range(len(means))]

    return SyntheticSample(Dataset(points), truth, labels.astype(np.int64))


def connected_parts(points: np.ndarray, radius: float) -> np.ndarray:
    """Label of connected component of every point, points closer than ``radius`` are connected.

    Components are numbered by their smallest point index.

    Example:
        >>> connected_parts(np.array([[0.0], [1.0], [5.0], [6.0]]), 1.5).tolist()
        [0, 0, 1, 1]
    """
    dataset = Dataset(points)
    graph = LevelGraph(dataset.n)

    for i in range(dataset.n):
        graph.add_node(i)

    if radius > 0:
        for i, neighbors in enumerate(radius_neighbors(dataset, radius)):
            for j in neighbors.tolist():
                graph.union(i, j)

    roots = [graph.component_of(i) for i in range(dataset.n)]
    numbering: dict[int, int] = {}
    return np.array([numbering.setdefault(i, len(numbering)) for i in roots], dtype=np.int64)


def gen_manifold_noise(spec: ManifoldNoiseSpec, seed: int = 0) -> SyntheticSample:
    """Sample uniform point of the base set and add Gaussian noise.

    This approximates density decaying as ``exp(-d(x, M)^2 / (2 sigma^2))`` around the set by convolution.
    Truth are connected parts of the base, points closer than twice the discretization gap are connected.

    Example:
        >>> base = np.concatenate([segment_points([0, 0], [1, 0], 11), segment_points([0, 5], [1, 5], 11)])
        >>> sample = gen_manifold_noise(ManifoldNoiseSpec(base, sigma=0.01, n=200), seed=3)
        >>> len(sample.truth), sample.data.n
        (2, 200)
    """
    rng = np.random.default_rng(seed)
    base = spec.base
    parts = connected_parts(base, 2 * spec.discretization_gap)

    chosen = rng.integers(base.shape[0], size=spec.n)
    points = base[chosen] + rng.normal(0, spec.sigma, size=(spec.n, base.shape[1]))
    truth = [base[parts == i].copy() for i in range(parts.max() + 1)]

    return SyntheticSample(Dataset(points), truth, parts[chosen])


def segment_points(start: Sequence[float], end: Sequence[float], count: int) -> np.ndarray:
    """Evenly spaced points of line segment including both ends."""
    start_array, end_array = np.asarray(start, dtype=np.float64), np.asarray(end, dtype=np.float64)
    steps = np.linspace(0, 1, count)[:, None]
    return start_array + steps * (end_array - start_array)


AnySpec = Union[RingSpec, MixtureSpec, ManifoldNoiseSpec]


def generate(spec: AnySpec, seed: int = 0) -> SyntheticSample:
    """Call the generator matching the generator settings type."""
    if isinstance(spec, RingSpec):
        return gen_rings(spec, seed)
    if isinstance(spec, MixtureSpec):
        return gen_gaussian_mixture(spec, seed)
    if isinstance(spec, ManifoldNoiseSpec):
        return gen_manifold_noise(spec, seed)
    raise InvalidSpecError(f"Unknown spec type {type(spec).__name__}.")


def _split(n: int, parts: int) -> list[int]:
    return [n // parts + (1 if i < n % parts else 0) for i in range(parts)]


def _three_rings(n: Optional[int]) -> RingSpec:
    return RingSpec(
        centers=[[0.0, 0.0], [4.0, 0.0], [2.0, 2 * math.sqrt(3)]],
        radii=[1.0, 1.0, 1.0],
        counts=_split(n or 6000, 3),
        noise_sigma=0.003,
        truth_resolution=1000,
        angles="stratified",
    )


def _single_gaussian(n: Optional[int]) -> MixtureSpec:
    return MixtureSpec(means=[[0.0, 0.0]], stds=[1.0], weights=[1.0], n=n or 2000)


def _two_gaussians_1d(n: Optional[int]) -> MixtureSpec:
    return MixtureSpec(means=[[-6.0], [6.0]], stds=[1.0, 1.0], weights=[0.5, 0.5], n=n or 2000)


def _three_gaussians(n: Optional[int]) -> MixtureSpec:
    return MixtureSpec(
        means=[[0.0, 0.0], [10.0, 0.0], [5.0, 5 * math.sqrt(3)]],
        stds=[1.0, 1.0, 1.0],
        weights=[1 / 3, 1 / 3, 1 / 3],
        n=n or 1500,
    )


def _two_segments(n: Optional[int]) -> ManifoldNoiseSpec:
    base = np.concatenate(
        [segment_points([0.0, 0.0], [4.0, 0.0], 401), segment_points([0.0, 3.0], [4.0, 3.0], 401)]
    )
    return ManifoldNoiseSpec(base=base, sigma=0.1, n=n or 2000)


PRESETS: dict[str, Callable[[Optional[int]], AnySpec]] = {
    "three-rings": _three_rings,
    "single-gaussian": _single_gaussian,
    "two-gaussians-1d": _two_gaussians_1d,
    "three-gaussians": _three_gaussians,
    "two-segments": _two_segments,
}
"""Named specs.

Three rings have radius 1 and centers 4 apart. With 2000 stratified points per ring and k around 38 the
k-NN radius varies by a few percent along a ring, so the whole ring stays above ``1 - beta_k`` of the ring
maximum. Sigma 0.003 is small against the k-NN radius (about 0.06), so radial noise hardly changes it.
"""


def preset_spec(name: str, n: Optional[int] = None) -> AnySpec:
    """Spec of a named preset, optionally with other sample size.

    Example:
        >>> preset_spec("three-rings").n
        6000
        >>> preset_spec("three-gaussians", n=300).n
        300
    """
    if name not in PRESETS:
        raise InvalidSpecError(f"Unknown preset '{name}'. Possible presets are {list(PRESETS)}.")
    return PRESETS[name](n)


def write_truth(truth: Sequence[np.ndarray], path: PathLike, provenance: None | dict = None) -> None:
    """Save true modal-sets as JSON lines, header first and then one point set per line."""
    header = {"format": TRUTH_FORMAT, "version": TRUTH_FORMAT_VERSION, "provenance": provenance or {}}

    with open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(json.dumps(header, sort_keys=True) + "\n")
        for index, points in enumerate(truth):
            record = {"index": index, "points": np.asarray(points, dtype=np.float64).tolist()}
            file.write(json.dumps(record, sort_keys=True) + "\n")


def read_truth(path: PathLike) -> list[np.ndarray]:
    """Load true modal-sets saved with ``write_truth``.

    Raises:
        FormatError: If file is not truth file or has unsupported version.
    """
    path = validate_path(path, error_prefix="Truth file not found")
    lines = [i for i in path.read_text(encoding="utf-8").splitlines() if i.strip()]

    try:
        header = json.loads(lines[0])
        records = [json.loads(i) for i in lines[1:]]
        truth = [np.array(i["points"], dtype=np.float64) for i in records]
    except (IndexError, KeyError, TypeError, ValueError) as err:
        raise FormatError(f"File {path} is not valid truth file. {err}") from err

    if not isinstance(header, dict) or header.get("format") != TRUTH_FORMAT:
        raise FormatError(f"File {path} is not truth file.")
    if header.get("version") != TRUTH_FORMAT_VERSION:
        raise FormatError(f"Truth format version {header.get('version')} is not supported.")
    if any(i.ndim != 2 or i.shape[0] == 0 for i in truth):
        raise FormatError(f"Every truth set in {path} must be nonempty list of points.")

    return truth
