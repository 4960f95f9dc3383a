"""Module with functions for 'mcores' subpackage."""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Sequence
import json
import math

import mylogging
import numpy as np

from ..dataset import Dataset
from ..density import beta_k, BetaConfig, DensityEstimate
from ..errors import FormatError, InvalidConfigError, InvalidKError, LengthMismatchError
from ..knn_index import KnnIndex
from ..levelgraph import LevelGraph
from ..paths import PathLike, validate_path

ESTIMATES_FORMAT = "modalcores-estimates"
ESTIMATES_FORMAT_VERSION = 1


@dataclass(frozen=True)
class McoresConfig:
    """Parameters of one M-cores run.

    Attributes:
        k (int): Neighbor count, at least 2.
        beta (BetaConfig): How beta_k is computed.
        eps0 (float): Allowed density variation on a modal-set, in density units.
        eps_prune (float): Extra look-down when building the lower level graph. Bigger value merges more.
    """

    k: int
    beta: BetaConfig = field(default_factory=BetaConfig)
    eps0: float = 0.0
    eps_prune: float = 0.0

    def __post_init__(self) -> None:
        if isinstance(self.k, bool) or not isinstance(self.k, (int, np.integer)) or self.k < 2:
            raise InvalidKError(
                f"k must be integer at least 2 (the point itself is its first neighbor), got {self.k!r}."
            )
        for name in ("eps0", "eps_prune"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0):
                raise InvalidConfigError(f"'{name}' must be finite and non negative, got {value!r}.")


@dataclass(frozen=True)
class ModalSetEstimate:
    """One estimated modal-set (cluster core).

    Attributes:
        members (tuple[int, ...]): Sorted sample indices.
        creation_level (float): Density of the founder, level where the estimate was created.
        founder (int): Point being processed when the estimate was created.
        rank (int): Creation order, 0 is the highest level.
    """

    members: tuple
    creation_level: float
    founder: int
    rank: int

    @property
    def size(self) -> int:
        """Number of members."""
        return len(self.members)


@dataclass(frozen=True)
class McoresResult:
    """Estimates with the values the run actually used."""

    estimates: list
    config: McoresConfig
    beta: float
    clamped: bool

    @property
    def count(self) -> int:
        """Number of estimates."""
        return len(self.estimates)


def _check_inputs(dataset: Dataset, index: KnnIndex, density: DensityEstimate, config: McoresConfig) -> None:
    if not dataset.n == index.n == density.n:
        raise LengthMismatchError(
            f"Dataset ({dataset.n}), index ({index.n}) and density ({density.n}) sizes differ."
        )
    if not config.k == index.k == density.k:
        raise InvalidConfigError(
            f"Config k={config.k}, index k={index.k} and density k={density.k} must be equal. Use "
            "'KnnIndex.truncate' to reuse bigger index."
        )


def run_mcores(
    dataset: Dataset, index: KnnIndex, density: DensityEstimate, config: McoresConfig
) -> McoresResult:
    """Estimate modal-sets with level descent.

    Points are processed by descending density. Before processing point with density ``lambda``, all points
    with density at least ``max(0, min(lambda' * (1 - 9 * beta) - eps0 - eps_prune))`` (minimum over levels
    processed so far) are in the graph. If component of the point was not seen yet, its members with density
    above ``lambda - beta * lambda - eps0`` form new estimate.

    Args:
        dataset (Dataset): Samples.
        index (KnnIndex): k-NN index of samples with ``config.k``.
        density (DensityEstimate): Density built from the index.
        config (McoresConfig): Run parameters.

    Returns:
        McoresResult: Estimates in creation order with used beta.
    """
    _check_inputs(dataset, index, density, config)

    n = dataset.n
    beta = beta_k(config.beta, config.k, n, dataset.d)
    clamped = 9 * beta >= 1

    if clamped:
        mylogging.warn(
            f"9 * beta_k = {9 * beta:.4g} >= 1 for k={config.k}, so level of the lower graph is clamped at 0 "
            "and all points are added at once. Larger k gives finer levels."
        )

    values = density.values
    order = density.order.tolist()
    graph = LevelGraph(n)
    envelope = math.inf
    activated = 0
    estimates = []

    for i in order:
        level = float(values[i])
        envelope = min(envelope, level * (1 - 9 * beta) - config.eps0 - config.eps_prune)
        lower_level = max(0.0, envelope)

        while activated < n and values[order[activated]] >= lower_level:
            j = order[activated]
            graph.add_node(j)
            graph.add_mutual_edges(j, index)
            activated += 1

        if graph.component_seen(i):
            continue

        component = np.array(graph.component_members(i), dtype=np.int64)
        members = component[values[component] > level - beta * level - config.eps0]

        estimates.append(
            ModalSetEstimate(
                members=tuple(members.tolist()), creation_level=level, founder=i, rank=len(estimates)
            )
        )

    mylogging.info(f"M-cores found {len(estimates)} estimates (k={config.k}, beta={beta:.4g}).")

    return McoresResult(estimates=estimates, config=config, beta=beta, clamped=clamped)


def estimate_modal_sets(
    dataset: Dataset, index: KnnIndex, density: DensityEstimate, config: McoresConfig
) -> list[ModalSetEstimate]:
    """Modal-set estimates in creation order. See ``run_mcores``.

    Example:
        >>> from modalcores.dataset import Dataset
        >>> from modalcores.knn_index import build_index
        >>> from modalcores.density import knn_density
        >>> data = Dataset([[0.0], [1.0], [2.0], [10.0]])
        >>> index = build_index(data, 2)
        >>> estimates = estimate_modal_sets(data, index, knn_density(index, 4, 1), McoresConfig(k=2))
        >>> [(i.members, i.creation_level) for i in estimates]
        [((0, 1, 2), 0.25), ((3,), 0.03125)]
    """
    return run_mcores(dataset, index, density, config).estimates


def high_level_estimates(
    estimates: Sequence[ModalSetEstimate], density: DensityEstimate, fraction: float
) -> list[ModalSetEstimate]:
    """Keep estimates created at level at least ``fraction`` times the highest density.

    Example:
        >>> from modalcores.density import DensityEstimate
        >>> density = DensityEstimate(np.array([1.0, 0.2]), np.log([1.0, 0.2]), np.array([0, 1]), 2, 2, 1)
        >>> estimates = [ModalSetEstimate((0,), 1.0, 0, 0), ModalSetEstimate((1,), 0.2, 1, 1)]
        >>> [i.rank for i in high_level_estimates(estimates, density, 0.5)]
        [0]
    """
    if not 0 <= fraction <= 1:
        raise InvalidConfigError(f"Fraction must be in [0, 1], got {fraction}.")

    threshold = fraction * density.max_value
    return [i for i in estimates if i.creation_level >= threshold]


def modal_set_points(dataset: Dataset, estimate: ModalSetEstimate) -> np.ndarray:
    """Coordinates of estimate members."""
    return dataset.points[list(estimate.members)]


def write_estimates(
    estimates: Sequence[ModalSetEstimate], path: PathLike, provenance: None | dict = None
) -> None:
    """Write estimates as JSON lines. First line is header with format, version and provenance.

    Keys are sorted and floats written with full precision, so the same run gives byte-identical file.
    """
    header = {"format": ESTIMATES_FORMAT, "version": ESTIMATES_FORMAT_VERSION, "provenance": provenance or {}}

    with open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(json.dumps(header, sort_keys=True) + "\n")
        for estimate in estimates:
            record = {
                "rank": estimate.rank,
                "creation_level": estimate.creation_level,
                "founder": estimate.founder,
                "members": list(estimate.members),
            }
            file.write(json.dumps(record, sort_keys=True) + "\n")


def read_estimates(path: PathLike) -> tuple[list[ModalSetEstimate], dict]:
    """Read file written by ``write_estimates``.

    Returns:
        tuple[list[ModalSetEstimate], dict]: Estimates and the header.

    Raises:
        FormatError: If file is not estimates file or has unsupported version.
    """
    path = validate_path(path, error_prefix="Estimates file not found")
    lines = [i for i in path.read_text(encoding="utf-8").splitlines() if i.strip()]

    try:
        header = json.loads(lines[0])
        if header.get("format") != ESTIMATES_FORMAT:
            raise FormatError(f"File {path} is not estimates file.")
        if header.get("version") != ESTIMATES_FORMAT_VERSION:
            raise FormatError(
                f"Estimates format version {header.get('version')} is not supported, expected "
                f"{ESTIMATES_FORMAT_VERSION}."
            )

        estimates = []
        for line in lines[1:]:
            record = json.loads(line)
            estimates.append(
                ModalSetEstimate(
                    members=tuple(int(i) for i in record["members"]),
                    creation_level=float(record["creation_level"]),
                    founder=int(record["founder"]),
                    rank=int(record["rank"]),
                )
            )

    except FormatError:
        raise
    except (IndexError, KeyError, TypeError, AttributeError, ValueError) as err:
        raise FormatError(f"File {path} is not valid estimates file. {err}") from err

    return estimates, header
