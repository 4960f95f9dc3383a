"""Module with pipelines behind the subcommands. They return results and write nothing to stdout."""

from __future__ import annotations
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import repeat
from pathlib import Path
from typing import Optional, Sequence
import json
import time

import mylogging
import numpy as np

from ..clustering import assign, ClusteringResult, match_estimates_to_truth, read_labels
from ..dataset import Dataset, fingerprint, jitter, LabeledDataset, load_csv, validate
from ..density import BetaConfig, default_k, DensityEstimate, knn_density
from ..errors import FormatError, InvalidConfigError, LengthMismatchError, ZeroRadiusError
from ..knn_index import build_index, dump_index, KnnIndex, load_index
from ..mcores import McoresConfig, McoresResult, read_estimates, run_mcores
from ..metrics import score
from ..misc import PhaseTimer
from ..paths import PathLike, validate_path
from ..synthgen import generate, preset_spec, read_truth, SyntheticSample
from .settings_internal import EvalSettings, FitSettings, GenSettings, McoresSettings, SweepSettings

RUN_RECORD_FORMAT = "modalcores-run-record"


def package_version() -> str:
    """Version written into provenance."""
    from modalcores import __version__  # pylint: disable=import-outside-toplevel

    return __version__


@dataclass
class RunRecord:
    """Provenance and results of one command.

    Config echo with dataset fingerprint is enough to rerun the command with identical estimates. Timings are
    not part of the provenance written into artifacts, so artifacts of a rerun are byte-identical.

    Attributes:
        command (str): Subcommand name.
        config (dict): Resolved settings (k after default, beta mode with the used value...).
        dataset (dict): Fingerprint of the input (n, d, sha256).
        estimates (dict): Count, sizes and creation levels of estimates.
        scores (Optional[dict]): ARI and AMI if ground truth was available.
        timings (dict): Seconds per phase.
        version (str): Version of modalcores.
    """

    command: str
    config: dict
    dataset: dict
    estimates: dict = field(default_factory=dict)
    scores: Optional[dict] = None
    timings: dict = field(default_factory=dict)
    version: str = field(default_factory=package_version)

    def provenance(self) -> dict:
        """Block written into every artifact."""
        return {
            "command": self.command,
            "config": self.config,
            "dataset": self.dataset,
            "version": self.version,
        }

    def provenance_lines(self) -> list[str]:
        """Provenance as lines for '#' comments of CSV files."""
        return [f"{key}: {json.dumps(value, sort_keys=True)}" for key, value in self.provenance().items()]

    def write(self, path: PathLike) -> None:
        """Save as JSON."""
        content = {"format": RUN_RECORD_FORMAT, **asdict(self)}
        Path(path).write_text(json.dumps(content, sort_keys=True, indent=2) + "\n", encoding="utf-8")

    @classmethod
    def read(cls, path: PathLike) -> RunRecord:
        """Load record saved with ``write``.

        Raises:
            FormatError: If file is not run record.
        """
        path = validate_path(path, error_prefix="Run record not found")

        try:
            content = json.loads(path.read_text(encoding="utf-8"))
            if content.pop("format", None) != RUN_RECORD_FORMAT:
                raise FormatError(f"File {path} is not run record.")
            return cls(**content)
        except FormatError:
            raise
        except (TypeError, ValueError, AttributeError) as err:
            raise FormatError(f"File {path} is not valid run record. {err}") from err


def replay_settings(record: RunRecord) -> dict:
    """Settings of a fit stored in record, usable with ``FitSettings.do.update``."""
    return {key: value for key, value in record.config.items() if key in FitSettings.option_names}


@dataclass
class FitOutcome:
    """Everything computed by ``fit_dataset``."""

    dataset: Dataset
    index: KnnIndex
    density: DensityEstimate
    result: McoresResult
    clustering: ClusteringResult
    record: RunRecord


def load_input(
    path: PathLike, has_header: bool, label_column: Optional[int]
) -> tuple[Dataset, Optional[np.ndarray]]:
    """Load dataset and labels if the label column is used."""
    loaded = load_csv(path, has_header=has_header, label_column=label_column)
    if isinstance(loaded, LabeledDataset):
        return loaded.data, loaded.labels
    return loaded, None


def mcores_config(settings: McoresSettings, k: int) -> McoresConfig:
    """Run parameters from settings."""
    return McoresConfig(k=k, beta=settings.beta_config(), eps0=settings.eps0, eps_prune=settings.eps_prune)


def _config_echo(settings: McoresSettings, k: Optional[int], beta: Optional[float]) -> dict:
    return {
        "k": k,
        "beta_mode": settings.beta_mode,
        "beta": settings.beta,
        "beta_value": beta,
        "delta": settings.delta,
        "eps0": settings.eps0,
        "eps_prune": settings.eps_prune,
        "jitter": settings.jitter,
        "seed": settings.seed,
        "has_header": settings.has_header,
        "label_column": settings.label_column,
    }


def _prepare(dataset: Dataset, settings: McoresSettings, smallest_k: int, timer: PhaseTimer) -> Dataset:
    data = jitter(dataset, settings.jitter, settings.seed)

    timer.start("validate")
    report = validate(data, smallest_k)
    timer.stop("validate")

    if not report.ok:
        raise ZeroRadiusError(report.message())

    return data


def cached_index(dataset: Dataset, k: int, cache: Optional[PathLike], workers: int = 1) -> KnnIndex:
    """Load index from cache file if it belongs to the data and has at least k neighbors, build it otherwise.

    Built index is written into the cache.
    """
    if cache is not None and Path(cache).exists():
        try:
            index = load_index(cache, dataset)
        except FormatError as err:
            mylogging.warn(f"Index cache is not used and will be overwritten. {err}")
        else:
            if index.k >= k:
                mylogging.info(f"Index loaded from {cache}.")
                return index.truncate(k)

    index = build_index(dataset, k, workers=workers)

    if cache is not None:
        dump_index(index, dataset, cache)

    return index


def fit_dataset(
    dataset: Dataset,
    settings: FitSettings,
    truth_labels: Optional[np.ndarray] = None,
    timer: None | PhaseTimer = None,
) -> FitOutcome:
    """Pipeline of 'fit': validate, build index, density, level descent and assignment.

    Args:
        dataset (Dataset): Loaded samples.
        settings (FitSettings): Parameters.
        truth_labels (Optional[np.ndarray], optional): Ground truth, if given, scores are computed.
            Defaults to None.
        timer (None | PhaseTimer, optional): Timer the phases are recorded in. Defaults to None.

    Returns:
        FitOutcome: Results with the run record.
    """
    timer = timer or PhaseTimer()
    source = fingerprint(dataset)

    k = settings.k if settings.k is not None else default_k(dataset.n)
    config = mcores_config(settings, k)

    if truth_labels is not None and len(truth_labels) != dataset.n:
        raise LengthMismatchError(f"There are {len(truth_labels)} labels for {dataset.n} points.")

    data = _prepare(dataset, settings, k, timer)

    timer.start("index")
    index = cached_index(data, k, settings.index_cache, workers=settings.threads)
    mylogging.info(f"Mutual k-NN graph has {index.n_edges()} edges.")
    timer.stop("index")

    timer.start("density")
    density = knn_density(index, data.n, data.d)
    timer.stop("density")

    timer.start("descent")
    result = run_mcores(data, index, density, config)
    timer.stop("descent")

    timer.start("assign")
    clustering = assign(data, result.estimates, workers=settings.threads)
    timer.stop("assign")

    scores = None if truth_labels is None else score(truth_labels, clustering.labels).as_dict()

    record = RunRecord(
        command="fit",
        config=_config_echo(settings, k, result.beta),
        dataset=source,
        estimates={
            "count": result.count,
            "sizes": [i.size for i in result.estimates],
            "creation_levels": [i.creation_level for i in result.estimates],
            "clamped": result.clamped,
        },
        scores=scores,
        timings=dict(timer.records),
    )

    return FitOutcome(data, index, density, result, clustering, record)


def sweep_trial(
    dataset: Dataset,
    index: KnnIndex,
    truth: np.ndarray,
    k: int,
    beta: BetaConfig,
    eps0: float,
    eps_prune: float,
) -> dict:
    """One point of score curve. Index may be built with bigger k, it is truncated."""
    start = time.perf_counter()

    truncated = index.truncate(k)
    density = knn_density(truncated, dataset.n, dataset.d)
    config = McoresConfig(k=k, beta=beta, eps0=eps0, eps_prune=eps_prune)
    result = run_mcores(dataset, truncated, density, config)
    labels = assign(dataset, result.estimates).labels

    elapsed = time.perf_counter() - start
    report = score(truth, labels)

    return {"k": k, "ari": report.ari, "ami": report.ami, "count": result.count, "ms": 1000 * elapsed}


def sweep_k_values(settings: SweepSettings) -> list[int]:
    """Sorted unique k values, each validated."""
    k_values = sorted({int(i) for i in settings.k_values})
    if not k_values:
        raise InvalidConfigError("At least one k value is necessary for sweep.")
    for k in k_values:
        mcores_config(settings, k)
    return k_values


def run_sweep(
    dataset: Dataset, truth: np.ndarray, settings: SweepSettings, timer: None | PhaseTimer = None
) -> tuple[list[dict], RunRecord]:
    """Score curve over k. One index with the biggest k serves all trials.

    Trials run in separate processes if ``settings.threads`` is more than 1. Each curve point equals
    'fit' with the same settings and that k.
    """
    timer = timer or PhaseTimer()
    source = fingerprint(dataset)
    k_values = sweep_k_values(settings)
    beta = settings.beta_config()

    if len(truth) != dataset.n:
        raise LengthMismatchError(f"There are {len(truth)} labels for {dataset.n} points.")

    data = _prepare(dataset, settings, k_values[0], timer)

    timer.start("index")
    index = build_index(data, k_values[-1], workers=settings.threads)
    timer.stop("index")

    timer.start("trials")
    arguments = (repeat(data), repeat(index), repeat(truth), k_values, repeat(beta))
    arguments += (repeat(settings.eps0), repeat(settings.eps_prune))

    if settings.threads > 1 and len(k_values) > 1:
        with ProcessPoolExecutor(max_workers=min(settings.threads, len(k_values))) as executor:
            curve = list(executor.map(sweep_trial, *arguments))
    else:
        curve = list(map(sweep_trial, *arguments))
    timer.stop("trials")

    config = {**_config_echo(settings, None, None), "k_values": k_values}

    record = RunRecord(
        command="sweep",
        config=config,
        dataset=source,
        estimates={"counts": [i["count"] for i in curve]},
        scores={"ari": [i["ari"] for i in curve], "ami": [i["ami"] for i in curve]},
        timings=dict(timer.records),
    )

    return curve, record


def generate_preset(settings: GenSettings) -> tuple[SyntheticSample, RunRecord]:
    """Sample a preset. Record carries no timings, so the same settings give identical files."""
    sample = generate(preset_spec(settings.preset, settings.n), settings.seed)
    record = RunRecord(
        command="gen",
        config={"preset": settings.preset, "n": settings.n, "seed": settings.seed},
        dataset=fingerprint(sample.data),
    )
    return sample, record


def run_bench(
    preset: str, n: int, scales: int, k: int, repeats: int = 3, seed: int = 0, workers: int = 1
) -> list[dict]:
    """Time level descent on preset with sizes n, 2n, 4n...

    Index build is timed separately and excluded from descent time. The fastest of repeats is reported and
    ratio is descent time divided by the descent time of previous size.
    """
    if scales < 1 or repeats < 1:
        raise InvalidConfigError(f"'scales' and 'repeats' must be at least 1, got {scales} and {repeats}.")

    config = McoresConfig(k=k)
    rows = []
    previous = None

    for scale in range(scales):
        size = n * 2**scale
        data = generate(preset_spec(preset, size), seed).data

        start = time.perf_counter()
        index = build_index(data, k, workers=workers)
        index.n_edges()
        index_seconds = time.perf_counter() - start

        density = knn_density(index, data.n, data.d)
        times = []

        for _ in range(repeats):
            start = time.perf_counter()
            run_mcores(data, index, density, config)
            times.append(time.perf_counter() - start)

        descent = min(times)
        rows.append(
            {
                "n": size,
                "index_seconds": index_seconds,
                "descent_seconds": descent,
                "ratio": descent / previous if previous else None,
            }
        )
        previous = descent
        mylogging.info(f"Benchmark n={size}: descent {descent:.3f} s.")

    return rows


def evaluate(settings: EvalSettings) -> dict:
    """Scores of two label files and Hausdorff matching of estimates with truth, whatever is configured.

    Raises:
        InvalidConfigError: If neither pair of inputs is complete.
    """
    result: dict = {}
    label_files = (settings.labels_a, settings.labels_b)
    set_files = (settings.estimates, settings.truth, settings.data)

    if any(label_files) and not all(label_files):
        raise InvalidConfigError("Both --labels-a and --labels-b are necessary to compare labels.")
    if any(set_files) and not all(set_files):
        raise InvalidConfigError("Options --estimates, --truth and --data are necessary to match estimates.")
    if not any(label_files) and not any(set_files):
        raise InvalidConfigError(
            "Nothing to evaluate. Use --labels-a with --labels-b or --estimates with --truth."
        )

    if all(label_files):
        report = score(read_labels(settings.labels_a), read_labels(settings.labels_b))
        result["scores"] = report.as_dict()
        result["contingency"] = report.contingency.tolist()

    if all(set_files):
        estimates, _ = read_estimates(settings.estimates)
        dataset, _ = load_input(settings.data, settings.has_header, settings.label_column)
        for estimate in estimates:
            if estimate.members and max(estimate.members) >= dataset.n:
                raise LengthMismatchError(
                    f"Estimates index point {max(estimate.members)}, data has {dataset.n}."
                )

        matching = match_estimates_to_truth(estimates, read_truth(settings.truth), dataset)
        result["matching"] = {
            "pairs": matching.records(),
            "unmatched_estimates": [i.rank for i in matching.unmatched_estimates],
            "unmatched_truths": matching.unmatched_truths,
            "max_hausdorff": matching.max_distance if matching.pairs else None,
        }

    return result


def label_rows(labels: Sequence[int]) -> list[list[int]]:
    """Cluster sizes table rows."""
    values, counts = np.unique(np.asarray(labels), return_counts=True)
    return [[int(i), int(j)] for i, j in zip(values, counts)]
