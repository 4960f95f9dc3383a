"""Module with command line interface for 'cli' subpackage."""

from __future__ import annotations
from typing import Optional, Sequence, Type, TypeVar
import argparse
import json
import sys

import mylogging
import numpy as np
import pandas as pd

from ..baseline_dbscan import dbscan, DbscanConfig, NOISE
from ..clustering import assign, read_labels, write_labels
from ..config import Config
from ..dataset import fingerprint, LabeledDataset, save_csv
from ..errors import ConfigError, DataError, InvalidConfigError, LengthMismatchError, LevelGraphError
from ..mcores import read_estimates, write_estimates
from ..metrics import score
from ..misc import format_table, PhaseTimer, worker_count
from ..paths import PathLike, prepare_directory
from ..synthgen import write_truth
from .pipeline_internal import (
    evaluate,
    fit_dataset,
    generate_preset,
    label_rows,
    load_input,
    replay_settings,
    run_bench,
    run_sweep,
    RunRecord,
)
from .settings_internal import (
    AssignSettings,
    BenchSettings,
    DbscanSettings,
    EvalSettings,
    FitSettings,
    GenSettings,
    SweepSettings,
)

SettingsType = TypeVar("SettingsType", bound=Config)

ESTIMATES_FILE = "estimates.jsonl"
LABELS_FILE = "labels.csv"
RECORD_FILE = "run_record.json"
CURVE_FILE = "curve.csv"
DATA_FILE = "data.csv"
TRUTH_FILE = "truth.jsonl"
EVAL_FILE = "eval.json"
BENCH_FILE = "bench.csv"

SHOWN_ESTIMATES = 20

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_DATA = 3


def _settings(
    settings_class: Type[SettingsType], args: argparse.Namespace, base: None | dict = None
) -> SettingsType:
    """Resolve settings. Defaults < base (e.g. from run record) < config file < flags."""
    settings = settings_class()

    if base:
        settings.do.update(base)
    if getattr(args, "config", None):
        settings.do.from_file(args.config)

    settings.do.update_from_namespace(args)

    if settings.verbose:
        mylogging.config.level = "INFO"

    return settings


def _write_rows(rows: list[dict], path: PathLike, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="") as file:
        for line in comments:
            file.write(f"# {line}\n")
        pd.DataFrame(rows).to_csv(file, index=False, float_format="%.17g", lineterminator="\n")


def _print_scores(scores: None | dict) -> None:
    if scores:
        print(format_table([[scores["ari"], scores["ami"]]], ["ARI", "AMI"]))


def cmd_fit(args: argparse.Namespace) -> RunRecord:
    """Estimate modal-sets, cluster and write estimates, labels and run record into out dir."""
    base = replay_settings(RunRecord.read(args.from_record)) if args.from_record else None
    settings = _settings(FitSettings, args, base)
    timer = PhaseTimer()

    timer.start("load")
    dataset, truth = load_input(args.data, settings.has_header, settings.label_column)
    timer.stop("load")

    outcome = fit_dataset(dataset, settings, truth, timer)
    record = outcome.record
    out_dir = prepare_directory(settings.out_dir)

    write_estimates(outcome.result.estimates, out_dir / ESTIMATES_FILE, provenance=record.provenance())
    write_labels(outcome.clustering.labels, out_dir / LABELS_FILE, comments=record.provenance_lines())
    record.write(out_dir / RECORD_FILE)

    rows = [[i.rank, i.founder, i.size, i.creation_level] for i in outcome.result.estimates]
    print(
        f"Found {outcome.result.count} modal-set estimates with k={record.config['k']}, "
        f"beta={outcome.result.beta:.4g}."
    )
    print(format_table(rows[:SHOWN_ESTIMATES], ["Rank", "Founder", "Size", "Level"]))
    if len(rows) > SHOWN_ESTIMATES:
        print(f"... {len(rows) - SHOWN_ESTIMATES} more in {out_dir / ESTIMATES_FILE}")
    _print_scores(record.scores)
    print(timer.table())
    print(f"Results written into {out_dir}")

    return record


def cmd_assign(args: argparse.Namespace) -> np.ndarray:
    """Assign points to estimates from existing estimates file."""
    settings = _settings(AssignSettings, args)
    estimates, header = read_estimates(args.estimates)
    dataset, truth = load_input(args.data, settings.has_header, settings.label_column)

    largest = max((max(i.members) for i in estimates if i.members), default=-1)
    if largest >= dataset.n:
        raise LengthMismatchError(f"Estimates index point {largest}, but dataset has {dataset.n} points.")

    labels = assign(dataset, estimates, workers=settings.threads).labels
    out_dir = prepare_directory(settings.out_dir)
    comments = [
        f"estimates: {json.dumps(header.get('provenance', {}), sort_keys=True)}",
        f"dataset: {json.dumps(fingerprint(dataset), sort_keys=True)}",
    ]
    write_labels(labels, out_dir / LABELS_FILE, comments=comments)

    print(format_table(label_rows(labels), ["Cluster", "Size"]))
    if truth is not None:
        _print_scores(score(truth, labels).as_dict())
    print(f"Labels written into {out_dir / LABELS_FILE}")

    return labels


def cmd_sweep(args: argparse.Namespace) -> list[dict]:
    """Score curve over range of k."""
    settings = _settings(SweepSettings, args)
    dataset, truth = load_input(args.data, settings.has_header, settings.label_column)

    if settings.truth_labels is not None:
        truth = read_labels(settings.truth_labels)
    if truth is None:
        raise InvalidConfigError("Sweep needs ground truth. Use --label-column or --truth-labels.")

    timer = PhaseTimer()
    curve, record = run_sweep(dataset, truth, settings, timer)
    out_dir = prepare_directory(settings.out_dir)

    _write_rows(curve, out_dir / CURVE_FILE, comments=record.provenance_lines())
    record.write(out_dir / RECORD_FILE)

    print(format_table([list(i.values()) for i in curve], ["k", "ARI", "AMI", "Estimates", "ms"]))
    print(timer.table())
    print(f"Curve written into {out_dir / CURVE_FILE}")

    return curve


def cmd_gen(args: argparse.Namespace) -> RunRecord:
    """Generate preset dataset with ground truth labels (last column) and truth modal-sets."""
    settings = _settings(GenSettings, args)
    sample, record = generate_preset(settings)
    out_dir = prepare_directory(settings.out_dir)

    labeled = LabeledDataset(sample.data, sample.labels)
    save_csv(labeled, out_dir / DATA_FILE, comments=record.provenance_lines())
    write_truth(sample.truth, out_dir / TRUTH_FILE, provenance=record.provenance())

    print(f"Generated {sample.data.n} points of '{settings.preset}' with {len(sample.truth)} modal-sets.")
    print(f"Data written into {out_dir / DATA_FILE}, truth into {out_dir / TRUTH_FILE}")

    return record


def cmd_eval(args: argparse.Namespace) -> dict:
    """Compare labels and/or match estimates with true modal-sets."""
    settings = _settings(EvalSettings, args)
    result = evaluate(settings)
    out_dir = prepare_directory(settings.out_dir)

    (out_dir / EVAL_FILE).write_text(json.dumps(result, sort_keys=True, indent=2) + "\n", encoding="utf-8")

    _print_scores(result.get("scores"))
    if "matching" in result:
        matching = result["matching"]
        rows = [list(i.values()) for i in matching["pairs"]]
        print(format_table(rows, ["Estimate", "Truth", "Hausdorff", "Size"]))
        print(
            f"Unmatched estimates: {matching['unmatched_estimates']}, "
            f"unmatched truths: {matching['unmatched_truths']}"
        )
    print(f"Evaluation written into {out_dir / EVAL_FILE}")

    return result


def cmd_bench(args: argparse.Namespace) -> list[dict]:
    """Time level descent on growing preset datasets."""
    settings = _settings(BenchSettings, args)
    rows = run_bench(
        settings.preset,
        settings.n,
        settings.scales,
        settings.k,
        repeats=settings.repeats,
        seed=settings.seed,
        workers=worker_count(),
    )
    out_dir = prepare_directory(settings.out_dir)
    _write_rows(rows, out_dir / BENCH_FILE)

    print(format_table([list(i.values()) for i in rows], ["n", "Index s", "Descent s", "Ratio"]))
    print(f"Benchmark written into {out_dir / BENCH_FILE}")

    return rows


def cmd_dbscan(args: argparse.Namespace) -> RunRecord:
    """Baseline DBSCAN labels in the same format as 'fit' labels, noise is -1."""
    settings = _settings(DbscanSettings, args)

    if settings.eps is None:
        raise InvalidConfigError("DBSCAN needs neighborhood radius, use --eps.")

    config = DbscanConfig(eps=settings.eps, min_pts=settings.min_pts)
    timer = PhaseTimer()

    timer.start("load")
    dataset, truth = load_input(args.data, settings.has_header, settings.label_column)
    timer.stop("load")

    timer.start("dbscan")
    result = dbscan(dataset, config, workers=settings.threads)
    timer.stop("dbscan")

    record = RunRecord(
        command="dbscan",
        config={
            "eps": config.eps,
            "min_pts": config.min_pts,
            "has_header": settings.has_header,
            "label_column": settings.label_column,
        },
        dataset=fingerprint(dataset),
        estimates={"clusters": result.n_clusters, "noise": int(np.sum(result.labels == NOISE))},
        scores=None if truth is None else score(truth, result.labels).as_dict(),
        timings=dict(timer.records),
    )
    out_dir = prepare_directory(settings.out_dir)
    write_labels(result.labels, out_dir / LABELS_FILE, comments=record.provenance_lines())
    record.write(out_dir / RECORD_FILE)

    print(f"DBSCAN found {result.n_clusters} clusters, {record.estimates['noise']} noise points.")
    _print_scores(record.scores)
    print(f"Results written into {out_dir}")

    return record


COMMANDS = {
    "fit": (cmd_fit, FitSettings, True),
    "assign": (cmd_assign, AssignSettings, True),
    "sweep": (cmd_sweep, SweepSettings, True),
    "gen": (cmd_gen, GenSettings, False),
    "eval": (cmd_eval, EvalSettings, False),
    "bench": (cmd_bench, BenchSettings, False),
    "dbscan": (cmd_dbscan, DbscanSettings, True),
}
"""Subcommand name: (handler, settings, whether dataset path is positional argument)."""


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subparser per command. Settings flags are generated from settings classes."""
    parser = argparse.ArgumentParser(
        prog="modalcores",
        description="Estimate modal-sets of a density from samples and use them as cluster cores.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    for name, (handler, settings_class, with_data) in COMMANDS.items():
        summary = (handler.__doc__ or "").split("\n")[0]
        subparser = subparsers.add_parser(name, help=summary, description=summary)

        if with_data:
            subparser.add_argument("data", help="Dataset CSV, one point per row.")
        if name == "assign":
            subparser.add_argument("--estimates", required=True, help="Estimates file written by 'fit'.")
        if name == "fit":
            subparser.add_argument(
                "--from-record", default=None, help="Run record of previous fit, its settings are reused."
            )

        subparser.add_argument("--config", default=None, help="File with key=value settings.")
        settings_class().do.add_arguments(subparser)
        subparser.set_defaults(handler=handler)

    return parser


def _report(kind: str, err: BaseException) -> None:
    print(f"modalcores: {kind}: {err}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run command line interface.

    Returns exit code, 0 on success, 1 for file problems, 2 for bad configuration and 3 for bad data.

    Example:
        >>> main(["fit", "not_existing.csv"])
        1
    """
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_CONFIG

    try:
        args.handler(args)
    except ConfigError as err:
        _report("configuration error", err)
        return EXIT_CONFIG
    except (DataError, LevelGraphError) as err:
        _report("data error", err)
        return EXIT_DATA
    except OSError as err:
        _report("file error", err)
        return EXIT_IO

    return EXIT_OK
