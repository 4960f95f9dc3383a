"""Command line interface. Subcommands are fit, assign, sweep, gen, eval, bench and dbscan.

Every setting is available as ``--dashed-name`` flag and in key=value file used with ``--config``. Flags
override the file and the file overrides defaults. Exit code is 0 on success, 1 if some file can not be
read or written, 2 for bad configuration and 3 for bad data.

Examples:
=========

Generate three rings, estimate its modal-sets and compare clusters with ground truth (last column)::

    modalcores gen --preset three-rings --seed 7 --out-dir rings
    modalcores fit rings/data.csv --label-column -1 --out-dir rings
    modalcores eval --estimates rings/estimates.jsonl --truth rings/truth.jsonl --data rings/data.csv \\
        --label-column -1 --out-dir rings

Same from python

    >>> import tempfile
    >>> with tempfile.TemporaryDirectory() as folder:
    ...     main(["gen", "--preset", "two-gaussians-1d", "--n", "200", "--out-dir", folder])
    Generated 200 points of 'two-gaussians-1d' with 2 modal-sets.
    Data written into ...
    0
"""
from modalcores.cli.cli_internal import (
    build_parser,
    cmd_assign,
    cmd_bench,
    cmd_dbscan,
    cmd_eval,
    cmd_fit,
    cmd_gen,
    cmd_sweep,
    main,
)
from modalcores.cli.pipeline_internal import (
    cached_index,
    evaluate,
    fit_dataset,
    FitOutcome,
    generate_preset,
    replay_settings,
    run_bench,
    run_sweep,
    RunRecord,
    sweep_trial,
)
from modalcores.cli.settings_internal import (
    AssignSettings,
    BenchSettings,
    DbscanSettings,
    EvalSettings,
    FitSettings,
    GenSettings,
    SweepSettings,
)

__all__ = [
    "AssignSettings",
    "BenchSettings",
    "build_parser",
    "cached_index",
    "cmd_assign",
    "cmd_bench",
    "cmd_dbscan",
    "cmd_eval",
    "cmd_fit",
    "cmd_gen",
    "cmd_sweep",
    "DbscanSettings",
    "EvalSettings",
    "evaluate",
    "fit_dataset",
    "FitOutcome",
    "FitSettings",
    "GenSettings",
    "generate_preset",
    "main",
    "replay_settings",
    "run_bench",
    "run_sweep",
    "RunRecord",
    "sweep_trial",
    "SweepSettings",
]
