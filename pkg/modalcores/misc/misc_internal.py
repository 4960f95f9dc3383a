"""Module with functions for 'misc' subpackage."""

from __future__ import annotations
from typing import Iterable, Sequence
import os
import time

import mylogging
from tabulate import tabulate

THREADS_ENV_VAR = "MODALCORES_THREADS"
"""Environment variable capping number of workers."""

DEFAULT_TABLE_FORMAT = {
    "tablefmt": "grid",
    "floatfmt": ".4g",
    "numalign": "center",
    "stralign": "center",
}


def format_table(rows: Iterable[Sequence], headers: Sequence[str], table_format: None | dict = None) -> str:
    """Format rows as text table.

    Example:
        >>> table = format_table([["build", 0.5]], ["Phase", "Seconds"])
        >>> "build" in table and "Seconds" in table
        True
    """
    return tabulate(list(rows), headers=list(headers), **(table_format or DEFAULT_TABLE_FORMAT))


class PhaseTimer:
    """Measure wall time of pipeline phases that run sequentially.

    Call ``start`` when phase begins and ``stop`` when it ends. Phases with the same name are summed.

    Example:
        >>> timer = PhaseTimer()
        >>> timer.start("index")
        >>> elapsed = timer.stop("index")
        >>> list(timer.records)
        ['index']
        >>> timer.records["index"] == elapsed >= 0
        True
    """

    def __init__(self) -> None:
        """Init the timer."""
        self.records: dict[str, float] = {}
        self._started: dict[str, float] = {}

    def start(self, phase_name: str) -> None:
        """Mark beginning of a phase."""
        self._started[phase_name] = time.perf_counter()

    def stop(self, phase_name: str) -> float:
        """Mark end of a phase and return its duration in seconds."""
        elapsed = time.perf_counter() - self._started.pop(phase_name)
        self.records[phase_name] = self.records.get(phase_name, 0.0) + elapsed
        mylogging.info(f"Phase '{phase_name}' finished in {elapsed:.3f} s.")
        return elapsed

    @property
    def total(self) -> float:
        """Sum of all phases in seconds."""
        return sum(self.records.values())

    def table(self, table_format: None | dict = None) -> str:
        """Create printable table with phases and total."""
        rows = [[name, seconds] for name, seconds in self.records.items()]
        rows.append(["Total", self.total])
        return format_table(rows, ["Phase", "Seconds"], table_format)


def worker_count(requested: None | int = None) -> int:
    """Resolve number of parallel workers.

    CPU count is used if nothing requested. Result is capped by ``MODALCORES_THREADS`` environment variable
    if it is set and it is never lower than 1.

    Example:
        >>> worker_count(1)
        1
    """
    count = requested if requested is not None else (os.cpu_count() or 1)

    cap = os.environ.get(THREADS_ENV_VAR)
    if cap:
        try:
            count = min(count, int(cap))
        except ValueError:
            mylogging.warn(f"Environment variable {THREADS_ENV_VAR}={cap!r} is not integer and is ignored.")

    return max(1, count)
