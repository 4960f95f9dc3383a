"""
Module with miscellaneous functions that do not fit into other subpackage but are not big enough have it's own
subpackage. Timing of pipeline phases, table formatting and worker count resolution.
"""

from modalcores.misc.misc_internal import (
    DEFAULT_TABLE_FORMAT,
    format_table,
    PhaseTimer,
    THREADS_ENV_VAR,
    worker_count,
)

__all__ = ["DEFAULT_TABLE_FORMAT", "format_table", "PhaseTimer", "THREADS_ENV_VAR", "worker_count"]
