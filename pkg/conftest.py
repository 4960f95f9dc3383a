"""Runs before every pytest test. Used automatically (at least at VS Code)."""
from __future__ import annotations
from pathlib import Path
import sys

import mylogging

sys.path.insert(0, Path(__file__).parent.as_posix())

mylogging.config.level = "WARNING"
