"""Module with settings of the command line subcommands."""

from __future__ import annotations
from typing import Optional, Sequence

from typing_extensions import Literal

from ..config import Config, MyProperty
from ..density import BetaConfig, BetaMode, DEFAULT_DELTA
from ..errors import InvalidConfigError
from ..misc import worker_count

PresetName = Literal["three-rings", "single-gaussian", "two-gaussians-1d", "three-gaussians", "two-segments"]


class CommonSettings(Config):
    """Settings shared by subcommands that read a dataset."""

    @MyProperty
    def has_header(self) -> bool:
        """First row of the CSV is header."""
        return False

    @MyProperty
    def label_column(self) -> Optional[int]:
        """Zero based index of column with ground truth labels (negative counts from the end)."""
        return None

    @MyProperty
    def out_dir(self) -> str:
        """Folder where results are written."""
        return "modalcores_output"

    @MyProperty
    def threads(self) -> int:
        """Number of parallel workers. Defaults to CPU count capped by MODALCORES_THREADS."""
        return worker_count()

    @MyProperty
    def verbose(self) -> bool:
        """Log progress and timings."""
        return False


class McoresSettings(CommonSettings):
    """Parameters of M-cores run."""

    @MyProperty
    def beta_mode(self) -> BetaMode:
        """How beta_k is computed. 'practical' is 2 / sqrt(k)."""
        return "practical"

    @MyProperty
    def beta(self) -> Optional[float]:
        """Value of beta_k, only with --beta-mode custom."""
        return None

    @MyProperty
    def delta(self) -> float:
        """Confidence used by theoretical beta_k."""
        return DEFAULT_DELTA

    @MyProperty
    def eps0(self) -> float:
        """Allowed density variation on estimated modal-set."""
        return 0.0

    @MyProperty
    def eps_prune(self) -> float:
        """Pruning parameter, extra look-down of the lower level graph."""
        return 0.0

    @MyProperty
    def jitter(self) -> float:
        """Scale of uniform noise added to coordinates. Remedy for duplicated points."""
        return 0.0

    @MyProperty
    def seed(self) -> int:
        """Seed of the jitter noise."""
        return 0

    def beta_config(self) -> BetaConfig:
        """Validated beta settings."""
        if self.beta is not None and self.beta_mode != "custom":
            raise InvalidConfigError("Value of --beta is used only with --beta-mode custom.")
        return BetaConfig(mode=self.beta_mode, delta=self.delta, custom_value=self.beta)


class FitSettings(McoresSettings):
    """Settings of 'fit'."""

    @MyProperty
    def k(self) -> Optional[int]:
        """Neighbor count. Defaults to round(log(n)^2 / 2)."""
        return None

    @MyProperty
    def index_cache(self) -> Optional[str]:
        """Binary k-NN index file. Loaded if it exists and belongs to the data, written otherwise."""
        return None


class SweepSettings(McoresSettings):
    """Settings of 'sweep'."""

    @MyProperty
    def k_values(self) -> Sequence[int]:
        """Neighbor counts, e.g. 10,20,30."""
        return (10, 20, 30)

    @MyProperty
    def truth_labels(self) -> Optional[str]:
        """Labels file with ground truth if the dataset has no label column."""
        return None


class AssignSettings(CommonSettings):
    """Settings of 'assign'."""


class DbscanSettings(CommonSettings):
    """Settings of 'dbscan'."""

    @MyProperty
    def eps(self) -> Optional[float]:
        """Neighborhood radius (required)."""
        return None

    @MyProperty
    def min_pts(self) -> int:
        """Minimal neighborhood size of core point, point itself included."""
        return 5


class GenSettings(Config):
    """Settings of 'gen'."""

    @MyProperty
    def preset(self) -> PresetName:
        """Synthetic dataset."""
        return "three-rings"

    @MyProperty
    def n(self) -> Optional[int]:
        """Number of samples. Defaults to the preset size."""
        return None

    @MyProperty
    def seed(self) -> int:
        """Random seed."""
        return 0

    @MyProperty
    def out_dir(self) -> str:
        """Folder where data and truth are written."""
        return "modalcores_output"

    @MyProperty
    def verbose(self) -> bool:
        """Log progress."""
        return False


class BenchSettings(GenSettings):
    """Settings of 'bench'."""

    @MyProperty
    def preset(self) -> PresetName:
        """Synthetic dataset timed."""
        return "three-gaussians"

    @MyProperty
    def n(self) -> Optional[int]:
        """Smallest number of samples."""
        return 50000

    @MyProperty
    def scales(self) -> int:
        """Number of sizes, each one double of previous."""
        return 2

    @MyProperty
    def k(self) -> int:
        """Neighbor count."""
        return 30

    @MyProperty
    def repeats(self) -> int:
        """Repetitions per size, the fastest is reported."""
        return 3


class EvalSettings(Config):
    """Settings of 'eval'."""

    @MyProperty
    def labels_a(self) -> Optional[str]:
        """Labels file, e.g. result of fit."""
        return None

    @MyProperty
    def labels_b(self) -> Optional[str]:
        """Labels file compared with --labels-a, e.g. ground truth."""
        return None

    @MyProperty
    def estimates(self) -> Optional[str]:
        """Estimates file to be matched with --truth."""
        return None

    @MyProperty
    def truth(self) -> Optional[str]:
        """Truth file with true modal-sets."""
        return None

    @MyProperty
    def data(self) -> Optional[str]:
        """Dataset CSV the estimates index into."""
        return None

    @MyProperty
    def has_header(self) -> bool:
        """First row of the dataset CSV is header."""
        return False

    @MyProperty
    def label_column(self) -> Optional[int]:
        """Column of the dataset CSV with labels, it is not a coordinate."""
        return None

    @MyProperty
    def out_dir(self) -> str:
        """Folder where evaluation is written."""
        return "modalcores_output"

    @MyProperty
    def verbose(self) -> bool:
        """Log progress."""
        return False
