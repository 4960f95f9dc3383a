"""Dataset representation, CSV ingestion and validation.

Points are stored as read-only float64 array, so the same dataset can be shared by parallel workers. Only
Euclidean geometry is used across the library.

Examples:
=========

    >>> import numpy as np
    >>> data = Dataset(np.array([[0.0], [1.0], [2.0], [10.0]]))
    >>> data.n, data.d
    (4, 1)

Duplicated points make k-NN radius zero. Validation reports them without raising.

    >>> report = validate(Dataset([[0.0], [0.0], [1.0]]), k=2)
    >>> report.ok
    False
    >>> report.violations.tolist()
    [0, 1]

Loading from CSV with label column returns LabeledDataset.

    >>> import tempfile, os
    >>> with tempfile.TemporaryDirectory() as folder:
    ...     path = os.path.join(folder, "data.csv")
    ...     with open(path, "w") as file:
    ...         _ = file.write("0,0\\n1,0\\n0,1\\n")
    ...     labeled = load_csv(path, label_column=1)
    >>> labeled.data.d, labeled.labels.tolist()
    (1, [0, 0, 1])
"""
from modalcores.dataset.dataset_internal import (
    Dataset,
    fingerprint,
    jitter,
    LabeledDataset,
    load_csv,
    save_csv,
    validate,
    ValidationReport,
)

__all__ = [
    "Dataset",
    "fingerprint",
    "jitter",
    "LabeledDataset",
    "load_csv",
    "save_csv",
    "validate",
    "ValidationReport",
]
