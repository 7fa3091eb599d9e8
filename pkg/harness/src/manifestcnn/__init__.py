"""Train a one-convolution CNN on manifest-listed image datasets.

Consumes a tab-separated manifest plus the PGM/PNG images it points
to, trains a minimal single-convolution classifier, and reports the
standard multiclass metric suite on the held-out test split.
"""

from .data import Manifest, ManifestRow, load_image, read_manifest
from .errors import DataError, HarnessError, TrainingError
from .model import OneConvNet
from .report import (
    MetricsReport,
    format_report,
    mean_report,
    report_compare,
    write_json,
)
from .train import TrainConfig, majority_accuracy, repeat_train_eval, train_eval

__version__ = "0.1.0"

__all__ = [
    "DataError",
    "HarnessError",
    "Manifest",
    "ManifestRow",
    "MetricsReport",
    "OneConvNet",
    "TrainConfig",
    "TrainingError",
    "format_report",
    "load_image",
    "majority_accuracy",
    "mean_report",
    "read_manifest",
    "repeat_train_eval",
    "report_compare",
    "train_eval",
    "write_json",
    "__version__",
]
