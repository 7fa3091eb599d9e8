"""Metric reports: structured values, JSON export, and text tables."""

import json
import math
from dataclasses import asdict, dataclass, fields

METRIC_FIELDS = (
    "accuracy",
    "precision_weighted",
    "recall_weighted",
    "f1_weighted",
    "f1_macro",
    "roc_auc",
)


@dataclass(frozen=True)
class MetricsReport:
    """Test-split evaluation of one training run.

    All rate metrics lie in [0, 1]; roc_auc is one-vs-rest with
    class-support weighting; runtime covers the training loop only.
    """

    accuracy: float
    precision_weighted: float
    recall_weighted: float
    f1_weighted: float
    f1_macro: float
    roc_auc: float
    training_runtime_seconds: float
    test_size: int
    seed: int

    def __post_init__(self):
        for name in METRIC_FIELDS:
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} = {value} outside [0, 1]")
        if self.training_runtime_seconds < 0:
            raise ValueError("negative runtime")

    def as_dict(self) -> dict:
        return asdict(self)


def mean_report(reports: list) -> dict:
    """Flat mean/std summary across repeated runs of one configuration."""
    if not reports:
        raise ValueError("need at least one report")
    out = {}
    for name in METRIC_FIELDS + ("training_runtime_seconds",):
        values = [getattr(r, name) for r in reports]
        mean = sum(values) / len(values)
        var = sum((v - mean) ** 2 for v in values) / len(values)
        out[f"{name}_mean"] = mean
        out[f"{name}_std"] = math.sqrt(var)
    best = max(reports, key=lambda r: r.accuracy)
    out["accuracy_best"] = best.accuracy
    out["best_seed"] = best.seed
    out["repeats"] = len(reports)
    out["test_size"] = reports[0].test_size
    return out


def write_json(payload: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def report_compare(reports: list, labels: list) -> str:
    """Aligned comparison table, highest value per metric column marked.

    Ties keep the first row's mark (stable order).  Runtime and test
    size are shown unmarked; they are context, not a contest.
    """
    if not reports:
        raise ValueError("need at least one report")
    if len(reports) != len(labels):
        raise ValueError("one label per report required")

    columns = METRIC_FIELDS
    best = {
        col: max(range(len(reports)), key=lambda i: getattr(reports[i], col))
        for col in columns
    }
    # max() scans in order, so the first of equal values wins
    name_w = max(len(str(lab)) for lab in labels + ["model"])
    header = ["model".ljust(name_w)]
    header += [col.rjust(len(col)) for col in columns]
    header += ["runtime_s".rjust(9), "n_test".rjust(6)]
    lines = ["  ".join(header)]
    for i, (report, label) in enumerate(zip(reports, labels)):
        cells = [str(label).ljust(name_w)]
        for col in columns:
            mark = "*" if best[col] == i else " "
            cells.append(f"{getattr(report, col):.4f}{mark}".rjust(len(col)))
        cells.append(f"{report.training_runtime_seconds:9.2f}")
        cells.append(f"{report.test_size:6d}")
        lines.append("  ".join(cells))
    return "\n".join(lines)


def format_report(report: MetricsReport) -> str:
    """One run as an aligned two-column text block."""
    rows = [(f.name, getattr(report, f.name)) for f in fields(report)]
    width = max(len(name) for name, _ in rows)
    out = []
    for name, value in rows:
        shown = f"{value:.4f}" if isinstance(value, float) else str(value)
        out.append(f"{name.ljust(width)}  {shown}")
    return "\n".join(out)
