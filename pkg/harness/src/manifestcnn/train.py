"""Training and evaluation against a dataset manifest.

train_eval fits the single-convolution network on the manifest's train
split and evaluates on its test split.  The val split is only reported
(when verbose), never used for selection: no early stopping, no
scheduler, no augmentation.
"""

import time
from dataclasses import dataclass, replace

import numpy as np
import torch
from sklearn.metrics import (
    accuracy_score,
    f1_score,
    precision_recall_fscore_support,
    roc_auc_score,
)
from torch import nn

from .data import Manifest, load_split_arrays, read_manifest
from .errors import TrainingError
from .model import OneConvNet
from .report import MetricsReport

OPTIMIZERS = ("adam",)


@dataclass(frozen=True)
class TrainConfig:
    """Hyperparameters; the defaults are the reference setting."""

    batch_size: int = 64
    epochs: int = 10
    learning_rate: float = 0.003
    optimizer: str = "adam"
    seed: int = 0

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if self.learning_rate <= 0:
            raise ValueError(f"learning_rate must be > 0, got {self.learning_rate}")
        if self.optimizer.lower() not in OPTIMIZERS:
            raise ValueError(f"optimizer must be one of {OPTIMIZERS}")


def _weighted_ovr_auc(y_true: np.ndarray, probs: np.ndarray, n_classes: int) -> float:
    if n_classes == 2:
        return float(roc_auc_score(y_true, probs[:, 1]))
    try:
        return float(
            roc_auc_score(
                y_true,
                probs,
                multi_class="ovr",
                average="weighted",
                labels=list(range(n_classes)),
            )
        )
    except ValueError:
        # a class is absent from the test split; weight over present ones
        total, acc = 0, 0.0
        for c in np.unique(y_true):
            binary = (y_true == c).astype(int)
            if binary.all():
                continue
            support = int(binary.sum())
            acc += support * float(roc_auc_score(binary, probs[:, c]))
            total += support
        if total == 0:
            raise TrainingError("ROC-AUC undefined: one test class only")
        return acc / total


def majority_accuracy(manifest: Manifest) -> float:
    """Accuracy of always predicting the most frequent training label."""
    train = [r.label for r in manifest.split_rows("train")]
    test = [r.label for r in manifest.split_rows("test")]
    if not train or not test:
        raise TrainingError("majority baseline needs train and test rows")
    top = max(sorted(set(train)), key=train.count)
    return sum(lab == top for lab in test) / len(test)


def train_eval(manifest_path, config: TrainConfig = TrainConfig(), verbose=False):
    """Train on the manifest's train split, evaluate on its test split."""
    manifest = read_manifest(manifest_path)
    classes = manifest.labels()
    if len(classes) < 2:
        raise TrainingError(
            f"manifest holds a single class {classes and classes[0]!r}; "
            f"nothing to classify"
        )

    x_train, y_train = load_split_arrays(manifest, "train", classes)
    x_val, y_val = load_split_arrays(manifest, "val", classes)
    x_test, y_test = load_split_arrays(manifest, "test", classes)
    if len(x_train) == 0 or len(x_test) == 0:
        raise TrainingError("manifest needs non-empty train and test splits")

    torch.manual_seed(config.seed)
    generator = torch.Generator().manual_seed(config.seed)

    xt = torch.from_numpy(x_train)
    yt = torch.from_numpy(y_train)
    side = xt.shape[-1]
    model = OneConvNet(side, len(classes))
    optimizer = torch.optim.Adam(model.parameters(), lr=config.learning_rate)
    loss_fn = nn.CrossEntropyLoss()

    started = time.perf_counter()
    model.train()
    for epoch in range(config.epochs):
        perm = torch.randperm(len(xt), generator=generator)
        total_loss = 0.0
        for start in range(0, len(xt), config.batch_size):
            idx = perm[start : start + config.batch_size]
            optimizer.zero_grad()
            loss = loss_fn(model(xt[idx]), yt[idx])
            loss.backward()
            optimizer.step()
            total_loss += loss.item() * len(idx)
        if verbose:
            print(f"epoch {epoch + 1}/{config.epochs} "
                  f"loss {total_loss / len(xt):.4f}")
    runtime = time.perf_counter() - started

    model.eval()
    with torch.no_grad():
        logits = model(torch.from_numpy(x_test))
        probs = torch.softmax(logits, dim=1).numpy()
        preds = probs.argmax(axis=1)
        if verbose and len(x_val):
            val_preds = model(torch.from_numpy(x_val)).argmax(dim=1).numpy()
            print(f"val accuracy {accuracy_score(y_val, val_preds):.4f} "
                  f"(reported only, not used for selection)")

    precision, recall, f1w, _ = precision_recall_fscore_support(
        y_test, preds, average="weighted", zero_division=0
    )
    return MetricsReport(
        accuracy=float(accuracy_score(y_test, preds)),
        precision_weighted=float(precision),
        recall_weighted=float(recall),
        f1_weighted=float(f1w),
        f1_macro=float(f1_score(y_test, preds, average="macro", zero_division=0)),
        roc_auc=_weighted_ovr_auc(y_test, probs, len(classes)),
        training_runtime_seconds=runtime,
        test_size=len(y_test),
        seed=config.seed,
    )


def repeat_train_eval(manifest_path, config: TrainConfig, repeats: int = 3):
    """Run train_eval with seeds seed, seed+1, ...; returns all reports."""
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    return [
        train_eval(manifest_path, replace(config, seed=config.seed + i))
        for i in range(repeats)
    ]
