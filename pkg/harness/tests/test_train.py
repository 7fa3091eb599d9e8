"""Tests for training and evaluation."""

import pytest

from manifestcnn.data import read_manifest
from manifestcnn.errors import TrainingError
from manifestcnn.report import METRIC_FIELDS
from manifestcnn.train import (
    TrainConfig,
    majority_accuracy,
    repeat_train_eval,
    train_eval,
)

from conftest import build_toy_manifest, write_pgm

FAST = TrainConfig(batch_size=8, epochs=3, seed=0)


def test_config_defaults_are_the_reference_setting():
    config = TrainConfig()
    assert config.batch_size == 64
    assert config.epochs == 10
    assert config.learning_rate == 0.003
    assert config.optimizer == "adam"


def test_config_validation():
    with pytest.raises(ValueError):
        TrainConfig(batch_size=0)
    with pytest.raises(ValueError):
        TrainConfig(epochs=0)
    with pytest.raises(ValueError):
        TrainConfig(learning_rate=0.0)
    with pytest.raises(ValueError):
        TrainConfig(optimizer="sgd")


def test_separable_toy_reaches_perfect_accuracy(toy_manifest):
    # the reference configuration must ace a trivially separable set
    report = train_eval(toy_manifest, TrainConfig(seed=0))
    assert report.accuracy == 1.0
    assert report.f1_weighted == 1.0
    assert report.roc_auc == 1.0
    assert report.test_size == 12


def test_metrics_lie_in_range_and_accuracy_equals_weighted_recall(toy_manifest):
    report = train_eval(toy_manifest, FAST)
    for name in METRIC_FIELDS:
        assert 0.0 <= getattr(report, name) <= 1.0
    assert report.accuracy == pytest.approx(report.recall_weighted)
    assert report.training_runtime_seconds > 0


def test_same_seed_is_deterministic(toy_manifest):
    a = train_eval(toy_manifest, FAST)
    b = train_eval(toy_manifest, FAST)
    for name in METRIC_FIELDS:
        assert abs(getattr(a, name) - getattr(b, name)) <= 1e-6


def test_single_class_manifest_rejected(tmp_path):
    img_dir = tmp_path / "images"
    img_dir.mkdir()
    rows = []
    for i in range(12):
        write_pgm(img_dir / f"{i}.pgm", 100)
        split = "train" if i < 9 else "test"
        rows.append(f"images/{i}.pgm\tonly\t{split}\t{i}")
    manifest = tmp_path / "m.tsv"
    manifest.write_text(
        "# seed=1\nimage_path\tlabel\tsplit\tsequence_id\n" + "\n".join(rows) + "\n"
    )
    with pytest.raises(TrainingError):
        train_eval(manifest, FAST)


def test_empty_train_split_rejected(tmp_path):
    img_dir = tmp_path / "images"
    img_dir.mkdir()
    rows = []
    for i, label in enumerate(("a", "b", "a", "b")):
        write_pgm(img_dir / f"{i}.pgm", 100)
        rows.append(f"images/{i}.pgm\t{label}\ttest\t{i}")
    manifest = tmp_path / "m.tsv"
    manifest.write_text(
        "# seed=1\nimage_path\tlabel\tsplit\tsequence_id\n" + "\n".join(rows) + "\n"
    )
    with pytest.raises(TrainingError):
        train_eval(manifest, FAST)


def test_repeat_train_eval_bumps_seeds(toy_manifest):
    reports = repeat_train_eval(toy_manifest, TrainConfig(epochs=1, seed=5), 3)
    assert [r.seed for r in reports] == [5, 6, 7]


def test_repeat_train_eval_rejects_zero(toy_manifest):
    with pytest.raises(ValueError):
        repeat_train_eval(toy_manifest, FAST, 0)


def test_majority_accuracy_on_toy(toy_manifest):
    # toy classes are balanced, so the majority floor is one half
    assert majority_accuracy(read_manifest(toy_manifest)) == 0.5


def test_verbose_logs_val_but_never_selects(toy_manifest, capsys):
    train_eval(toy_manifest, TrainConfig(epochs=1), verbose=True)
    printed = capsys.readouterr().out
    assert "val accuracy" in printed
    assert "not used for selection" in printed
