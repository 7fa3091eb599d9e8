"""Command line: train on a manifest, or compare encoders side by side.

Exit codes: 0 success, 1 data or training failure, 2 usage error.
"""

import argparse
import os
import sys

from .data import read_manifest
from .errors import HarnessError
from .report import format_report, mean_report, report_compare, write_json
from .train import TrainConfig, majority_accuracy, repeat_train_eval


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="manifestcnn",
        description="Train a one-convolution CNN on a manifest-listed "
        "image dataset and report test metrics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_train_flags(p):
        p.add_argument("--batch-size", type=int, default=64)
        p.add_argument("--epochs", type=int, default=10)
        p.add_argument("--learning-rate", type=float, default=0.003)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--repeats", type=int, default=3,
                       help="train this many times with consecutive seeds")
        p.add_argument("--out-dir", default=".",
                       help="where metrics files are written")
        p.add_argument("--verbose", action="store_true")

    t = sub.add_parser("train", help="train and evaluate one manifest")
    t.add_argument("manifest")
    add_train_flags(t)

    c = sub.add_parser("compare", help="train several manifests, one table")
    c.add_argument("arms", nargs="+", metavar="LABEL=MANIFEST")
    add_train_flags(c)

    return parser


def _config(args) -> TrainConfig:
    return TrainConfig(
        batch_size=args.batch_size,
        epochs=args.epochs,
        learning_rate=args.learning_rate,
        seed=args.seed,
    )


def cmd_train(args) -> int:
    config = _config(args)
    reports = repeat_train_eval(args.manifest, config, args.repeats)
    if args.verbose:
        for report in reports:
            print(f"--- seed {report.seed} ---")
            print(format_report(report))
    summary = mean_report(reports)
    summary["majority_accuracy"] = majority_accuracy(read_manifest(args.manifest))

    os.makedirs(args.out_dir, exist_ok=True)
    json_path = os.path.join(args.out_dir, "metrics.json")
    write_json(summary, json_path)
    table_path = os.path.join(args.out_dir, "metrics.txt")
    best = max(reports, key=lambda r: r.accuracy)
    with open(table_path, "w", encoding="utf-8") as fh:
        fh.write(f"repeats={len(reports)} (best run by accuracy shown)\n")
        fh.write(format_report(best) + "\n")

    print(
        f"accuracy mean={summary['accuracy_mean']:.4f} "
        f"std={summary['accuracy_std']:.4f} best={summary['accuracy_best']:.4f} "
        f"majority={summary['majority_accuracy']:.4f}"
    )
    print(f"wrote {json_path} and {table_path}")
    return 0


def cmd_compare(args) -> int:
    arms = []
    for spec in args.arms:
        if "=" not in spec:
            print(
                f"manifestcnn: error: expected LABEL=MANIFEST, got {spec!r}",
                file=sys.stderr,
            )
            return 2
        label, _, path = spec.partition("=")
        arms.append((label, path))

    config = _config(args)
    mean_rows, labels, summaries = [], [], {}
    for label, path in arms:
        reports = repeat_train_eval(path, config, args.repeats)
        summary = mean_report(reports)
        summary["majority_accuracy"] = majority_accuracy(read_manifest(path))
        summaries[label] = summary
        # a synthetic report of the means keeps the table code uniform
        best = max(reports, key=lambda r: r.accuracy)
        mean_rows.append(
            type(best)(
                accuracy=summary["accuracy_mean"],
                precision_weighted=summary["precision_weighted_mean"],
                recall_weighted=summary["recall_weighted_mean"],
                f1_weighted=summary["f1_weighted_mean"],
                f1_macro=summary["f1_macro_mean"],
                roc_auc=summary["roc_auc_mean"],
                training_runtime_seconds=summary["training_runtime_seconds_mean"],
                test_size=best.test_size,
                seed=config.seed,
            )
        )
        labels.append(label)

    table = report_compare(mean_rows, labels)
    print(f"mean of {args.repeats} runs per arm:")
    print(table)

    os.makedirs(args.out_dir, exist_ok=True)
    write_json(summaries, os.path.join(args.out_dir, "compare.json"))
    with open(os.path.join(args.out_dir, "compare.txt"), "w", encoding="utf-8") as fh:
        fh.write(table + "\n")
    print(f"wrote {args.out_dir}/compare.json and {args.out_dir}/compare.txt")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "train":
            return cmd_train(args)
        return cmd_compare(args)
    except ValueError as exc:
        print(f"manifestcnn: error: {exc}", file=sys.stderr)
        return 2
    except (HarnessError, OSError) as exc:
        print(f"manifestcnn: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
