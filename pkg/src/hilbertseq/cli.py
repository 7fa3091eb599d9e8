"""Command-line interface: curve inspection, encoding, dataset export.

Exit codes: 0 success, 1 I/O or runtime failure, 2 usage/schema error.
Defaults reproduce the reference configuration (order 6, protein-20
alphabet, paper mode) with zero flags.  A `--config` file of
`key = value` lines supplies defaults that explicit flags override.
"""

import argparse
import os
import re
import sys
from collections import Counter

from .cgr import CgrConfig, encode_cgr
from .curve import CurveParams, point_from_distance
from .dataio import (
    SequenceRecord,
    export_images,
    parse_fasta,
    parse_labeled_csv,
    split_dataset,
    write_image,
)
from .encoder import ALPHABETS, Alphabet, EncodingConfig, encode_sequence
from .errors import HilbertSeqError, SchemaError

MAX_TABLE_ORDER = 10


class UsageError(ValueError):
    """Bad flag combination or value; maps to exit code 2."""


# (flag dest, parser) pairs a config file may supply
_CONFIG_KEYS = {
    "order": int,
    "alphabet": str,
    "mode": str,
    "unknown": str,
    "overflow": str,
    "normalization": str,
    "format": str,
    "encoder": str,
    "out_dir": str,
    "seq_column": str,
    "label_column": str,
    "seed": int,
    "jobs": int,
}


def load_config(path) -> dict:
    """Parse a line-oriented `key = value` file with # comments."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, _, val = line.partition("=")
            key = key.strip().replace("-", "_")
            val = val.strip()
            if key not in _CONFIG_KEYS:
                raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
            try:
                values[key] = _CONFIG_KEYS[key](val)
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: bad value for {key}: {exc}")
    return values


def _resolve(args, file_cfg: dict, key: str, default):
    cli_val = getattr(args, key, None)
    if cli_val is not None:
        return cli_val
    if key in file_cfg:
        return file_cfg[key]
    return default


def resolve_alphabet(name: str) -> Alphabet:
    """Named alphabet from the registry, or a literal symbol string."""
    if name in ALPHABETS:
        return ALPHABETS[name]
    if len(name) >= 2:
        return Alphabet(name="custom", symbols=name)
    raise UsageError(
        f"unknown alphabet {name!r}; use one of {sorted(ALPHABETS)} "
        f"or give the symbols directly"
    )


def safe_filename(seq_id: str) -> str:
    cleaned = re.sub(r"[^-._A-Za-z0-9]+", "_", seq_id).strip("._")
    return cleaned or "seq"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertseq",
        description="Hilbert-curve image encodings for molecular sequences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_encoder_flags(p):
        p.add_argument("--order", type=int, help="curve order (default 6)")
        p.add_argument("--alphabet", help="named alphabet or literal symbols")
        p.add_argument("--mode", choices=("paper", "positional"))
        p.add_argument("--unknown", choices=("skip", "error"), dest="unknown")
        p.add_argument("--overflow", choices=("modulo", "clamp"))
        p.add_argument("--normalization", choices=("max_count", "log_max"))
        p.add_argument("--format", choices=("pgm", "png", "csv"))
        p.add_argument("--encoder", choices=("hilbert", "cgr"))
        p.add_argument("--out-dir", dest="out_dir")
        p.add_argument("--jobs", type=int)
        p.add_argument("--config", help="key = value defaults file")

    c = sub.add_parser("curve", help="dump the d -> (x, y) table")
    c.add_argument("--order", type=int, help="curve order (default 6)")
    c.add_argument("--output", help="write table here instead of stdout")
    c.add_argument("--config", help="key = value defaults file")

    e = sub.add_parser("encode", help="encode FASTA or plain sequences to images")
    e.add_argument("input", help="FASTA file, or one sequence per line")
    add_common_encoder_flags(e)

    d = sub.add_parser("dataset", help="encode a labeled CSV and write a manifest")
    d.add_argument("csv", help="labeled CSV file")
    d.add_argument("--seq-column", dest="seq_column")
    d.add_argument("--label-column", dest="label_column")
    d.add_argument("--seed", type=int)
    d.add_argument("--no-stratify", action="store_true")
    add_common_encoder_flags(d)

    return parser


def _encoding_setup(args, file_cfg):
    order = _resolve(args, file_cfg, "order", 6)
    if order < 1:
        raise UsageError(f"--order must be >= 1, got {order}")
    alphabet = resolve_alphabet(_resolve(args, file_cfg, "alphabet", "protein-20"))
    config = EncodingConfig(
        params=CurveParams(order=order, dims=2),
        alphabet=alphabet,
        mode=_resolve(args, file_cfg, "mode", "paper"),
        unknown_policy=_resolve(args, file_cfg, "unknown", "skip"),
        overflow_policy=_resolve(args, file_cfg, "overflow", "modulo"),
        normalization=_resolve(args, file_cfg, "normalization", "max_count"),
    )
    encoder = _resolve(args, file_cfg, "encoder", "hilbert")
    if encoder == "cgr":
        cgr_config = CgrConfig(resolution=config.params.side)

        def encode_fn(record):
            return encode_cgr(
                record,
                cgr_config,
                alphabet,
                unknown_policy=config.unknown_policy,
                normalization=config.normalization,
            )

    else:

        def encode_fn(record):
            return encode_sequence(record, config)

    return config, encode_fn


def cmd_curve(args, file_cfg) -> int:
    order = _resolve(args, file_cfg, "order", 6)
    if order < 1:
        raise UsageError(f"--order must be >= 1, got {order}")
    if order > MAX_TABLE_ORDER:
        raise UsageError(
            f"--order {order} too large for a table dump (max {MAX_TABLE_ORDER})"
        )
    params = CurveParams(order=order, dims=2)
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        for d in range(params.theta):
            x, y = point_from_distance(d, params)
            out.write(f"{d}\t{x}\t{y}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _read_plain(path) -> list:
    records = []
    stem = os.path.splitext(os.path.basename(path))[0]
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line:
                records.append(
                    SequenceRecord(id=f"{stem}_{lineno}", residues=line)
                )
    return records


def cmd_encode(args, file_cfg) -> int:
    config, encode_fn = _encoding_setup(args, file_cfg)
    fmt = _resolve(args, file_cfg, "format", "pgm")
    out_dir = _resolve(args, file_cfg, "out_dir", ".")

    with open(args.input, encoding="utf-8") as fh:
        head = fh.read(1)
    records = parse_fasta(args.input) if head == ">" else _read_plain(args.input)
    if not records:
        raise HilbertSeqError(f"no sequences found in {args.input}")

    os.makedirs(out_dir, exist_ok=True)
    mapped = skipped = 0
    used_names = Counter()
    for record in records:
        img = encode_fn(record)
        name = safe_filename(record.id)
        used_names[name] += 1
        if used_names[name] > 1:
            name = f"{name}_{used_names[name]}"
        path = os.path.join(out_dir, f"{name}.{fmt}")
        write_image(img, path, fmt)
        mapped += img.meta.mapped
        skipped += img.meta.skipped
    print(
        f"encoded {len(records)} sequence(s) to {out_dir}: "
        f"mapped={mapped} skipped={skipped}"
    )
    return 0


def cmd_dataset(args, file_cfg) -> int:
    config, encode_fn = _encoding_setup(args, file_cfg)
    fmt = _resolve(args, file_cfg, "format", "pgm")
    seed = _resolve(args, file_cfg, "seed", 42)
    jobs = _resolve(args, file_cfg, "jobs", 1)
    default_out = os.path.splitext(os.path.basename(args.csv))[0] + "_out"
    out_dir = _resolve(args, file_cfg, "out_dir", default_out)

    records = parse_labeled_csv(
        args.csv,
        seq_column=_resolve(args, file_cfg, "seq_column", "sequence"),
        label_column=_resolve(args, file_cfg, "label_column", "label"),
    )
    manifest = split_dataset(records, seed=seed, stratify=not args.no_stratify)

    image_dir = os.path.join(out_dir, "images")
    export_images(records, manifest, image_dir, encode_fn, format=fmt, jobs=jobs)
    # store paths relative to the manifest's directory so the tree relocates
    for row in manifest.rows:
        row.image_path = os.path.relpath(row.image_path, start=out_dir)
    manifest_path = os.path.join(out_dir, "manifest.tsv")
    manifest.write(manifest_path)

    histogram = Counter(r.label for r in records)
    print(f"wrote {len(records)} images and {manifest_path}")
    print("classes: " + ", ".join(f"{k}={v}" for k, v in sorted(histogram.items())))
    sizes = manifest.counts_by_split()
    print(
        f"splits: train={sizes['train']} val={sizes['val']} test={sizes['test']} "
        f"(seed={seed})"
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        file_cfg = load_config(args.config) if getattr(args, "config", None) else {}
        if args.command == "curve":
            return cmd_curve(args, file_cfg)
        if args.command == "encode":
            return cmd_encode(args, file_cfg)
        return cmd_dataset(args, file_cfg)
    except (UsageError, SchemaError) as exc:
        print(f"hilbertseq: error: {exc}", file=sys.stderr)
        return 2
    except (HilbertSeqError, OSError) as exc:
        print(f"hilbertseq: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
