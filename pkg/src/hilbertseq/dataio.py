"""Dataset ingestion, deterministic splitting, and image/manifest export.

FASTA and labeled CSV go in; PGM/PNG/CSV images and a tab-separated
manifest binding image paths to labels and train/val/test splits come
out.  PGM (binary P5) is the canonical format because it round-trips
bit-exactly; the PNG writer emits minimal single-channel 8-bit files
with no external imaging dependency.
"""

import csv
import os
import random
import struct
import warnings
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ParseError, SchemaError, SplitError

IMAGE_FORMATS = ("pgm", "png", "csv")
SPLITS = ("train", "val", "test")

MANIFEST_HEADER = "image_path\tlabel\tsplit\tsequence_id"


@dataclass(frozen=True)
class SequenceRecord:
    """One identified, optionally labeled sequence."""

    id: str
    residues: str
    label: str | None = None

    def __post_init__(self):
        if not self.residues:
            raise ParseError(f"record {self.id!r} has an empty sequence")


@dataclass
class ManifestRow:
    image_path: str
    label: str
    split: str
    sequence_id: str


@dataclass
class DatasetManifest:
    """Rows binding exported images to labels and splits, plus the seed."""

    rows: list
    seed: int

    def counts_by_split(self) -> dict:
        out = {s: 0 for s in SPLITS}
        for row in self.rows:
            out[row.split] += 1
        return out

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(f"# seed={self.seed}\n")
            fh.write(MANIFEST_HEADER + "\n")
            for r in self.rows:
                fh.write(f"{r.image_path}\t{r.label}\t{r.split}\t{r.sequence_id}\n")

    @classmethod
    def read(cls, path) -> "DatasetManifest":
        with open(path, encoding="utf-8") as fh:
            first = fh.readline().strip()
            if not first.startswith("# seed="):
                raise ParseError(f"{path}: missing '# seed=' comment line")
            seed = int(first.split("=", 1)[1])
            header = fh.readline().strip()
            if header != MANIFEST_HEADER:
                raise SchemaError(f"{path}: unexpected manifest header {header!r}")
            rows = []
            for lineno, line in enumerate(fh, start=3):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                if len(parts) != 4:
                    raise ParseError(f"{path}:{lineno}: expected 4 tab-separated fields")
                if parts[2] not in SPLITS:
                    raise ParseError(f"{path}:{lineno}: bad split {parts[2]!r}")
                rows.append(ManifestRow(*parts))
        return cls(rows=rows, seed=seed)


def _as_lines(source):
    if hasattr(source, "read"):
        return source, None
    fh = open(source, encoding="utf-8")
    return fh, fh


def parse_fasta(source) -> list:
    """Parse FASTA from a path or text file object into records.

    Multi-line sequences are concatenated; blank lines are ignored.
    Sequence data before any header, an empty sequence under a header,
    and duplicate ids are errors carrying the line number.
    """
    stream, owned = _as_lines(source)
    records = []
    seen = set()
    header = None
    header_line = 0
    chunks: list = []

    def flush():
        if header is None:
            return
        residues = "".join(chunks)
        if not residues:
            raise ParseError(f"line {header_line}: header {header!r} has no sequence")
        if header in seen:
            raise ParseError(f"line {header_line}: duplicate sequence id {header!r}")
        seen.add(header)
        records.append(SequenceRecord(id=header, residues=residues))

    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith(">"):
                flush()
                title = line[1:].strip()
                if not title:
                    raise ParseError(f"line {lineno}: empty FASTA header")
                # id is the first token; any description after it is dropped
                header = title.split()[0]
                header_line = lineno
                chunks = []
            else:
                if header is None:
                    raise ParseError(
                        f"line {lineno}: sequence data before any '>' header"
                    )
                chunks.append(line)
        flush()
    finally:
        if owned is not None:
            owned.close()
    return records


def parse_labeled_csv(source, seq_column: str, label_column: str) -> list:
    """Parse a labeled CSV into records; row index becomes the id.

    Labels are stripped and lowercased; sequences are stripped but kept
    verbatim otherwise.  A missing column is a schema error, an empty
    sequence cell a row error.
    """
    stream, owned = _as_lines(source)
    try:
        reader = csv.DictReader(stream)
        fields = reader.fieldnames or []
        for col in (seq_column, label_column):
            if col not in fields:
                raise SchemaError(
                    f"column {col!r} not in CSV header {fields!r}"
                )
        records = []
        for i, row in enumerate(reader):
            residues = (row.get(seq_column) or "").strip()
            if not residues:
                raise ParseError(f"row {i}: empty {seq_column!r} cell")
            label = (row.get(label_column) or "").strip().lower()
            if not label:
                raise ParseError(f"row {i}: empty {label_column!r} cell")
            records.append(SequenceRecord(id=str(i), residues=residues, label=label))
    finally:
        if owned is not None:
            owned.close()
    return records


def _largest_remainder(sizes: dict, target: int) -> dict:
    """Split target across groups proportionally to their sizes."""
    total = sum(sizes.values())
    quotas = {k: target * n / total for k, n in sizes.items()}
    alloc = {k: int(q) for k, q in quotas.items()}
    short = target - sum(alloc.values())
    by_remainder = sorted(sizes, key=lambda k: (alloc[k] - quotas[k], k))
    for k in by_remainder[:short]:
        alloc[k] += 1
    return alloc


def split_dataset(
    records,
    seed: int,
    test_frac: float = 0.2,
    val_frac: float = 0.1,
    stratify: bool = True,
) -> DatasetManifest:
    """Assign every record a train/val/test split, deterministically.

    test_frac is taken from the whole set, then val_frac of the
    remaining training pool.  Splitting is stratified by label when
    every class has at least 5 members (otherwise it falls back to a
    plain shuffle with a warning).  Image paths are left empty for
    export_images to fill.
    """
    n = len(records)
    if n < 10:
        raise SplitError(f"need >= 10 records to split, got {n}")
    labels = sorted({r.label or "" for r in records})
    if n < len(labels):
        raise SplitError(f"{n} records cannot cover {len(labels)} classes")

    n_test = round(n * test_frac)
    n_val = round((n - n_test) * val_frac)

    rng = random.Random(seed)
    by_label: dict = {lab: [] for lab in labels}
    for idx, r in enumerate(records):
        by_label[r.label or ""].append(idx)

    can_stratify = stratify and all(len(v) >= 5 for v in by_label.values())
    if stratify and not can_stratify:
        warnings.warn(
            "class with fewer than 5 members; splitting without stratification",
            stacklevel=2,
        )

    assignment = {}
    if can_stratify and len(by_label) > 1:
        sizes = {lab: len(v) for lab, v in by_label.items()}
        test_alloc = _largest_remainder(sizes, n_test)
        rest_sizes = {lab: sizes[lab] - test_alloc[lab] for lab in sizes}
        val_alloc = _largest_remainder(rest_sizes, n_val)
        for lab in labels:
            members = by_label[lab][:]
            rng.shuffle(members)
            t, v = test_alloc[lab], val_alloc[lab]
            for idx in members[:t]:
                assignment[idx] = "test"
            for idx in members[t : t + v]:
                assignment[idx] = "val"
            for idx in members[t + v :]:
                assignment[idx] = "train"
    else:
        order = list(range(n))
        rng.shuffle(order)
        for idx in order[:n_test]:
            assignment[idx] = "test"
        for idx in order[n_test : n_test + n_val]:
            assignment[idx] = "val"
        for idx in order[n_test + n_val :]:
            assignment[idx] = "train"

    rows = [
        ManifestRow(
            image_path="",
            label=r.label or "",
            split=assignment[i],
            sequence_id=r.id,
        )
        for i, r in enumerate(records)
    ]
    return DatasetManifest(rows=rows, seed=seed)


def write_pgm(intensities: np.ndarray, path) -> None:
    """Binary P5, maxval 255, row-major; bit-exact across platforms."""
    h, w = intensities.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(intensities, dtype=np.uint8).tobytes())


def read_pgm(path) -> np.ndarray:
    """Read back a binary P5 file written by write_pgm."""
    with open(path, "rb") as fh:
        data = fh.read()
    fields = []
    i = 0
    while len(fields) < 4:
        while i < len(data) and data[i : i + 1].isspace():
            i += 1
        if data[i : i + 1] == b"#":
            while i < len(data) and data[i] != 0x0A:
                i += 1
            continue
        j = i
        while j < len(data) and not data[j : j + 1].isspace():
            j += 1
        fields.append(data[i:j])
        i = j
    if fields[0] != b"P5":
        raise ParseError(f"{path}: not a binary PGM (magic {fields[0]!r})")
    w, h, maxval = int(fields[1]), int(fields[2]), int(fields[3])
    if maxval != 255:
        raise ParseError(f"{path}: unsupported maxval {maxval}")
    i += 1  # single whitespace byte after maxval
    pixels = np.frombuffer(data[i : i + w * h], dtype=np.uint8)
    if pixels.size != w * h:
        raise ParseError(f"{path}: truncated pixel data")
    return pixels.reshape(h, w).copy()


def _png_chunk(fh, tag: bytes, payload: bytes) -> None:
    fh.write(struct.pack(">I", len(payload)))
    fh.write(tag)
    fh.write(payload)
    fh.write(struct.pack(">I", zlib.crc32(tag + payload) & 0xFFFFFFFF))


def write_png(intensities: np.ndarray, path) -> None:
    """Minimal single-channel 8-bit grayscale PNG."""
    h, w = intensities.shape
    raw = bytearray()
    grid = np.ascontiguousarray(intensities, dtype=np.uint8)
    for row in grid:
        raw.append(0)  # filter type: none
        raw.extend(row.tobytes())
    with open(path, "wb") as fh:
        fh.write(b"\x89PNG\r\n\x1a\n")
        _png_chunk(fh, b"IHDR", struct.pack(">IIBBBBB", w, h, 8, 0, 0, 0, 0))
        _png_chunk(fh, b"IDAT", zlib.compress(bytes(raw)))
        _png_chunk(fh, b"IEND", b"")


def write_image(img, path, format: str = "pgm") -> None:
    """Write an EncodedImage: pgm/png use intensities, csv raw counts."""
    if format not in IMAGE_FORMATS:
        raise SchemaError(f"format must be one of {IMAGE_FORMATS}, got {format!r}")
    parent = os.path.dirname(os.fspath(path))
    if parent:
        os.makedirs(parent, exist_ok=True)
    if format == "pgm":
        write_pgm(img.intensities, path)
    elif format == "png":
        write_png(img.intensities, path)
    else:
        np.savetxt(path, img.counts, fmt="%d", delimiter=",")


def export_images(
    records,
    manifest: DatasetManifest,
    out_dir,
    encode_fn,
    format: str = "pgm",
    jobs: int = 1,
) -> list:
    """Encode and write one image per record, filling manifest paths.

    encode_fn takes a record and returns an EncodedImage.  Rows are
    matched to records by position.  Files may be written concurrently;
    the manifest rows are always filled in record order, and nothing is
    written to the manifest file here (callers write it last).  Returns
    the encoding metas in record order.
    """
    if len(records) != len(manifest.rows):
        raise SplitError(
            f"{len(records)} records vs {len(manifest.rows)} manifest rows"
        )
    os.makedirs(out_dir, exist_ok=True)

    def work(item):
        i, record = item
        img = encode_fn(record)
        path = os.path.join(out_dir, f"{record.id}.{format}")
        write_image(img, path, format)
        return i, path, img.meta

    items = list(enumerate(records))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, items))
    else:
        results = [work(it) for it in items]

    metas = [None] * len(records)
    for i, path, meta in results:
        manifest.rows[i].image_path = path
        metas[i] = meta
    return metas
