"""Manifest and image loading.

The harness talks to encoders only through files: a tab-separated
manifest (comment line `# seed=<n>`, a fixed header, one row per
image) and the single-channel 8-bit PGM or PNG images it references.
Image paths in the manifest are resolved relative to the manifest's
directory.
"""

import os
from dataclasses import dataclass

import numpy as np
from PIL import Image

from .errors import DataError

MANIFEST_HEADER = "image_path\tlabel\tsplit\tsequence_id"
SPLITS = ("train", "val", "test")


@dataclass(frozen=True)
class ManifestRow:
    image_path: str
    label: str
    split: str
    sequence_id: str


@dataclass(frozen=True)
class Manifest:
    """Parsed manifest: rows plus the split seed it was built with."""

    rows: tuple
    seed: int
    base_dir: str

    def labels(self) -> list:
        """Class names, sorted for a stable label -> index mapping."""
        return sorted({r.label for r in self.rows})

    def split_rows(self, split: str) -> list:
        return [r for r in self.rows if r.split == split]

    def resolve(self, row: ManifestRow) -> str:
        return os.path.join(self.base_dir, row.image_path)


def read_manifest(path) -> Manifest:
    path = os.fspath(path)
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().strip()
        if not first.startswith("# seed="):
            raise DataError(f"{path}: missing '# seed=' comment line")
        try:
            seed = int(first.split("=", 1)[1])
        except ValueError:
            raise DataError(f"{path}: unparsable seed in {first!r}")
        header = fh.readline().strip()
        if header != MANIFEST_HEADER:
            raise DataError(f"{path}: unexpected header {header!r}")
        rows = []
        for lineno, line in enumerate(fh, start=3):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise DataError(f"{path}:{lineno}: expected 4 fields")
            if parts[2] not in SPLITS:
                raise DataError(f"{path}:{lineno}: bad split {parts[2]!r}")
            rows.append(ManifestRow(*parts))
    if not rows:
        raise DataError(f"{path}: no data rows")
    return Manifest(rows=tuple(rows), seed=seed, base_dir=os.path.dirname(path))


def _read_pgm(path) -> np.ndarray:
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] != b"P5":
        raise DataError(f"{path}: not a binary P5 PGM file")
    # scan three header integers, allowing '#' comment lines
    pos, values = 2, []
    while len(values) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        try:
            values.append(int(data[start:pos]))
        except ValueError:
            raise DataError(f"{path}: malformed PGM header")
    width, height, maxval = values
    if maxval != 255:
        raise DataError(f"{path}: expected 8-bit PGM, maxval {maxval}")
    pos += 1  # single whitespace byte separates header from raster
    raster = data[pos : pos + width * height]
    if len(raster) != width * height:
        raise DataError(f"{path}: truncated PGM raster")
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width)


def load_image(path) -> np.ndarray:
    """One image file to a 2-D uint8 array; PGM natively, PNG via PIL."""
    path = os.fspath(path)
    if not os.path.exists(path):
        raise DataError(f"missing image: {path}")
    if path.endswith(".pgm"):
        return _read_pgm(path)
    with Image.open(path) as img:
        arr = np.asarray(img.convert("L"), dtype=np.uint8)
    return arr


def load_split_arrays(manifest: Manifest, split: str, classes: list):
    """All of a split's images as (n, 1, h, w) float32 in [0, 1] + labels.

    Raises DataError naming the first missing or size-mismatched image.
    """
    rows = manifest.split_rows(split)
    index = {c: i for i, c in enumerate(classes)}
    images, targets = [], []
    shape = None
    for row in rows:
        arr = load_image(manifest.resolve(row))
        if shape is None:
            shape = arr.shape
        elif arr.shape != shape:
            raise DataError(
                f"{manifest.resolve(row)}: shape {arr.shape} differs "
                f"from first image {shape}"
            )
        images.append(arr.astype(np.float32) / 255.0)
        targets.append(index[row.label])
    if not rows:
        return (
            np.zeros((0, 1, 1, 1), dtype=np.float32),
            np.zeros((0,), dtype=np.int64),
        )
    x = np.stack(images)[:, np.newaxis, :, :]
    y = np.asarray(targets, dtype=np.int64)
    return x, y
