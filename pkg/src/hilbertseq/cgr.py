"""Frequency chaos-game-representation baseline encoder.

The classic iterated midpoint construction: anchors for the alphabet
sit on the unit square's boundary, the walk starts at the center and
moves halfway toward each symbol's anchor, and visits are binned into
a grid.  With a 4-symbol alphabet the anchors are the four corners;
larger alphabets get equal arc-length spacing along the perimeter.
"""

import hashlib
from dataclasses import dataclass

import numpy as np

from .encoder import (
    Alphabet,
    EncodedImage,
    EncodingMeta,
    NORMALIZATIONS,
    UNKNOWN_POLICIES,
    normalize,
)
from .errors import DomainError, EncodeError, UnknownSymbolError


@dataclass(frozen=True)
class CgrConfig:
    """Grid resolution for the binned walk; must be a power of two."""

    resolution: int = 64

    def __post_init__(self):
        r = self.resolution
        if r < 2 or r & (r - 1):
            raise DomainError(f"resolution must be a power of two >= 2, got {r}")


def perimeter_anchors(count: int) -> list:
    """count points at equal arc spacing along the unit-square boundary.

    Starts at (0, 0) and walks the edges (1,0) -> (1,1) -> (0,1) -> back.
    count=4 recovers the classic corner layout.
    """
    if count < 2:
        raise DomainError(f"need >= 2 anchors, got {count}")
    anchors = []
    for j in range(count):
        t = 4.0 * j / count
        if t < 1.0:
            anchors.append((t, 0.0))
        elif t < 2.0:
            anchors.append((1.0, t - 1.0))
        elif t < 3.0:
            anchors.append((3.0 - t, 1.0))
        else:
            anchors.append((0.0, 4.0 - t))
    return anchors


def encode_cgr(
    record,
    config: CgrConfig,
    alphabet: Alphabet,
    unknown_policy: str = "skip",
    normalization: str = "max_count",
) -> EncodedImage:
    """Chaos-game encode one sequence record into a resolution^2 grid.

    Same contract as encode_sequence for unknown symbols, conservation
    (sum of counts == mapped symbols), and normalization.
    """
    if unknown_policy not in UNKNOWN_POLICIES:
        raise DomainError(f"unknown_policy must be one of {UNKNOWN_POLICIES}")
    if normalization not in NORMALIZATIONS:
        raise DomainError(f"normalization must be one of {NORMALIZATIONS}")
    seq = record.residues.upper()
    if not seq:
        raise EncodeError(f"sequence {record.id!r} is empty")

    res = config.resolution
    anchors = perimeter_anchors(len(alphabet))
    lookup = alphabet._lookup
    counts = np.zeros((res, res), dtype=np.int64)
    x, y = 0.5, 0.5
    mapped = 0
    skipped = 0
    seen = set()

    for pos, ch in enumerate(seq):
        idx = lookup.get(ch)
        if idx is None:
            if unknown_policy == "error":
                raise UnknownSymbolError(ch, pos)
            skipped += 1
            continue
        ax, ay = anchors[idx]
        x = (x + ax) / 2.0
        y = (y + ay) / 2.0
        # image convention: axis 0 is the row (y), axis 1 the column (x)
        counts[min(int(y * res), res - 1), min(int(x * res), res - 1)] += 1
        mapped += 1
        seen.add(idx)

    if mapped == 0:
        raise EncodeError(
            f"sequence {record.id!r} has no symbols in alphabet "
            f"{alphabet.name!r} ({skipped} skipped)"
        )

    text = (
        f"cgr|res={res}|alphabet={alphabet.name}:{alphabet.symbols}"
        f"|unknown={unknown_policy}|normalization={normalization}"
    )
    meta = EncodingMeta(
        sequence_id=record.id,
        fingerprint=hashlib.sha256(text.encode()).hexdigest()[:12],
        mapped=mapped,
        skipped=skipped,
        distinct_symbols=len(seen),
        collisions=0,
        unique_mapping=res * res > len(seq),
    )
    return EncodedImage(
        counts=counts,
        intensities=normalize(counts, normalization),
        meta=meta,
    )
