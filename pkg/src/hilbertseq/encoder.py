"""Symbol sequences to Hilbert-curve images.

Each character is mapped to its alphabetic index, the index is scaled
by theta/L to a curve distance, and the distance's curve point gets a
hit.  Hit counts are then normalized to an 8-bit grayscale grid.  Note
the distance depends only on the character's index and the sequence
length, so an image lights at most one cell per distinct symbol; the
"positional" mode below is a documented extension that spends the
curve on positions instead.
"""

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from .curve import CurveParams, point_from_distance
from .errors import DomainError, EncodeError, UnknownSymbolError

MODES = ("paper", "positional")
UNKNOWN_POLICIES = ("skip", "error")
OVERFLOW_POLICIES = ("modulo", "clamp")
NORMALIZATIONS = ("max_count", "log_max")


@dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free symbol set; order defines the index."""

    name: str
    symbols: str

    def __post_init__(self):
        if len(self.symbols) < 2:
            raise DomainError(f"alphabet {self.name!r} needs >= 2 symbols")
        if len(set(self.symbols)) != len(self.symbols):
            raise DomainError(f"alphabet {self.name!r} has duplicate symbols")
        object.__setattr__(
            self, "_lookup", {c: i for i, c in enumerate(self.symbols)}
        )

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, c: str) -> bool:
        return c in self._lookup

    def index(self, c: str) -> int:
        idx = self._lookup.get(c)
        if idx is None:
            raise UnknownSymbolError(c)
        return idx


# Amino acids in alphabetical one-letter order; nucleotides likewise.
PROTEIN_20 = Alphabet("protein-20", "ACDEFGHIKLMNPQRSTVWY")
DNA_4 = Alphabet("dna-4", "ACGT")

ALPHABETS = {a.name: a for a in (PROTEIN_20, DNA_4)}


def index_mapping(c: str, alphabet: Alphabet) -> int:
    """Zero-based position of c in the alphabet; raises if absent."""
    return alphabet.index(c)


@dataclass(frozen=True)
class EncodingConfig:
    """Everything that determines an encoding, collected in one place."""

    params: CurveParams = field(default_factory=lambda: CurveParams(6))
    alphabet: Alphabet = PROTEIN_20
    mode: str = "paper"
    unknown_policy: str = "skip"
    overflow_policy: str = "modulo"
    normalization: str = "max_count"

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.unknown_policy not in UNKNOWN_POLICIES:
            raise DomainError(
                f"unknown_policy must be one of {UNKNOWN_POLICIES}, "
                f"got {self.unknown_policy!r}"
            )
        if self.overflow_policy not in OVERFLOW_POLICIES:
            raise DomainError(
                f"overflow_policy must be one of {OVERFLOW_POLICIES}, "
                f"got {self.overflow_policy!r}"
            )
        if self.normalization not in NORMALIZATIONS:
            raise DomainError(
                f"normalization must be one of {NORMALIZATIONS}, "
                f"got {self.normalization!r}"
            )
        if self.params.dims != 2:
            raise DomainError("image encoding requires a 2-dimensional curve")

    @property
    def fingerprint(self) -> str:
        """Short stable hash of every field that affects the output."""
        text = "|".join(
            (
                f"order={self.params.order}",
                f"dims={self.params.dims}",
                f"alphabet={self.alphabet.name}:{self.alphabet.symbols}",
                f"mode={self.mode}",
                f"unknown={self.unknown_policy}",
                f"overflow={self.overflow_policy}",
                f"normalization={self.normalization}",
            )
        )
        return hashlib.sha256(text.encode()).hexdigest()[:12]


@dataclass(frozen=True)
class EncodingMeta:
    """Per-sequence bookkeeping attached to every encoded image."""

    sequence_id: str
    fingerprint: str
    mapped: int
    skipped: int
    distinct_symbols: int
    collisions: int
    unique_mapping: bool


@dataclass(frozen=True)
class EncodedImage:
    """Hit-count grid plus its 8-bit view.

    counts holds per-cell hit counts (in positional mode, symbol index
    values instead); intensities is the normalized grayscale rendering.
    Arrays use image convention: counts[y, x], so a curve point (x, y)
    lands in row y, column x.
    """

    counts: np.ndarray
    intensities: np.ndarray
    meta: EncodingMeta

    @property
    def side(self) -> int:
        return self.counts.shape[0]


def distance_for_symbol(
    index: int, seq_len: int, params: CurveParams, overflow_policy: str = "modulo"
) -> int:
    """Scale an index to a curve distance: floor(index/seq_len * theta).

    Exact integer arithmetic; when the result reaches theta (index >=
    seq_len) the overflow policy wraps it modulo theta or clamps it to
    the last point.
    """
    if seq_len < 1:
        raise EncodeError("sequence length must be >= 1")
    if index < 0:
        raise DomainError(f"symbol index must be >= 0, got {index}")
    d = (index * params.theta) // seq_len
    if d >= params.theta:
        if overflow_policy == "clamp":
            return params.theta - 1
        return d % params.theta
    return d


def normalize(counts: np.ndarray, normalization: str = "max_count") -> np.ndarray:
    """Counts to 8-bit intensities; the max cell maps to 255.

    max_count scales linearly; log_max compresses with ln(1+count).
    Rounding is half away from zero.  An all-zero grid stays zero.
    """
    peak = int(counts.max()) if counts.size else 0
    if peak == 0:
        return np.zeros_like(counts, dtype=np.uint8)
    if normalization == "log_max":
        scaled = 255.0 * np.log1p(counts.astype(np.float64)) / math.log1p(peak)
    else:
        scaled = 255.0 * counts.astype(np.float64) / peak
    return np.floor(scaled + 0.5).astype(np.uint8)


def encode_sequence(record, config: EncodingConfig) -> EncodedImage:
    """Encode one sequence record (anything with .id and .residues).

    Input is uppercased first.  L is the full residue count, so skipped
    unknown symbols still stretch the distance scale; they just place no
    point.  In paper mode each occurrence increments its cell; in
    positional mode the curve is indexed by position and the cell keeps
    the last writer's index+1 (an extension, not the published formula).
    """
    seq = record.residues.upper()
    if not seq:
        raise EncodeError(f"sequence {record.id!r} is empty")
    length = len(seq)
    params = config.params
    lookup = config.alphabet._lookup
    side = params.side

    counts = np.zeros((side, side), dtype=np.int64)
    mapped = 0
    skipped = 0
    seen_indices = set()
    seen_distances = set()
    point_cache: dict[int, tuple] = {}

    for pos, ch in enumerate(seq):
        idx = lookup.get(ch)
        if idx is None:
            if config.unknown_policy == "error":
                raise UnknownSymbolError(ch, pos)
            skipped += 1
            continue
        scale_index = pos if config.mode == "positional" else idx
        d = distance_for_symbol(scale_index, length, params, config.overflow_policy)
        pt = point_cache.get(d)
        if pt is None:
            pt = point_from_distance(d, params)
            point_cache[d] = pt
        # image convention: axis 0 is the row (y), axis 1 the column (x)
        if config.mode == "positional":
            counts[pt[1], pt[0]] = idx + 1
        else:
            counts[pt[1], pt[0]] += 1
        mapped += 1
        if config.mode == "paper":
            seen_indices.add(idx)
            seen_distances.add(d)

    if mapped == 0:
        raise EncodeError(
            f"sequence {record.id!r} has no symbols in alphabet "
            f"{config.alphabet.name!r} ({skipped} skipped)"
        )

    meta = EncodingMeta(
        sequence_id=record.id,
        fingerprint=config.fingerprint,
        mapped=mapped,
        skipped=skipped,
        distinct_symbols=len(seen_indices),
        collisions=len(seen_indices) - len(seen_distances),
        unique_mapping=params.theta > length,
    )
    return EncodedImage(
        counts=counts,
        intensities=normalize(counts, config.normalization),
        meta=meta,
    )
