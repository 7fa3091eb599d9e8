"""Deterministic synthetic peptide corpora for desk-scale experiments.

Stand-ins for the anticancer-peptide benchmark corpora: same schema
(sequence + four-way activity label), same row counts (949 breast, 901
lung), same length range (5..38) and heavy class imbalance.  Sequences
are drawn from class-specific residue distributions, so the labels are
genuinely learnable; none of this is biological data.
"""

import csv
import random
from dataclasses import dataclass

from .dataio import SequenceRecord
from .errors import DomainError

CLASSES = (
    "very active",
    "moderately active",
    "experimental inactive",
    "virtual inactive",
)

# Disjoint five-residue signatures keep the class compositions separable.
_SIGNATURES = {
    "very active": "KLFRW",
    "moderately active": "AGIVH",
    "experimental inactive": "DENQS",
    "virtual inactive": "CMPTY",
}

_RESIDUES = "ACDEFGHIKLMNPQRSTVWY"
_SIGNATURE_WEIGHT = 4.0
_MIN_LEN, _MAX_LEN = 5, 38


@dataclass(frozen=True)
class CorpusSpec:
    name: str
    class_counts: dict
    mean_lengths: dict
    default_seed: int


CORPORA = {
    "breast": CorpusSpec(
        name="breast",
        class_counts={
            "very active": 43,
            "moderately active": 73,
            "experimental inactive": 83,
            "virtual inactive": 750,
        },
        mean_lengths={
            "very active": 20.7,
            "moderately active": 18.5,
            "experimental inactive": 16.5,
            "virtual inactive": 14.5,
        },
        default_seed=9490,
    ),
    "lung": CorpusSpec(
        name="lung",
        class_counts={
            "very active": 37,
            "moderately active": 60,
            "experimental inactive": 84,
            "virtual inactive": 720,
        },
        mean_lengths={
            "very active": 20.7,
            "moderately active": 19.0,
            "experimental inactive": 17.0,
            "virtual inactive": 14.5,
        },
        default_seed=9010,
    ),
}


def _class_weights(label: str) -> list:
    sig = set(_SIGNATURES[label])
    return [_SIGNATURE_WEIGHT if r in sig else 1.0 for r in _RESIDUES]


def make_records(corpus: str, seed: int | None = None) -> list:
    """Generate the named corpus as SequenceRecords, in a fixed order."""
    spec = CORPORA.get(corpus)
    if spec is None:
        raise DomainError(f"unknown corpus {corpus!r}; choose from {sorted(CORPORA)}")
    rng = random.Random(spec.default_seed if seed is None else seed)
    records = []
    i = 0
    for label in CLASSES:
        weights = _class_weights(label)
        mean_len = spec.mean_lengths[label]
        for _ in range(spec.class_counts[label]):
            length = int(round(rng.gauss(mean_len, 6.0)))
            length = max(_MIN_LEN, min(_MAX_LEN, length))
            chars = rng.choices(_RESIDUES, weights=weights, k=length)
            # sprinkle occasional ambiguity codes to exercise skip paths
            if rng.random() < 0.05 and length > _MIN_LEN:
                chars[rng.randrange(length)] = "X"
            records.append(
                SequenceRecord(id=str(i), residues="".join(chars), label=label)
            )
            i += 1
    return records


def write_corpus_csv(corpus: str, path, seed: int | None = None) -> int:
    """Write the named corpus as a sequence,label CSV; returns row count."""
    records = make_records(corpus, seed)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["sequence", "label"])
        for r in records:
            writer.writerow([r.residues, r.label])
    return len(records)
