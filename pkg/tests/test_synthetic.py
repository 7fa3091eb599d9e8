"""Tests for the synthetic labeled corpora."""

from collections import Counter

import pytest

from hilbertseq.synthetic import (
    CLASSES,
    CORPORA,
    make_records,
    write_corpus_csv,
)


def test_breast_corpus_counts():
    records = make_records("breast")
    assert len(records) == 949
    counts = Counter(r.label for r in records)
    assert counts["very active"] == 43
    assert counts["moderately active"] == 73
    assert counts["experimental inactive"] == 83
    assert counts["virtual inactive"] == 750


def test_lung_corpus_counts():
    records = make_records("lung")
    assert len(records) == 901
    counts = Counter(r.label for r in records)
    assert counts["very active"] == 37
    assert counts["moderately active"] == 60
    assert counts["experimental inactive"] == 84
    assert counts["virtual inactive"] == 720


def test_four_classes_and_sequential_ids():
    records = make_records("lung")
    assert set(r.label for r in records) == set(CLASSES)
    assert [r.id for r in records] == [str(i) for i in range(901)]


def test_length_bounds():
    for corpus in CORPORA:
        for r in make_records(corpus):
            assert 5 <= len(r.residues) <= 38


def test_sequences_use_af_residue_letters():
    allowed = set("ACDEFGHIKLMNPQRSTVWYX")
    for r in make_records("breast"):
        assert set(r.residues) <= allowed


def test_signature_enrichment_separates_classes():
    # each class's sequences should favor that class's signature letters
    records = make_records("lung")
    from hilbertseq.synthetic import _SIGNATURES

    for label, signature in _SIGNATURES.items():
        members = [r for r in records if r.label == label]
        hits = sum(sum(c in signature for c in r.residues) for r in members)
        total = sum(len(r.residues) for r in members)
        assert hits / total > 0.4  # far above the 0.25 uniform share


def test_determinism_and_seed_sensitivity():
    a = make_records("breast")
    b = make_records("breast")
    c = make_records("breast", seed=123)
    assert [r.residues for r in a] == [r.residues for r in b]
    assert [r.residues for r in a] != [r.residues for r in c]


def test_write_corpus_csv(tmp_path):
    path = tmp_path / "lung.csv"
    write_corpus_csv("lung", path)
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "sequence,label"
    assert len(lines) == 902
