"""Acceptance criteria, one test per criterion.

Each test here is a shipping gate (except throughput, which is
recorded but not gated).  The conftest hook prints a one-line PASS or
FAIL verdict per criterion after the run.
"""

import random
import time

import numpy as np

from hilbertseq.cli import main
from hilbertseq.curve import CurveParams, distance_from_point, point_from_distance
from hilbertseq.dataio import (
    DatasetManifest,
    SequenceRecord,
    parse_labeled_csv,
    read_pgm,
    split_dataset,
    write_pgm,
)
from hilbertseq.encoder import EncodingConfig, encode_sequence
from hilbertseq.reference import curve_points
from hilbertseq.synthetic import write_corpus_csv

RESIDUES = "ACDEFGHIKLMNPQRSTVWY"


def fuzz_corpus(n=50, seed=1234):
    rng = random.Random(seed)
    pool = RESIDUES + "XBZ"  # includes symbols outside the alphabet
    records = []
    for i in range(n):
        length = rng.randint(5, 38)
        seq = "".join(rng.choice(pool) for _ in range(length))
        if not any(c in RESIDUES for c in seq):
            seq = "A" + seq[1:]
        records.append(SequenceRecord(id=f"f{i}", residues=seq))
    return records


def test_oracle_equivalence_orders_1_to_8(record_property):
    started = time.perf_counter()
    mismatches = 0
    for order in range(1, 9):
        params = CurveParams(order=order)
        oracle = curve_points(order)
        for d in range(params.theta):
            if point_from_distance(d, params) != oracle[d]:
                mismatches += 1
    elapsed = time.perf_counter() - started
    record_property("seconds", f"{elapsed:.2f}")
    assert mismatches == 0
    assert elapsed < 10.0


def test_injectivity_space_filling_orders_to_8():
    for order in range(1, 9):
        params = CurveParams(order=order)
        points = {point_from_distance(d, params) for d in range(params.theta)}
        assert len(points) == params.theta
        side = params.side
        assert points == {(x, y) for x in range(side) for y in range(side)}


def test_continuity_unit_steps_orders_to_8():
    for order in range(1, 9):
        params = CurveParams(order=order)
        prev = point_from_distance(0, params)
        for d in range(1, params.theta):
            cur = point_from_distance(d, params)
            assert abs(cur[0] - prev[0]) + abs(cur[1] - prev[1]) == 1
            prev = cur


def test_round_trip_orders_to_8():
    for order in range(1, 9):
        params = CurveParams(order=order)
        for d in range(params.theta):
            assert distance_from_point(point_from_distance(d, params), params) == d


def test_image_geometry_default_64_and_order7_128(tmp_path):
    fasta = tmp_path / "one.fa"
    fasta.write_text(">s\nMKTAYIAKQRQISFVK\n")
    out6 = tmp_path / "o6"
    out7 = tmp_path / "o7"
    assert main(["encode", str(fasta), "--out-dir", str(out6)]) == 0
    assert main(["encode", str(fasta), "--out-dir", str(out7), "--order", "7"]) == 0
    assert read_pgm(out6 / "s.pgm").shape == (64, 64)
    assert read_pgm(out7 / "s.pgm").shape == (128, 128)


def test_conservation_determinism_and_pgm_round_trip(tmp_path):
    config = EncodingConfig()
    for record in fuzz_corpus():
        img = encode_sequence(record, config)
        known = sum(c in RESIDUES for c in record.residues.upper())
        assert img.counts.sum() == img.meta.mapped == known
        again = encode_sequence(record, config)
        assert np.array_equal(img.counts, again.counts)
        assert np.array_equal(img.intensities, again.intensities)
        path = tmp_path / f"{record.id}.pgm"
        write_pgm(img.intensities, path)
        assert np.array_equal(read_pgm(path), img.intensities)


def test_dataset_ingest_and_split_sizes(tmp_path):
    counts = {"breast": 949, "lung": 901}
    for corpus, expected in counts.items():
        path = tmp_path / f"{corpus}.csv"
        write_corpus_csv(corpus, path)
        records = parse_labeled_csv(path, "sequence", "label")
        assert len(records) == expected

        manifest = split_dataset(records, seed=42)
        sizes = manifest.counts_by_split()
        n = len(records)
        assert abs(sizes["test"] - n * 0.2) <= 1
        assert abs(sizes["val"] - (n - sizes["test"]) * 0.1) <= 1
        assert sizes["train"] + sizes["val"] + sizes["test"] == n

        again = split_dataset(records, seed=42)
        assert [(r.sequence_id, r.split) for r in manifest.rows] == [
            (r.sequence_id, r.split) for r in again.rows
        ]

    lung = parse_labeled_csv(tmp_path / "lung.csv", "sequence", "label")
    sizes = split_dataset(lung, seed=42).counts_by_split()
    assert sizes == {"train": 649, "val": 72, "test": 180}


def test_throughput_batch_encode_901_recorded(record_property, tmp_path):
    path = tmp_path / "lung.csv"
    write_corpus_csv("lung", path)
    records = parse_labeled_csv(path, "sequence", "label")
    config = EncodingConfig()
    started = time.perf_counter()
    for record in records:
        encode_sequence(record, config)
    elapsed = time.perf_counter() - started
    record_property("seconds", f"{elapsed:.2f}")
    record_property("under_5s", str(elapsed < 5.0))
    # recorded, not gated: only total failure to encode fails this test
    assert len(records) == 901
