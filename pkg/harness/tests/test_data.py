"""Tests for manifest and image loading."""

import numpy as np
import pytest
from PIL import Image

from manifestcnn.data import (
    Manifest,
    load_image,
    load_split_arrays,
    read_manifest,
)
from manifestcnn.errors import DataError

from conftest import write_pgm


def test_read_manifest(toy_manifest):
    manifest = read_manifest(toy_manifest)
    assert manifest.seed == 1
    assert len(manifest.rows) == 48
    assert manifest.labels() == ["bright", "dark"]
    assert len(manifest.split_rows("train")) == 32
    assert len(manifest.split_rows("val")) == 4
    assert len(manifest.split_rows("test")) == 12


def test_read_manifest_rejects_missing_seed(tmp_path):
    path = tmp_path / "m.tsv"
    path.write_text("image_path\tlabel\tsplit\tsequence_id\n")
    with pytest.raises(DataError):
        read_manifest(path)


def test_read_manifest_rejects_bad_header(tmp_path):
    path = tmp_path / "m.tsv"
    path.write_text("# seed=1\npath\tlabel\n")
    with pytest.raises(DataError):
        read_manifest(path)


def test_read_manifest_rejects_bad_split(tmp_path):
    path = tmp_path / "m.tsv"
    path.write_text(
        "# seed=1\nimage_path\tlabel\tsplit\tsequence_id\na.pgm\tx\tdev\t0\n"
    )
    with pytest.raises(DataError):
        read_manifest(path)


def test_read_manifest_rejects_empty(tmp_path):
    path = tmp_path / "m.tsv"
    path.write_text("# seed=1\nimage_path\tlabel\tsplit\tsequence_id\n")
    with pytest.raises(DataError):
        read_manifest(path)


def test_load_pgm_image(tmp_path):
    path = tmp_path / "x.pgm"
    write_pgm(path, 42, side=4)
    arr = load_image(path)
    assert arr.shape == (4, 4)
    assert arr.dtype == np.uint8
    assert (arr == 42).all()


def test_load_pgm_with_comment(tmp_path):
    path = tmp_path / "c.pgm"
    path.write_bytes(b"P5\n# made by hand\n2 2\n255\n\x01\x02\x03\x04")
    assert load_image(path).tolist() == [[1, 2], [3, 4]]


def test_load_pgm_rejects_ascii_variant(tmp_path):
    path = tmp_path / "a.pgm"
    path.write_bytes(b"P2\n2 2\n255\n1 2 3 4\n")
    with pytest.raises(DataError):
        load_image(path)


def test_load_pgm_rejects_truncated(tmp_path):
    path = tmp_path / "t.pgm"
    path.write_bytes(b"P5\n4 4\n255\n\x00\x01")
    with pytest.raises(DataError):
        load_image(path)


def test_load_png_image(tmp_path):
    grid = np.arange(64, dtype=np.uint8).reshape(8, 8)
    path = tmp_path / "x.png"
    Image.fromarray(grid, mode="L").save(path)
    assert np.array_equal(load_image(path), grid)


def test_load_missing_image_names_path(tmp_path):
    with pytest.raises(DataError) as err:
        load_image(tmp_path / "gone.pgm")
    assert "gone.pgm" in str(err.value)


def test_load_split_arrays(toy_manifest):
    manifest = read_manifest(toy_manifest)
    classes = manifest.labels()
    x, y = load_split_arrays(manifest, "train", classes)
    assert x.shape == (32, 1, 8, 8)
    assert x.dtype == np.float32
    assert 0.0 <= x.min() and x.max() <= 1.0
    assert sorted(set(y.tolist())) == [0, 1]


def test_load_split_arrays_missing_image_lists_path(tmp_path, toy_manifest):
    manifest = read_manifest(toy_manifest)
    victim = manifest.resolve(manifest.rows[0])
    import os

    os.remove(victim)
    with pytest.raises(DataError) as err:
        load_split_arrays(manifest, "train", manifest.labels())
    assert "0.pgm" in str(err.value)


def test_load_split_arrays_rejects_mixed_sizes(tmp_path):
    img_dir = tmp_path / "images"
    img_dir.mkdir()
    write_pgm(img_dir / "a.pgm", 10, side=8)
    write_pgm(img_dir / "b.pgm", 10, side=16)
    manifest_path = tmp_path / "m.tsv"
    manifest_path.write_text(
        "# seed=1\nimage_path\tlabel\tsplit\tsequence_id\n"
        "images/a.pgm\tx\ttrain\t0\nimages/b.pgm\ty\ttrain\t1\n"
    )
    manifest = read_manifest(manifest_path)
    with pytest.raises(DataError):
        load_split_arrays(manifest, "train", manifest.labels())


def test_manifest_paths_resolve_relative_to_manifest_dir(toy_manifest):
    manifest = read_manifest(toy_manifest)
    resolved = manifest.resolve(manifest.rows[0])
    assert str(toy_manifest.parent) in resolved
