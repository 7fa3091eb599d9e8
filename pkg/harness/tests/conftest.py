"""Shared fixtures: toy manifest builder and the acceptance summary."""

import pytest

_ACCEPTANCE_FILE = "test_acceptance.py"
_results: dict = {}


def write_pgm(path, value: int, side: int = 8) -> None:
    header = f"P5\n{side} {side}\n255\n".encode()
    path.write_bytes(header + bytes([value]) * (side * side))


def build_toy_manifest(root, n_per_class: int = 24, side: int = 8):
    """Two trivially separable classes: dark images vs bright images."""
    img_dir = root / "images"
    img_dir.mkdir(parents=True)
    rows = []
    i = 0
    for label, base in (("dark", 16), ("bright", 224)):
        for k in range(n_per_class):
            name = f"{i}.pgm"
            write_pgm(img_dir / name, base + (k % 12), side=side)
            if k < n_per_class - 8:
                split = "train"
            elif k < n_per_class - 6:
                split = "val"
            else:
                split = "test"
            rows.append(f"images/{name}\t{label}\t{split}\t{i}")
            i += 1
    manifest = root / "manifest.tsv"
    manifest.write_text(
        "# seed=1\nimage_path\tlabel\tsplit\tsequence_id\n"
        + "\n".join(rows)
        + "\n"
    )
    return manifest


@pytest.fixture
def toy_manifest(tmp_path):
    return build_toy_manifest(tmp_path)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and _ACCEPTANCE_FILE in str(item.fspath):
        _results[item.nodeid] = report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, report in _results.items():
        name = nodeid.split("::")[-1]
        label = name.removeprefix("test_").replace("_", " ")
        status = "PASS" if report.passed else "FAIL"
        extra = "; ".join(f"{k}={v}" for k, v in report.user_properties)
        suffix = f"  [{extra}]" if extra else ""
        terminalreporter.write_line(f"{status}  {label}{suffix}")
