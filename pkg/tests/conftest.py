"""Shared pytest plumbing: the acceptance-criteria summary block.

Every test in test_acceptance.py represents one acceptance criterion.
This hook collects their outcomes and prints one PASS/FAIL line per
criterion at the end of the run, with any recorded measurements.
"""

import pytest

_ACCEPTANCE_FILE = "test_acceptance.py"
_results: dict = {}


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
