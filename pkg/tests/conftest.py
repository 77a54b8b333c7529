"""Per-criterion PASS/FAIL lines for the acceptance suite."""

from collections import defaultdict

import pytest

CRITERIA = {
    1: "twist lands on chi0 for random instances",
    2: "exhaustive coboundary, bimultiplicativity and cocycle checks",
    3: "gl_chi axioms, super after twisting, mutations detected",
    4: "parity multiplicative, even part of index 1 or 2",
    5: "incremental and canonical strategies agree",
    6: "scalar and cyclotomic kernels",
    7: "bicharacter census",
}

_results = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or report.failed or (report.when == "setup" and report.skipped):
        _results[crit].append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        runs = _results[n]
        status = "PASS" if runs and all(runs) else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status} ({sum(runs)}/{len(runs)} tests) - {CRITERIA.get(n, '')}"
        )
