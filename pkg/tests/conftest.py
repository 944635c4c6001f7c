"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

import pytest

CRITERIA = {
    1: "sign families deep-illuminate every pattern, n = 3..8",
    2: "J_n sizes and two-zero completion",
    3: "R^3 corpus: certified, negation-closed, at most 6 directions",
    4: "R^4 corpus: certified, at most 14 directions",
    5: "n = 5, 6 bodies by missing maximal subcubes",
    6: "all (n-2)-subcube bodies give exactly 2^n - 2",
    7: "cubelike bodies: bound and recursion trail",
    8: "sign grid certifies 200 random bodies",
    9: "planar brute-force minima",
    10: "cube needs 2^n directions, n = 2, 3",
    11: "facet criterion agrees with gauge probe",
    12: "x-ray pair reports for every corpus body",
}

_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            state = "xfail" if report.skipped else "xpass"
        else:
            state = report.outcome
        _outcomes.setdefault(marker.args[0], []).append((item.name, state))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        runs = _outcomes.get(k)
        if not runs:
            continue
        bad = [name for name, state in runs if state != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {k:2d} {verdict}: {CRITERIA[k]}"
        if bad:
            line += f"  [not met: {', '.join(bad)}]"
        terminalreporter.write_line(line)
