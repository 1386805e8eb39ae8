from functools import lru_cache

import pytest

from arrfactor import catalog


@lru_cache(maxsize=None)
def arr(name: str):
    """Catalog arrangements are immutable, so one instance (and lattice) per session."""
    return catalog.by_name(name)


@pytest.fixture
def get():
    return arr


# -- acceptance summary: one PASS/FAIL line per criterion -----------------------------

_criteria: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, [title, True, 0.0])
    if report.failed or (report.when == "setup" and report.skipped):
        entry[1] = False
    if report.when == "call":
        entry[2] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, seconds = _criteria[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number:2d} {seconds:8.2f}s  {title}")
