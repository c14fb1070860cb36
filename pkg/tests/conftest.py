from __future__ import annotations

import pytest

from graphclass import build_class_database, from_edges
from graphclass.graph import Graph

_criteria: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria.append((marker.args[0], "PASS" if rep.passed else "FAIL", item.name))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, name in sorted(_criteria, key=lambda c: int(c[0].split()[0])):
        terminalreporter.write_line(f"{status}  criterion {label}  ({name})")


@pytest.fixture
def p3() -> Graph:
    return from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def triangle() -> Graph:
    return from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture(scope="session")
def db():
    return build_class_database(8)
