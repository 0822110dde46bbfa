import re

import pytest

from htdecomp import available_backends

import corpus

_criteria: dict[str, str] = {}


@pytest.fixture
def h_chain():
    return corpus.chain()


@pytest.fixture
def h_tri():
    return corpus.triangle()


@pytest.fixture
def h_cyc4():
    return corpus.cycle4()


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    if _criteria.get(label) != "FAIL":
        _criteria[label] = status


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int(re.match(r"\d+", s).group()), s)):
        terminalreporter.write_line(f"{_criteria[label]}  {label}")
