import pytest

from zbin.groupoid import Groupoid

# The eight order-3 locally-zero tables, letters a,b,c -> 0,1,2.
LZ_EIGHT = [
    [0, 0, 0, 1, 1, 1, 2, 2, 2],
    [0, 0, 0, 1, 1, 2, 2, 1, 2],
    [0, 0, 2, 1, 1, 1, 0, 2, 2],
    [0, 1, 0, 0, 1, 1, 2, 2, 2],
    [0, 1, 2, 0, 1, 2, 0, 1, 2],
    [0, 0, 2, 1, 1, 2, 0, 1, 2],
    [0, 1, 0, 0, 1, 2, 2, 1, 2],
    [0, 1, 2, 0, 1, 1, 0, 2, 2],
]


@pytest.fixture
def example():
    """The three-element table with subtables L, R, L."""
    return Groupoid(3, [0, 0, 2, 1, 1, 1, 0, 2, 2])


@pytest.fixture
def lz_eight():
    return [Groupoid(3, t) for t in LZ_EIGHT]


_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria[marker.args[0]] = (rep.passed, item.name)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        ok, name = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  ({name})")
