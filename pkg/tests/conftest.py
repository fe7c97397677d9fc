import pytest

from golomb_fpt.corpus import consecutive_rulers, random_rulers
from golomb_fpt.hypergraph import CharacteristicHypergraph


@pytest.fixture(scope="session")
def small_corpus():
    """{0..n} for n <= 12 plus 200 random rulers with <= 14 marks from {0..30}."""
    return consecutive_rulers(12) + random_rulers(200, 14, 30, seed=2024)


def graph(edges, extra=()):
    """Hand-built hypergraph whose vertex set is the union of its edges plus ``extra``."""
    vs = {v for e in edges for v in e} | set(extra)
    return CharacteristicHypergraph(vs, edges)


_criteria: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    mark = report.user_properties and dict(report.user_properties).get("criterion")
    if not mark:
        return
    number, title = mark
    failed = report.failed
    if report.when == "call" or failed:
        prev = _criteria.get(number, (title, True))[1]
        _criteria[number] = (title, prev and not failed)


@pytest.fixture(autouse=True)
def _record_criterion(request, record_property):
    m = request.node.get_closest_marker("criterion")
    if m is not None:
        record_property("criterion", tuple(m.args))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}")
