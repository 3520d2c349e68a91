import pytest

from copwin.graph import generate_graph

from ._report import RESULTS


@pytest.fixture
def spider123():
    return generate_graph("spider:1,2,3")


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, verdict = RESULTS[number]
        terminalreporter.write_line(f"AC{number:<2} {verdict}  {title}")
