import pytest

from helpers import ACCEPTANCE_LINES, W


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def w81():
    return W("a1 x1' a2 x1 a3 x1' a4 x1 a5 x1' a6 x1 a7 x1' a8 x1")
