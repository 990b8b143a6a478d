import pytest

from artinlab.sieve import get_tables

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def tables_1e4():
    return get_tables(10**4)


@pytest.fixture(scope="session")
def tables_1e6():
    return get_tables(10**6)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
