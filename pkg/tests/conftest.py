import pytest

from semicomm.constructions import (
    alternating_group,
    cyclic_group,
    girth4_band,
    symmetric_group,
    symmetric_inverse_monoid,
)


@pytest.fixture(scope="session")
def sym3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def alt4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def band4():
    return girth4_band()


@pytest.fixture(scope="session")
def i2():
    return symmetric_inverse_monoid(2)


@pytest.fixture(scope="session")
def i3():
    return symmetric_inverse_monoid(3)


@pytest.fixture(scope="session")
def c4():
    return cyclic_group(4)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
