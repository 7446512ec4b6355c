import sys

import pytest

from cache import group


@pytest.fixture(scope="session")
def A2():
    return group("A2")


@pytest.fixture(scope="session")
def A3():
    return group("A3")


@pytest.fixture(scope="session")
def B3():
    return group("B3")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.LINES):
        terminalreporter.write_line(line)
