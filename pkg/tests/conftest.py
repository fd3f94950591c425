from pathlib import Path

import pytest
from hypothesis import settings

from toricdef.reports import load_cone

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


def fixture_cone(name):
    return load_cone(str(FIXTURES / f"{name}.json"))


@pytest.fixture(scope="session")
def p123():
    return fixture_cone("p123")


@pytest.fixture(scope="session")
def hexagon():
    return fixture_cone("hexagon")


@pytest.fixture(scope="session")
def square():
    return fixture_cone("square")


@pytest.fixture(scope="session")
def rectangle():
    return fixture_cone("rectangle")


@pytest.fixture(scope="session")
def trapezoid():
    return fixture_cone("trapezoid")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
