import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from util import load_fixture  # noqa: E402


@pytest.fixture(scope="session")
def ex1():
    return load_fixture("ex1.lp")


@pytest.fixture(scope="session")
def ex2():
    return load_fixture("ex2.lp")


@pytest.fixture(scope="session")
def disj():
    return load_fixture("disj.lp")


@pytest.fixture(scope="session")
def headcycle():
    return load_fixture("headcycle.lp")


@pytest.fixture(scope="session")
def suppnotjust():
    return load_fixture("suppnotjust.lp")


@pytest.fixture(scope="session")
def switch():
    return load_fixture("switch.lp")
