import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fdaerial.antenna import AntennaPattern  # noqa: E402
from fdaerial.radio import RadioConfig  # noqa: E402


@pytest.fixture
def cfg():
    return RadioConfig()


@pytest.fixture
def gs_pattern():
    return AntennaPattern(22.0, 58.0, 4.0)


@pytest.fixture
def uav_pattern():
    return AntennaPattern(15.0, 36.0, 36.0)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
