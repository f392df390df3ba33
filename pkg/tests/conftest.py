import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sombor_unicyclic.graph import Graph  # noqa: E402

# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def c4_pendant():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
