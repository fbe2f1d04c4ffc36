import warnings
from pathlib import Path

import pytest

from sudolyndon import parse_puzzle
from sudolyndon.grid import DegenerateGridWarning

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

#: Filled by the acceptance suite; echoed after the run so the one-line
#: verdicts survive pytest's output capture.
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


def load_fixture(name: str):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateGridWarning)
        return parse_puzzle((FIXTURES / name).read_bytes())


@pytest.fixture(scope="session")
def paper_4x4():
    return load_fixture("paper_4x4.sl")


@pytest.fixture(scope="session")
def paper_nosolution():
    return load_fixture("paper_nosolution.sl")


PAPER_4X4_SOLUTION = ("aabb", "aabb", "bbaa", "bbaa")
