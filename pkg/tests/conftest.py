import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from meshmatrix.graph import Multigraph
from meshmatrix.generate import random_multigraph

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def k3():
    return Multigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def k4():
    return Multigraph.from_pairs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def c4():
    return Multigraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=8, connected=True):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_multigraph(random.Random(seed), max_vertices, max_edges, connected)


# Filled in by tests/test_acceptance.py; printed at the end of the run.
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        name, passed, detail = ACCEPTANCE_RESULTS[key]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {key}: {name} -- {detail}")
