import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import ACCEPTANCE_RESULTS, THREE_EDGE_EXAMPLE, TAIL_EXAMPLE, SQUARE_EXAMPLE, TREE_EXAMPLE  # noqa: E402

from ldh import build  # noqa: E402


@pytest.fixture
def three_edge():
    return build(10, THREE_EDGE_EXAMPLE, require_sperner=True, require_connected=True)


@pytest.fixture
def tail():
    return build(5, TAIL_EXAMPLE)


@pytest.fixture
def square():
    return build(6, SQUARE_EXAMPLE)


@pytest.fixture
def tree():
    return build(10, TREE_EXAMPLE)


@pytest.fixture
def p2():
    return build(2, [[0, 1]])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
