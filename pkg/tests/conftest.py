import pytest

from toricposet.flips import canonical
from toricposet.graph import Graph, Orientation

C4 = Graph.cycle(4)


def orient(g: Graph, arcs) -> Orientation:
    return Orientation.from_arcs(g, arcs)


@pytest.fixture
def c4():
    return C4


@pytest.fixture
def p1():
    # 0->1->2->3 plus the long arc 0->3
    return canonical(orient(C4, [(0, 1), (1, 2), (2, 3), (0, 3)]))


@pytest.fixture
def p2():
    return canonical(orient(C4, [(1, 0), (2, 1), (3, 2), (3, 0)]))


@pytest.fixture
def p3():
    return canonical(orient(C4, [(1, 0), (3, 0), (2, 1), (2, 3)]))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
