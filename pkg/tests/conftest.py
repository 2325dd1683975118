import pytest
from hypothesis import strategies as st

from klsposets.generators import boolean, chain, cross_polytope_faces, cube_faces, paper_fig1, paper_fig2
from klsposets.poset import build_poset, direct_product, dual
from klsposets.suite import eulerian_suite, non_eulerian_suite

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def euler_suite():
    return eulerian_suite()


@pytest.fixture(scope="session")
def non_euler_suite():
    return non_eulerian_suite()


@pytest.fixture
def acceptance_line():
    def record(number, description, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {description}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graded_posets(draw, max_levels=3, max_width=3):
    """Bounded graded posets built from random covers between adjacent rank levels."""
    levels = draw(st.lists(st.integers(1, max_width), max_size=max_levels))
    n = sum(levels) + 2
    starts, nxt = [], 1
    for size in levels:
        starts.append(nxt)
        nxt += size
    top = n - 1
    if not levels:
        return build_poset([(0, 1)], 2)
    covers = [(0, starts[0] + i) for i in range(levels[0])]
    covers += [(starts[-1] + i, top) for i in range(levels[-1])]
    for k in range(len(levels) - 1):
        a, b = levels[k], levels[k + 1]
        masks = [draw(st.integers(1, (1 << a) - 1)) for _ in range(b)]
        for i in range(a):
            if not any(m >> i & 1 for m in masks):
                masks[draw(st.integers(0, b - 1))] |= 1 << i
        covers += [(starts[k] + i, starts[k + 1] + j) for j, m in enumerate(masks) for i in range(a) if m >> i & 1]
    return build_poset(covers, n)


EULERIAN_ATOMS = [
    lambda: chain(1),
    lambda: boolean(2),
    paper_fig1,
    paper_fig2,
    lambda: cube_faces(2),
    lambda: cross_polytope_faces(2),
]


@st.composite
def eulerian_posets(draw):
    """Products (possibly dualized) of small known Eulerian posets."""
    P = EULERIAN_ATOMS[draw(st.integers(0, len(EULERIAN_ATOMS) - 1))]()
    if draw(st.booleans()):
        Q = EULERIAN_ATOMS[draw(st.integers(0, 2))]()
        P = direct_product(P, Q)
    if draw(st.booleans()):
        P = dual(P)
    return P
