"""Shared hypothesis strategies and small named graphs."""
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from wellcover.graph import FamilySpec, Graph, cycle_graph, path_graph, star_graph, validate_family

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8):
    """Arbitrary simple graph with ``min_n..max_n`` vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def bipartite_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v]]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def family_graphs(draw, spec: FamilySpec, min_n=1, max_n=8):
    """Family member grown edge by edge; an edge that leaves the family is skipped."""
    n = draw(st.integers(min_n, max_n))
    pairs = draw(st.permutations(list(combinations(range(n), 2))))
    budget = draw(st.integers(0, len(pairs)))
    edges = []
    for e in pairs[:budget]:
        if validate_family(Graph(n, edges + [e]), spec):
            edges.append(e)
    return Graph(n, edges)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k13():
    return star_graph(3)


# criterion key -> (status, title, detail); filled by test_acceptance
ACCEPTANCE: dict[str, tuple[str, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (not k.isdigit(), int(k) if k.isdigit() else 0, k)):
        status, title, detail = ACCEPTANCE[key]
        name = f"criterion {key}" if key.isdigit() else key
        terminalreporter.write_line(f"{status} {name}: {title} | {detail}")
