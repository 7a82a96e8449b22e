import pytest
from hypothesis import strategies as st

from mssc.hypergraph import Hypergraph


@st.composite
def hypergraphs(draw, max_n=7, max_m=12, max_rank=3, min_m=0):
    n = draw(st.integers(1, max_n))
    edge = st.frozensets(st.integers(1, n), min_size=1, max_size=min(max_rank, n))
    edges = draw(st.lists(edge, min_size=min_m, max_size=max_m, unique=True))
    return Hypergraph(n, edges)


@st.composite
def hypergraph_with_ordering(draw, **kwargs):
    H = draw(hypergraphs(**kwargs))
    sigma = draw(st.permutations(list(H.vertices)))
    return H, tuple(sigma)


K3_EDGES = [(1, 2), (1, 3), (2, 3)]


_ACCEPTANCE = None


@pytest.fixture(scope="session")
def acceptance():
    global _ACCEPTANCE
    from mssc.acceptance import AcceptanceContext

    if _ACCEPTANCE is None:
        _ACCEPTANCE = AcceptanceContext()
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE is None or not _ACCEPTANCE.done:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE.done):
        terminalreporter.write_line(_ACCEPTANCE.done[number].line())
