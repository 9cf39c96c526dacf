import networkx as nx
import pytest

from crossnum.graph import Graph, build_gp
from crossnum.solver import decide_cr_le, sample_drawings


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), list(h.edges()))


@pytest.fixture(scope="session")
def p103():
    return build_gp((10, 3))


@pytest.fixture(scope="session")
def p103_cert6(p103):
    d = decide_cr_le(p103, 6)
    assert d.found
    return d.certificate


@pytest.fixture(scope="session")
def p103_pool(p103):
    """A few dozen valid P(10,3) drawings with 6 to 10 crossings."""
    return list(sample_drawings(p103, 40, 6, 10, seed=11))


@pytest.fixture(scope="session")
def small_pool():
    """Drawings of several small non-planar graphs."""
    out = []
    for g, lo in ((from_nx(nx.complete_graph(6)), 3), (build_gp((8, 3)), 4), (from_nx(nx.complete_bipartite_graph(3, 4)), 2)):
        out.extend(sample_drawings(g, 12, lo, lo + 4, seed=3))
    return out


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record and print the one-line verdict of an acceptance criterion."""
    def record(n: int, ok: bool, detail: str) -> bool:
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
        _CRITERIA[n] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[n])
