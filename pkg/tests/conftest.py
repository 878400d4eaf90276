import pytest

from trifree import corpus
from trifree.plane_graph import embed_edges


@pytest.fixture(scope="session")
def golden():
    return corpus.golden_graphs()


@pytest.fixture(scope="session")
def expectations():
    return corpus.golden_expectations()


@pytest.fixture(scope="session")
def corpus7():
    return corpus.enumerate_small(7)


@pytest.fixture(scope="session")
def corpus8():
    return corpus.enumerate_small(8)


@pytest.fixture(scope="session")
def corpus9():
    return corpus.enumerate_small(9)


@pytest.fixture(scope="session")
def cube():
    return embed_edges(range(1, 9), [(1, 2), (2, 3), (3, 4), (4, 1),
                                     (5, 6), (6, 7), (7, 8), (8, 5),
                                     (1, 5), (2, 6), (3, 7), (4, 8)])


@pytest.fixture(scope="session")
def dodecahedron():
    import networkx as nx
    g = nx.dodecahedral_graph()
    relabel = {v: v + 1 for v in g.nodes}
    return embed_edges(sorted(relabel.values()),
                       [(relabel[a], relabel[b]) for a, b in g.edges])
