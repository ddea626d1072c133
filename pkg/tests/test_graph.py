import pytest

from mvrcg import (MixedGraph, ancestors, anteriors, districts, induced_subgraph,
                   relatives, validate_chain_graph)
from mvrcg.enumeration import enumerate_mixed_graphs, enumerate_mvr_cgs
from mvrcg.errors import GraphFormatError

from oracles import oracle_ancestors

TEXT = """\
# toy graph
vertex a
vertex b
vertex c
a -> b
b <-> c
"""


def test_parse_round_trip():
    g = MixedGraph.from_text(TEXT)
    assert g.n == 3
    assert g.directed == {(0, 1)}
    assert g.bidirected == {(1, 2)}
    assert MixedGraph.from_text(g.to_text()) == g


def test_parse_labels_and_edges():
    g = MixedGraph.from_text(TEXT)
    assert g.labels == ("a", "b", "c")
    assert g.index_of("c") == 2
    assert g.edge_between(0, 1) == "->"
    assert g.edge_between(1, 0) == "<-"
    assert g.edge_between(1, 2) == "<->"
    assert g.edge_between(0, 2) is None


@pytest.mark.parametrize("bad", [
    "vertex a\na -> a",                       # self loop
    "vertex a\nvertex a",                     # duplicate label
    "vertex a\nvertex b\na -> b\na <-> b",    # two edges on one pair
    "vertex a\nvertex b\na -> b\nb -> a",     # two edges on one pair
    "vertex a\nvertex b\na - b",              # undirected edges unsupported
    "vertex a\na -> b",                       # undeclared vertex
    "vertex a b",                             # malformed declaration
])
def test_parse_rejects(bad):
    with pytest.raises(GraphFormatError):
        MixedGraph.from_text(bad)


def test_dot_export_uses_dir_both():
    g = MixedGraph.from_text(TEXT)
    dot = g.to_dot()
    assert "n0 -> n1;" in dot
    assert "n1 -> n2 [dir=both];" in dot
    assert 'label="a"' in dot


def test_ancestors_reflexive_and_transitive():
    g = MixedGraph(1)
    assert ancestors(g, [0]) == {0}
    chain = MixedGraph(3, directed=[(0, 1), (1, 2)])
    assert ancestors(chain, [2]) == {0, 1, 2}


def test_bidirected_edges_do_not_contribute_ancestors():
    g = MixedGraph(3, bidirected=[(0, 1)], directed=[(1, 2)])
    assert ancestors(g, [2]) == {1, 2}


def test_ancestors_against_oracle_exhaustive():
    for g in enumerate_mixed_graphs(3):
        for seed in range(1, 8):
            xs = {v for v in range(3) if seed >> v & 1}
            assert ancestors(g, xs) == oracle_ancestors(g.n, g.directed, xs)


def test_anteriors_equal_ancestors_exhaustive():
    # no undirected edges exist, so the two closures must coincide
    for g in enumerate_mvr_cgs(4):
        for seed in (1, 2, 4, 8, 3, 10, 15):
            xs = {v for v in range(4) if seed >> v & 1}
            assert anteriors(g, xs) == ancestors(g, xs)


def test_anteriors_trivial():
    assert anteriors(MixedGraph(1), [0]) == {0}
    g = MixedGraph(2, directed=[(0, 1)])
    assert anteriors(g, [1]) == {0, 1}


def test_relatives_single_vertex():
    g = MixedGraph(1)
    r = relatives(g, 0)
    assert r.pa == r.nb == r.bd == r.nd == set()
    assert r.de == {0}
    assert r.dis == {0}


def test_relatives_mixed():
    g = MixedGraph(3, directed=[(0, 1)], bidirected=[(1, 2)])
    r = relatives(g, 1)
    assert r.bd == {0, 2}
    assert r.dis == {1, 2}
    assert r.nd == {0, 2}
    assert r.de == {1}


def test_relatives_pst_needs_decomposition():
    g = MixedGraph(3, directed=[(0, 1)], bidirected=[(1, 2)])
    assert relatives(g, 1).pst is None
    dec = validate_chain_graph(g)
    assert relatives(g, 1, dec).pst == {0}  # {0} is ordered after {1,2}


def test_induced_subgraph():
    g = MixedGraph(3, directed=[(0, 1)], bidirected=[(1, 2)])
    sub = induced_subgraph(g, [1, 2])
    assert sub.n == 2
    assert sub.directed == frozenset()
    assert sub.bidirected == {(0, 1)}
    assert sub.source_ids == (1, 2)
    assert induced_subgraph(g, range(3)) == g
    assert induced_subgraph(g, []).n == 0


def test_districts_partition_and_match_components():
    for g in enumerate_mvr_cgs(4):
        ds = districts(g)
        union = set().union(*ds) if ds else set()
        assert union == set(range(4))
        assert sum(len(d) for d in ds) == 4
        comps = validate_chain_graph(g).components
        assert set(ds) == set(comps)
