import networkx as nx
import numpy as np
import pytest

from commgraph import catalog
from commgraph.errors import MalformedExpression
from commgraph.graphs import (SimpleGraph, ShapeDescriptor, build_shape, canonical_certificate,
                              complement, complete_graph, components, disjoint_union,
                              friendship_graph, graph_d, join, recognize_shape, to_dot)
from commgraph.groups import commuting_graph


def nxg(g: SimpleGraph) -> nx.Graph:
    return nx.from_numpy_array(g.adj.astype(int))


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        SimpleGraph([[1]])
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2)])
    assert g.n == 4 and g.m == 2 and list(g.degrees) == [1, 2, 1, 0]


@pytest.mark.parametrize("expr,n,m", [
    ("K8 + 9*K1", 17, 28),
    ("K8 ⊔ 5K2", 18, 33),
    ("K8 + 9*F3", 71, 109),
    ("3*K6 + 4*K4 + 6*K2", 46, 75),
    ("K1 v 5*K1", 6, 5),
    ("K1 ∨ 3K2", 7, 9),
    ("(K1 v 5*K1) + K3", 9, 8),
    ("D", 9, None),
])
def test_build_shape_sizes(expr, n, m):
    g = build_shape(expr)
    assert g.n == n
    if m is not None:
        assert g.m == m


@pytest.mark.parametrize("bad", ["", "K", "K0", "3*", "K3 +", "(K2", "K2)", "X4", "2*(K1 v"])
def test_malformed(bad):
    with pytest.raises(MalformedExpression):
        build_shape(bad)


def test_friendship_is_join():
    f = friendship_graph(3)
    j = build_shape("K1 v 3*K2")
    assert nx.is_isomorphic(nxg(f), nxg(j))
    assert sorted(f.degrees) == [2] * 6 + [6]


def test_join_and_union_counts():
    a, b = complete_graph(3), build_shape("4*K1")
    u, jn = disjoint_union(a, b), join(a, b)
    assert u.n == jn.n == 7
    assert u.m == 3 and jn.m == 3 + 12
    assert complement(complement(u)).adj.tolist() == u.adj.tolist()


def test_components_against_networkx():
    g = build_shape("K3 + 2*K2 + F2 + 3*K1")
    comps = components(g)
    assert len(comps) == nx.number_connected_components(nxg(g)) == 7
    assert sum(c.n for c in comps) == g.n


def test_graph_d_recognized():
    d = graph_d()
    assert d.n == 9
    assert recognize_shape(d).expression() == "D"
    # any relabelling of D is still D
    perm = np.random.default_rng(1).permutation(9)
    shuffled = SimpleGraph(d.adj[np.ix_(perm, perm)])
    assert recognize_shape(shuffled).expression() == "D"


def test_certificate_is_invariant():
    g = build_shape("K1 v (K2 + K1)")
    perm = [3, 0, 2, 1]
    h = SimpleGraph(g.adj[np.ix_(perm, perm)])
    assert canonical_certificate(g) == canonical_certificate(h)
    assert recognize_shape(g) == recognize_shape(h)
    assert not recognize_shape(g).is_fully_recognized()


def test_shape_roundtrip_examples():
    for expr in ("K8 + 9*F3", "3*K6 + 4*K4 + 6*K2", "7*K2 + D", "K6 + 7*K1"):
        s = ShapeDescriptor.from_expression(expr)
        assert s.expression() == expr
        assert ShapeDescriptor.from_expression(s.expression()) == s


@pytest.mark.parametrize("name", ["D18", "(Z3×Z3)⋊Q8", "GL(2,3)", "A5", "Sz(2)"])
def test_group_shapes(name):
    g = commuting_graph(catalog.build(name))
    assert recognize_shape(g).expression() == catalog.entry(name).expected_shape


def test_s4_has_no_shape_expression_in_the_named_family():
    shape = recognize_shape(commuting_graph(catalog.build("S4")))
    assert ("K", 2) in dict(shape.components)
    assert not shape.is_fully_recognized()


def test_to_dot():
    text = to_dot(build_shape("K2 + K1"), "my graph")
    assert text.startswith("graph my_graph {")
    assert "0 -- 1;" in text
    assert text.count("fillcolor") == 3
