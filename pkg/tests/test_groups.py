import itertools

import numpy as np
import pytest

from commgraph import catalog
from commgraph.errors import (AbelianGroup, ClosureExceedsCap, EmptyGeneratorSet,
                              SingularGenerator, UnknownGroupName)
from commgraph.groups import (Permutation, center, centralizer, centralizer_census,
                              commuting_graph, cyclic, direct_product,
                              from_matrix_generators, from_permutation_generators, is_ac_group,
                              metacyclic, noncommuting_graph)

NAMES = list(catalog.CATALOG)


def brute_centralizer(G, x):
    return {y for y in range(G.order) if G.mul(x, y) == G.mul(y, x)}


def test_permutation_basics():
    a = Permutation.from_cycles(4, (0, 1, 2, 3))
    b = Permutation.from_cycles(4, (1, 3))
    assert (a * a * a * a) == Permutation.identity(4)
    assert a.inverse() * a == Permutation.identity(4)
    assert a.cycles() == [(0, 1, 2, 3)]
    G = from_permutation_generators([a, b])
    assert G.order == 8 and G.check_axioms()


def test_closure_errors():
    with pytest.raises(EmptyGeneratorSet):
        from_permutation_generators([])
    with pytest.raises(ClosureExceedsCap):
        from_permutation_generators([Permutation.from_cycles(5, (0, 1, 2, 3, 4)),
                                     Permutation.from_cycles(5, (0, 1))], cap=50)
    with pytest.raises(SingularGenerator):
        from_matrix_generators(3, [[[1, 1], [1, 1]]])


def test_matrix_group_gl23():
    G = from_matrix_generators(3, [[[1, 1], [0, 1]], [[0, 1], [2, 0]], [[2, 0], [0, 1]]])
    assert G.order == 48
    assert len(center(G)) == 2


def test_cyclic_and_products():
    Z6 = cyclic(6)
    assert Z6.order == 6 and Z6.is_abelian()
    with pytest.raises(AbelianGroup):
        centralizer_census(Z6)
    D = metacyclic(3, 2, -1)
    P = direct_product(D, cyclic(2))
    assert P.order == 12 and P.check_axioms()
    assert len(center(P)) == 2


def test_metacyclic_rejects_bad_data():
    with pytest.raises(ValueError):
        metacyclic(7, 3, 3)


@pytest.mark.parametrize("name", NAMES)
def test_catalog_orders_and_relations(name):
    e = catalog.entry(name)
    G = catalog.build(name)
    assert G.order == e.expected_order
    assert catalog.verify_relations(name)
    assert len(center(G)) == e.center_size


@pytest.mark.parametrize("name", NAMES)
def test_census_matches_brute_force(name):
    G = catalog.build(name)
    z = {x for x in range(G.order) if len(brute_centralizer(G, x)) == G.order}
    assert center(G) == frozenset(z)
    distinct = {frozenset(brute_centralizer(G, x)) for x in range(G.order) if x not in z}
    counts = {}
    for c in distinct:
        counts[len(c)] = counts.get(len(c), 0) + 1
    assert centralizer_census(G).as_dict() == counts
    assert centralizer_census(G).entries == catalog.entry(name).expected_census


@pytest.mark.parametrize("name", NAMES)
def test_degree_centralizer_identity(name):
    G = catalog.build(name)
    g = commuting_graph(G)
    z = len(center(G))
    for i, x in enumerate(g.labels):
        assert g.degrees[i] == len(centralizer(G, x)) - z - 1


def test_noncommuting_is_complement():
    G = catalog.build("D10")
    c, nc = commuting_graph(G), noncommuting_graph(G)
    assert np.array_equal(c.adj | nc.adj, ~np.eye(c.n, dtype=bool))
    assert not (c.adj & nc.adj).any()


def test_ac_groups():
    assert is_ac_group(catalog.build("D18"))
    assert not is_ac_group(catalog.build("(Z3×Z3)⋊Q8"))


def test_resolve_aliases_and_unknown():
    assert catalog.resolve("gl(2,3)") == "GL(2,3)"
    assert catalog.resolve("GL(2, 3)") == "GL(2,3)"
    with pytest.raises(UnknownGroupName):
        catalog.resolve("Monster")


def test_table_agrees_with_permutation_product():
    G = catalog.build("S4")
    assert G.check_axioms()
    for a, b in itertools.product(range(G.order), repeat=2):
        assert G.table[a, b] == G.index_of(G.elements[a] * G.elements[b])
