from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilb2 import poset
from hilb2.errors import HilbertFunctionMismatch, NotAHilbertFunction
from hilb2.grading import DegreeValue, Grading
from hilb2.instances import random_instances, trivial_hilbert
from hilb2.staircase import (
    HilbertFunction,
    MonomialIdeal,
    from_partition,
    hilbert_function,
)

Z3 = Grading.cyclic(3, 1, 1)


def degree_one_example():
    g = Grading.integral(1, 1)
    return g, HilbertFunction({DegreeValue((d,), ()): k for d, k in enumerate([1, 2, 2, 1])})


def brute_force_hasse(P):
    G = nx.DiGraph()
    n = len(P.elements)
    G.add_nodes_from(range(n))
    G.add_edges_from((b, a) for a in range(n) for b in range(n) if a != b and P.relations[a][b])
    return sorted(nx.transitive_reduction(G).edges())


def test_partition_counts():
    assert [sum(1 for _ in poset.partitions(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_degree_one_poset_has_six_elements():
    g, h = degree_one_example()
    P = poset.build_poset(h, g)
    assert len(P.elements) == 6
    assert P.hasse_edges == tuple(brute_force_hasse(P))


def test_order_is_a_partial_order():
    g, h = degree_one_example()
    P = poset.build_poset(h, g)
    n = len(P.elements)
    R = P.relations
    for a in range(n):
        assert R[a][a]
        for b in range(n):
            if a != b:
                assert not (R[a][b] and R[b][a])
            for c in range(n):
                if R[a][b] and R[b][c]:
                    assert R[a][c]


def test_order_rejects_mismatched_hilbert_functions():
    g = Grading.trivial()
    with pytest.raises(HilbertFunctionMismatch):
        poset.order_geq(from_partition([2]), from_partition([1]), g)


def test_cyclic_three_poset():
    h = hilbert_function(MonomialIdeal([(5, 0), (1, 1), (0, 2)]), Z3)
    P = poset.build_poset(h, Z3)
    assert set(P.elements) == {MonomialIdeal([(5, 0), (1, 1), (0, 2)]),
                               MonomialIdeal([(2, 0), (1, 1), (0, 5)])}
    assert poset.lex_most_of(P) == MonomialIdeal([(2, 0), (1, 1), (0, 5)])


def test_lex_most_zero_grading():
    assert poset.lex_most(trivial_hilbert(5), Grading.trivial()) == MonomialIdeal([(1, 0), (0, 5)])


def test_lex_most_rejects_impossible_hilbert_function():
    h = HilbertFunction({DegreeValue((), (1,)): 2})
    with pytest.raises(NotAHilbertFunction):
        poset.lex_most(h, Z3)


def test_dot_output():
    g, h = degree_one_example()
    dot = poset.to_dot(poset.build_poset(h, g))
    assert dot.startswith("digraph poset {")
    assert dot.count("[label=") == 6
    assert dot.isascii()


def test_poset_json_is_plain_data():
    g, h = degree_one_example()
    data = poset.build_poset(h, g).to_json()
    assert len(data["elements"]) == 6
    assert HilbertFunction.from_json(data["hilbert"]) == h
    assert Grading.from_json(data["grading"]) == g


def test_chain_from_bottom_reaches_top():
    g = Grading.trivial()
    steps = poset.chain_to_lexmost(MonomialIdeal([(3, 0), (0, 1)]), g)
    assert steps[-1].target == MonomialIdeal([(1, 0), (0, 3)])


def test_hasse_matches_transitive_reduction_on_random_gradings():
    for g, h in random_instances(8):
        P = poset.build_poset(h, g)
        assert list(P.hasse_edges) == brute_force_hasse(P)


@given(st.integers(1, 6), st.integers(0, 2), st.integers(1, 2))
def test_lex_most_is_maximum_for_cyclic_gradings(n, dy, m):
    g = Grading.cyclic(m + 1, 1, dy % (m + 1))
    parts = list(poset.partitions(n))
    h = hilbert_function(from_partition(parts[len(parts) // 2]), g)
    P = poset.build_poset(h, g)
    top = poset.lex_most_of(P)
    i = P.elements.index(top)
    assert all(P.relations[i][j] for j in range(len(P.elements)))
