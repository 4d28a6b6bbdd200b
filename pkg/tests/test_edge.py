from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilb2 import edge, groebner
from hilb2.arrows import positive_significant
from hilb2.errors import NotPositiveSignificant
from hilb2.grading import Grading
from hilb2.poly import Poly
from hilb2.poset import order_gt
from hilb2.staircase import MonomialIdeal, from_partition

M642 = MonomialIdeal([(4, 0), (2, 1), (0, 2)])
SIX = MonomialIdeal([(7, 0), (6, 1), (5, 2), (4, 3), (2, 4), (0, 6)])
partitions = st.lists(st.integers(1, 5), min_size=2, max_size=5).map(
    lambda xs: sorted(xs, reverse=True))


def test_edge_ideal_parameters():
    E = edge.edge_ideal(M642, (1, 3, 0))
    assert (E.k, E.ell, E.m, E.sigma) == (1, 1, -1, 0)
    assert [edge.format_binomial(b, t_symbol=True) for b in E.binomials()] == \
        ["x^4", "x^2*y - t*x^3", "y^2 - t*x*y"]


def test_sigma_six_generators():
    assert edge.sigma_index(SIX, (4, 3, 2)) == 2


def test_rejects_arrow_that_is_not_positive():
    with pytest.raises(NotPositiveSignificant):
        edge.edge_ideal(M642, (1, 1, 1))


def test_syzygy_strings():
    E = edge.edge_ideal(M642, (1, 3, 0))
    assert [edge.syzygy_str(r) for r in edge.syzygies(E)] == \
        ["y*e0 - x^2*e1 - t*x*e0", "y*e1 - x^2*e2"]


def test_lex_initial_ideal_is_independent_of_t():
    for t in (1, 2, Fraction(-1, 3)):
        got = edge.initial_ideal(edge.edge_ideal(M642, (1, 3, 0), t), "lex")
        assert got == MonomialIdeal([(3, 0), (1, 1), (0, 4)])


def test_groebner_basis_is_groebner():
    G = edge.groebner_basis(edge.edge_ideal(SIX, (4, 3, 2), 1), "lex")
    assert groebner.is_groebner(G, "lex")


@given(partitions, st.data())
def test_edge_ideal_properties(parts, data):
    M = from_partition(parts)
    g = Grading.trivial()
    arrows = positive_significant(M, g)
    if not arrows:
        return
    alpha = data.draw(st.sampled_from(arrows))
    E = edge.edge_ideal(M, alpha, 1)
    symbolic = E.generators_symbolic()
    for row in edge.syzygies(E):
        assert not edge.syzygy_row_value(row, symbolic)
    t = data.draw(st.sampled_from([Fraction(1), Fraction(-2), Fraction(1, 3)]))
    assert edge.initial_ideal(edge.edge_ideal(M, alpha, t), "xel") == M
    assert order_gt(edge.initial_ideal(E, "lex"), M, g)


def test_generators_specialize_symbolic_form():
    E = edge.edge_ideal(M642, (1, 3, 0), 5)
    subst = [f.substitute({2: Fraction(5)}) for f in E.generators_symbolic()]
    assert subst == [Poly(f.terms, 2) for f in E.generators()]
