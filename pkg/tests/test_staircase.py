from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilb2.grading import Grading
from hilb2.staircase import (
    FactorSpace,
    HilbertFunction,
    MonomialIdeal,
    classify_principal_factor,
    factor_gcd,
    from_partition,
    hilbert_function,
    lex_count,
    lex_sorted_by_degree,
)

partitions = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(
    lambda xs: sorted(xs, reverse=True))


def test_generators_are_minimal_and_sorted():
    M = MonomialIdeal([(0, 2), (4, 0), (2, 1), (4, 1), (3, 3)])
    assert M.gens == ((4, 0), (2, 1), (0, 2))
    assert (M.n, M.p(1), M.q(1)) == (2, 2, 1)
    assert str(M) == "<x^4,x^2*y,y^2>"


def test_standard_monomials_and_membership():
    M = MonomialIdeal([(4, 0), (2, 1), (0, 2)])
    assert M.colength == 6
    assert set(M.standard_monomials) == {(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1)}
    assert (2, 1) in M and (1, 1) not in M


def test_from_partition_rows():
    M = from_partition([4, 2])
    assert M == MonomialIdeal([(4, 0), (2, 1), (0, 2)])
    assert M.row_lengths == (4, 2)


def test_zero_ideal_rejected():
    with pytest.raises(ValueError):
        MonomialIdeal([])


def test_hilbert_function_cyclic_three():
    g = Grading.cyclic(3, 1, 1)
    h = hilbert_function(MonomialIdeal([(5, 0), (1, 1), (0, 2)]), g)
    assert [k for _, k in h.entries] == [2, 3, 1]


def test_hilbert_function_json_round_trip():
    g = Grading.cyclic(3, 1, 1)
    h = hilbert_function(MonomialIdeal([(5, 0), (1, 1), (0, 2)]), g)
    assert HilbertFunction.from_json(h.to_json()) == h
    assert HilbertFunction(h.as_dict()) == h


def test_factor_gcd_and_principal_factor():
    M = MonomialIdeal([(4, 3), (3, 4), (2, 5)])
    assert factor_gcd(M) == ((2, 3), MonomialIdeal([(2, 0), (1, 1), (0, 2)]))
    g = Grading.integral(1, -1)
    assert classify_principal_factor(2, 3, g) == FactorSpace("affine", 2)
    assert str(classify_principal_factor(2, 3, g)) == "A^2"


def test_principal_factor_projective():
    # x^2, x y^... : degree 4 with deg x = 1, deg y = 2 has x^4, x^2 y, y^2
    assert classify_principal_factor(4, 0, Grading.integral(1, 2)) == FactorSpace("projective", 2)


def test_lex_count():
    g = Grading.trivial()
    M = MonomialIdeal([(2, 0), (0, 2)])
    group = lex_sorted_by_degree(M, g)[g.zero()]
    assert group == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert lex_count(group, (1, 0)) == 3


@given(partitions)
def test_partition_round_trip(parts):
    M = from_partition(parts)
    assert M.is_finite_colength
    assert M.colength == sum(parts)
    assert list(M.row_lengths) == parts


@given(partitions)
def test_hilbert_total_is_colength(parts):
    M = from_partition(parts)
    h = hilbert_function(M, Grading.cyclic(3, 1, 1))
    assert h.total == M.colength
