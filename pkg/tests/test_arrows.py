from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from hilb2.arrows import (
    ArrowClass,
    all_arrows,
    arrows_json,
    find_arrow,
    insignificant,
    positive_significant,
    significant,
)
from hilb2.grading import Grading
from hilb2.staircase import MonomialIdeal, from_partition

M642 = MonomialIdeal([(4, 0), (2, 1), (0, 2)])
partitions = st.lists(st.integers(1, 5), min_size=1, max_size=5).map(
    lambda xs: sorted(xs, reverse=True))


def test_arrow_count_is_generators_times_colength_at_zero_grading():
    assert len(all_arrows(M642, Grading.trivial())) == 3 * 6


def test_insignificant_arrows():
    keys = {a.key for a in insignificant(M642, Grading.trivial())}
    assert keys == {(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)}


def test_classification_examples():
    g = Grading.trivial()
    assert find_arrow(M642, g, 1, 3, 0).cls is ArrowClass.POSITIVE
    assert find_arrow(M642, g, 1, 2, 0).cls is ArrowClass.NONNEG
    assert find_arrow(M642, g, 1, 1, 1).cls is ArrowClass.NONPOS
    assert find_arrow(M642, g, 1, 1, 0).cls is ArrowClass.UTTERLY
    assert find_arrow(M642, g, 1, 2, 1) is None


def test_graded_arrows_respect_degree():
    g = Grading.cyclic(3, 1, 1)
    M = MonomialIdeal([(5, 0), (1, 1), (0, 2)])
    for a in all_arrows(M, g):
        assert g.degree_of(a.u, a.v) == g.degree_of(*M.gens[a.i])
    assert positive_significant(M, g)


def test_arrows_json_counts():
    data = arrows_json(all_arrows(M642, Grading.trivial()))
    assert data["counts"]["total"] == 18
    assert data["counts"]["significant"] == 12


@given(partitions)
def test_zero_grading_has_two_n_significant_arrows(parts):
    M = from_partition(parts)
    assert len(significant(M, Grading.trivial())) == 2 * M.colength


@given(partitions)
def test_lex_type_ideal_has_no_positive_arrows_only_if_lex_segment(parts):
    M = from_partition(parts)
    # at the zero grading the maximum is <x, y^n>
    is_top = M == MonomialIdeal([(1, 0), (0, M.colength)])
    assert is_top == (not positive_significant(M, Grading.trivial()))
