from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilb2 import tangent
from hilb2.arrows import positive_significant, significant
from hilb2.errors import NotPositiveSignificant, PreconditionViolated
from hilb2.grading import Grading
from hilb2.staircase import MonomialIdeal, from_partition

A0 = Grading.trivial()
M642 = MonomialIdeal([(4, 0), (2, 1), (0, 2)])
SIX = MonomialIdeal([(7, 0), (6, 1), (5, 2), (4, 3), (2, 4), (0, 6)])
partitions = st.lists(st.integers(1, 4), min_size=2, max_size=4).map(
    lambda xs: sorted(xs, reverse=True))


def test_displayed_equations():
    T = tangent.build_system(M642, A0, (1, 3, 0))
    assert T.equation(1, 1, 0).terms == {(0, 0, 0): (0, -1)}
    assert T.equation(2, 3, 0).terms == {(1, 2, 0): (0, 1), (1, 1, 1): (0, 0, 1),
                                         (2, 1, 0): (-1,), (2, 0, 1): (0, -1)}
    assert T.equation(1, 0, 0).terms == {}


def test_equation_string_form():
    T = tangent.build_system(M642, A0, (1, 3, 0))
    assert T.equation(1, 1, 0).to_str() == "-t*c[0][0][0]"


def test_b_value_chain():
    assert tangent.b_value(M642, (1, 3, 0), 3, 0) == 3
    assert tangent.b_value(M642, (1, 3, 0), 0, 0) == 0


def test_b_value_rejects_points_of_the_ideal():
    with pytest.raises(PreconditionViolated):
        tangent.b_value(M642, (1, 3, 0), 4, 0)


def test_six_generator_system():
    T = tangent.build_system(SIX, A0, (4, 3, 2))
    assert len(T.equations) == 5 * 26
    assert T.equation(4, 2, 3).terms == {(3, 2, 2): (1,), (4, 0, 3): (-1,), (2, 2, 3): (0, -1)}


def test_monomial_system_dimension():
    assert tangent.tangent_dimension(M642, A0) == 12
    assert tangent.tangent_dimension(MonomialIdeal([(1, 0), (0, 1)]), A0) == 2


def test_no_arrows_gives_empty_system():
    g = Grading.integral(1, 1)
    M = MonomialIdeal([(1, 0), (0, 1)])
    T = tangent.build_system(M, g)
    assert (T.r, T.rank(), T.dimension()) == (0, 0, 0)
    assert tangent.reduced_system(T).equations == ()
    assert tangent.oracle_dimension(M, g) == 0


def test_oracle_on_square():
    assert tangent.oracle_dimension(from_partition([2, 1]), A0, t=0) == 6


def test_system_rejects_bad_arrow():
    with pytest.raises(NotPositiveSignificant):
        tangent.build_system(M642, A0, (1, 1, 1))


def test_relation_precondition():
    T = tangent.build_system(M642, A0, (1, 3, 0))
    with pytest.raises(PreconditionViolated):
        tangent.relation_terms(T, 1, 3, 1)


def test_reduced_system_labels():
    T = tangent.build_system(M642, A0, (1, 3, 0))
    labels = sorted(e.label for e in tangent.reduced_system(T).equations)
    assert labels == sorted([(1, 0, 1), (1, 1, 1), (2, 2, 0), (2, 3, 0), (2, 0, 1), (2, 1, 1)])


def test_json_dump_shape():
    data = tangent.build_system(M642, A0, (1, 3, 0)).to_json()
    assert len(data["variables"]) == 18
    eq = next(e for e in data["equations"] if e["label"] == [1, 1, 0])
    assert eq["terms"] == [{"var": [0, 0, 0], "coeff_t_poly": [0, -1]}]


def test_graded_edge_dimension():
    g = Grading.cyclic(3, 1, 1)
    M = MonomialIdeal([(5, 0), (1, 1), (0, 2)])
    alpha = positive_significant(M, g)[0]
    report = tangent.dimension_report(M, g, alpha)
    assert report.consistent
    assert report.dimension == len(significant(M, g))


@given(partitions, st.data())
def test_three_way_agreement_and_relations(parts, data):
    M = from_partition(parts)
    arrows = positive_significant(M, A0)
    if not arrows:
        return
    alpha = data.draw(st.sampled_from(arrows))
    report = tangent.dimension_report(M, A0, alpha, ts=(0, 1))
    assert report.consistent
    assert report.dimension == 2 * M.colength
    T = tangent.build_system(M, A0, alpha)
    for label in tangent.relation_instances(M):
        assert tangent.relation_residual(T, *label) == {}
    tangent.check_leading_variables(T)


@given(partitions, st.data())
def test_b_value_is_bounded_by_chain_length(parts, data):
    M = from_partition(parts)
    arrows = positive_significant(M, A0)
    if not arrows:
        return
    alpha = data.draw(st.sampled_from(arrows))
    u, v = data.draw(st.sampled_from(M.standard_monomials))
    ell = alpha.u - M.p(alpha.i)
    assert 0 <= tangent.b_value(M, alpha, u, v) <= u // ell
