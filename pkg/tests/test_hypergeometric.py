from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lozenge.closed_forms import AxisProblem, ParameterError, fixed_rhombus_count, macmahon_count, proportion
from lozenge.hypergeometric import (
    SeriesSpec,
    ZeroDenominatorError,
    bailey_form,
    check_bailey_special,
    check_chu_vandermonde,
    check_column_relations,
    check_contiguous,
    check_symmetry_series,
    check_whipple_special,
    hyp,
    terminating_sum,
)

small_q = st.fractions(min_value=-12, max_value=12, max_denominator=7)


def test_terminating_sum_examples():
    assert terminating_sum(SeriesSpec((), (), 1, 0)) == 1
    assert hyp((1, -2), (3,)) == Fraction(1, 2)
    assert hyp((Fraction(5, 3), 0), (Fraction(7, 2),), 3) == 1
    assert hyp((1, 1), (2,), Fraction(1, 2), truncation=2) == 1 + Fraction(1, 4) + Fraction(1, 12)


def test_terminating_sum_errors():
    with pytest.raises(ZeroDenominatorError):
        hyp((1, -3), (-1,))
    with pytest.raises(ParameterError):
        SeriesSpec((1, 2), (3,))


def test_chu_vandermonde_examples():
    assert check_chu_vandermonde(1, 3, 2).passed
    assert check_chu_vandermonde(Fraction(2, 7), Fraction(-5, 3), 0).passed
    assert check_chu_vandermonde(Fraction(1, 2), Fraction(5, 2), 3).passed


@settings(max_examples=80)
@given(small_q, small_q, st.integers(0, 7))
def test_chu_vandermonde_property(a, c, n):
    from lozenge.exact import pochhammer
    if pochhammer(c, n) == 0:
        return
    assert check_chu_vandermonde(a, c, n).passed


def test_contiguous_examples():
    assert check_contiguous(Fraction(5, 2), -2, Fraction(1, 2), 3, Fraction(7, 2)).passed
    assert check_contiguous(Fraction(1, 3), 0, Fraction(1, 2), 3, Fraction(7, 2)).passed
    assert check_symmetry_series(3, 2, 1, 2).passed


@settings(max_examples=80)
@given(small_q, st.integers(0, 6), small_q, small_q.filter(lambda b: b > 0), small_q.filter(lambda b: b > 0))
def test_contiguous_property(a, n, A2, B1, B2):
    assert check_contiguous(a, -n, A2, B1, B2).passed


def test_symmetry_series_grid():
    for N in range(1, 6):
        for m in range(1, 4):
            for i in range(1, N + 1):
                for j in range(2, N + 1):
                    try:
                        rep = check_symmetry_series(N, m, i, j)
                    except ParameterError:
                        continue
                    assert rep.passed, rep.failures


def test_whipple_and_bailey_examples():
    for args in [(3, 2, 1), (3, 2, 2), (4, 1, 3), (1, 1, 1)]:
        assert check_whipple_special(*args).passed
        assert check_bailey_special(*args).passed
    assert bailey_form(2, 1, 1) == Fraction(2, 5)
    assert bailey_form(1, 1, 1) == Fraction(1, 3)
    assert bailey_form(3, 2, 2) == proportion(AxisProblem(3, 2, 2))


def test_three_routes_to_proportion():
    for N in range(1, 6):
        for m in range(1, 4):
            for l in range(1, N + 1):
                p = AxisProblem(N, m, l)
                assert bailey_form(N, m, l) == proportion(p) == Fraction(fixed_rhombus_count(p), macmahon_count(p.shape))


def test_column_relations_examples():
    assert check_column_relations(4, 1, 1, 1).passed
    assert check_column_relations(5, 2, 1, 1).passed
    assert check_column_relations(2, 1, m_samples=(1,)).passed
    with pytest.raises(ParameterError):
        check_column_relations(4, 3, 1, 1)
