from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lozenge.closed_forms import (
    AxisProblem,
    AxisSet,
    HexagonShape,
    ParameterError,
    axis_sum,
    conjecture_count,
    fixed_rhombus_count,
    lemma_simple_rhs,
    macmahon_count,
    p_closed_form,
    proportion,
)
from lozenge.exact import Polynomial, pochhammer_poly

axis = st.integers(1, 7).flatmap(
    lambda N: st.tuples(st.just(N), st.integers(1, 6), st.integers(1, N), st.sampled_from(["even", "odd"])))


def test_macmahon_values():
    assert macmahon_count(HexagonShape(0, 3, 3)) == 1
    assert macmahon_count(HexagonShape(1, 1, 1)) == 2
    assert macmahon_count(HexagonShape(2, 2, 2)) == 20
    assert macmahon_count(HexagonShape(3, 3, 3)) == 980
    assert macmahon_count(HexagonShape(4, 4, 2)) == 1764
    assert macmahon_count(HexagonShape(5, 5, 5)) == 267227532


def test_fixed_rhombus_counts():
    assert fixed_rhombus_count(AxisProblem(2, 1, 1)) == 8
    assert fixed_rhombus_count(AxisProblem(2, 1, 2)) == 8
    assert fixed_rhombus_count(AxisProblem(2, 1, 1, "odd")) == 8
    assert fixed_rhombus_count(AxisProblem(1, 0, 1)) == 1
    assert [fixed_rhombus_count(AxisProblem(3, 2, l)) for l in (1, 2, 3)] == [1176, 1372, 1176]
    assert [fixed_rhombus_count(AxisProblem(4, 2, l, "odd")) for l in (1, 2, 3, 4)] == [
        221760, 272448, 272448, 221760]


def test_m_zero_is_one_tiling():
    for N in range(1, 6):
        for l in range(1, N + 1):
            assert fixed_rhombus_count(AxisProblem(N, 0, l)) == 1


def test_parameter_errors():
    with pytest.raises(ParameterError, match="l out of range"):
        AxisProblem(2, 1, 3)
    with pytest.raises(ParameterError):
        AxisProblem(2, 0, 1, "odd")
    with pytest.raises(ParameterError):
        AxisProblem(2, 1, 1, "weird")
    with pytest.raises(ParameterError):
        AxisSet(3, 1, ())
    with pytest.raises(ParameterError):
        HexagonShape(-1, 2, 2)
    with pytest.raises(ParameterError):
        conjecture_count("skip2", 2, 1, 1)


def test_axis_sum_and_proportion():
    assert axis_sum(3, 2, 2) == Fraction(7, 20)
    assert proportion(AxisProblem(2, 1, 1)) == Fraction(2, 5)
    assert proportion(AxisProblem(1, 1, 1)) == Fraction(1, 3)
    assert proportion(AxisProblem(3, 2, 2)) == Fraction(1, 3)


def test_lemma_simple_rhs_values():
    assert lemma_simple_rhs(0, 4) == 1
    assert lemma_simple_rhs(1, 1) == 2
    assert lemma_simple_rhs(2, 1) == 5
    assert lemma_simple_rhs(3, 3) == 330


def test_p_closed_form_values():
    assert p_closed_form(1, 1) == Polynomial([1])
    assert p_closed_form(2, 1) == Polynomial([3, 3])
    assert p_closed_form(3, 1) == Polynomial([60, 90, 30])
    assert p_closed_form(4, 2) == Polynomial([10080, 22320, 12960, 2160])


def test_p_closed_form_degree_and_factor():
    for N in range(1, 8):
        for l in range(1, N + 1):
            P = p_closed_form(N, l)
            assert P.degree <= N - 1
            if N - 2 * l + 1 >= 0:
                assert pochhammer_poly(l, N - 2 * l + 1).divides(P)


def test_conjecture_spot_values():
    assert conjecture_count("consecutive", 2, 1, 1) == 8
    assert conjecture_count("consecutive", 2, 1, 2) == 4
    assert conjecture_count("skip1", 2, 1, 1) == 8
    assert conjecture_count("skip2", 3, 1, 1) == 75
    assert [conjecture_count("consecutive", 4, m, 3) for m in (1, 2, 3)] == [336, 16800, 330000]


@pytest.mark.parametrize("pattern,l", [("consecutive", 1), ("skip1", 2), ("skip2", 3)])
def test_conjecture_r1_reduces_to_single_rhombus(pattern, l):
    for parity in ("even", "odd"):
        for N in range(l, 7):
            for m in range(1, 4):
                assert conjecture_count(pattern, N, m, 1, parity) == fixed_rhombus_count(AxisProblem(N, m, l, parity))


@settings(max_examples=60)
@given(axis)
def test_count_properties(args):
    N, m, l, parity = args
    p = AxisProblem(N, m, l, parity)
    c = fixed_rhombus_count(p)
    assert 0 <= c <= macmahon_count(p.shape)
    assert c == fixed_rhombus_count(AxisProblem(N, m, N + 1 - l, parity))
    assert proportion(AxisProblem(N, m, l, "even")) == proportion(AxisProblem(N, m, l, "odd"))


@settings(max_examples=40)
@given(axis)
def test_sum_over_positions_is_bounded(args):
    N, m, _, parity = args
    total = sum(fixed_rhombus_count(AxisProblem(N, m, l, parity)) for l in range(1, N + 1))
    assert 0 <= total <= N * macmahon_count(AxisProblem(N, m, 1, parity).shape)
