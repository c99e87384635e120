import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lozenge.closed_forms import forced_factor_poly, lemma_complex_rhs, lemma_simple_rhs, p_closed_form, row_scale
from lozenge.determinants import (
    ProductDetInput,
    ParamMatrixSpec,
    RationalMatrix,
    build_D,
    build_complex_matrix,
    build_simple_matrix,
    column_operated_D,
    det_D_degree_bound,
    det_cofactor,
    det_exact,
    product_det_specialization,
    product_det_specialization_value,
    product_det_formula,
    product_matrix,
    lincomb_vector,
    p_at_minus_e,
    reconstruct_detD_polynomial,
    reconstruct_P,
    reflection_matrix,
    verify_block_decomposition,
)
from lozenge.exact import Polynomial

small_q = st.fractions(min_value=-9, max_value=9, max_denominator=5)
square = st.integers(0, 5).flatmap(lambda n: st.lists(st.lists(small_q, min_size=n, max_size=n), min_size=n, max_size=n))


def test_det_basics():
    assert det_exact(RationalMatrix([], 0)) == 1
    assert det_exact(RationalMatrix([[3]])) == 3
    assert det_exact(RationalMatrix([[1, 2], [3, 4]])) == -2
    assert det_exact(RationalMatrix([[0, 1], [1, 0]])) == -1
    assert det_exact(RationalMatrix([[1, 2], [2, 4]])) == 0
    with pytest.raises(ValueError):
        det_exact(RationalMatrix([[1, 2]]))


@settings(max_examples=80)
@given(square)
def test_bareiss_matches_cofactor(rows):
    M = RationalMatrix(rows, len(rows))
    assert det_exact(M) == det_cofactor(M)


@settings(max_examples=40)
@given(square, square)
def test_det_multiplicative(a, b):
    n = min(len(a), len(b))
    A = RationalMatrix([r[:n] for r in a[:n]], n)
    B = RationalMatrix([r[:n] for r in b[:n]], n)
    assert det_exact(A @ B) == det_exact(A) * det_exact(B)


def test_path_determinant_spot_values():
    assert det_exact(build_simple_matrix(0, 5)) == 1
    assert det_exact(build_simple_matrix(1, 1)) == 2
    assert det_exact(build_simple_matrix(2, 1)) == 5
    assert det_exact(build_complex_matrix(2, 1, (1,))) == 2
    assert det_exact(build_complex_matrix(2, 1, (1, 2))) == 2
    assert det_exact(build_complex_matrix(3, 2, (2,))) == lemma_complex_rhs(3, 2, 2) == Fraction(49, 2)
    assert lemma_simple_rhs(3, 3) == det_exact(build_simple_matrix(3, 3))


def test_D_polynomial_and_P():
    d = reconstruct_detD_polynomial(2, 1)
    assert d == Polynomial([3, 6, 3])
    assert det_exact(build_D(ParamMatrixSpec(2, 1), -3)) == 12
    assert reconstruct_P(1, 1) == Polynomial([1])
    assert reconstruct_P(2, 1) == Polynomial([3, 3])
    assert reconstruct_P(3, 1) == Polynomial([60, 90, 30])
    assert reconstruct_detD_polynomial(3, 2).degree <= det_D_degree_bound(3)


def test_P_matches_closed_form():
    for N in range(1, 6):
        for l in range(1, N + 1):
            assert reconstruct_P(N, l) == p_closed_form(N, l)


def test_scaling_link():
    for N in range(1, 5):
        for l in range(1, N + 1):
            d = reconstruct_detD_polynomial(N, l)
            for m in range(1, 4):
                assert det_exact(build_complex_matrix(N, m, (l,))) == d(m) * row_scale(N, m)


def test_P_sign_symmetry():
    # P(-N-m) = (-1)^(N+1) P(m)
    for N in range(1, 6):
        for l in range(1, N + 1):
            P = reconstruct_P(N, l)
            assert P.compose_affine(-1, -N) == P * (-1) ** (N + 1)


def test_reflection_matrix_det():
    for N in range(1, 7):
        assert det_exact(reflection_matrix(N)) == (-1) ** (N * (N + 1) // 2)


@pytest.mark.parametrize("m", [1, Fraction(7, 3), Fraction(-5, 2)])
def test_D1_times_column_factor(m):
    for N in range(2, 7):
        for e in range(1, N // 2 + 1):
            for l in range(e + 1, N + 1):
                op = column_operated_D(N, l, e, m)
                d1 = build_D(ParamMatrixSpec(N, l, "D1", e), m)
                for i in range(1, N + 1):
                    for j in range(1, N + 1):
                        scale = m + e if N - 2 * e < j <= N - e else 1
                        assert op[i, j] == scale * d1[i, j]


def test_block_decomposition_examples():
    b = verify_block_decomposition(3, 3, 1)
    assert b.ok and det_exact(b.D1) == 0
    b = verify_block_decomposition(3, 2, 1)
    assert b.ok and det_exact(b.D1) == -6
    b = verify_block_decomposition(2, 2, 0)
    assert b.ok and b.Q2 == b.D1
    with pytest.raises(ValueError):
        verify_block_decomposition(4, 1, 1)


def test_block_decomposition_grid():
    for N in range(1, 7):
        for l in range((N + 2) // 2, N + 1):
            for e in range(N // 2 + 1):
                assert verify_block_decomposition(N, l, e).ok, (N, l, e)
                assert p_at_minus_e(N, l, e) == reconstruct_P(N, l)(-e)


def test_product_determinant_examples():
    assert product_det_formula(ProductDetInput(0, (), (), ())) == 1
    assert product_det_formula(ProductDetInput(1, (Fraction(4),), (), ())) == 1
    inp = ProductDetInput(2, (1, 2), (0,), (5,))
    assert product_det_formula(inp) == -5 == det_exact(product_matrix(inp))
    assert product_det_formula(product_det_specialization(4, 2)) == product_det_specialization_value(2) == Fraction(1, 2)


def test_product_determinant_random():
    rng = random.Random(7)
    for n in range(5):
        for _ in range(5):
            q = lambda: Fraction(rng.randint(-30, 30), rng.randint(1, 7))
            inp = ProductDetInput(n, tuple(q() for _ in range(n)), tuple(q() for _ in range(n - 1)),
                                  tuple(q() for _ in range(n - 1)))
            assert det_exact(product_matrix(inp)) == product_det_formula(inp)


def test_column_combination_vanishes():
    assert all(v == 0 for v in lincomb_vector(4, 1, 1, 1))
    assert all(v == 0 for v in lincomb_vector(5, 2, 1, 1))


def test_forced_factors_divide_det_D():
    for N in range(1, 6):
        for l in range(1, N + 1):
            assert forced_factor_poly(N).divides(reconstruct_detD_polynomial(N, l))
