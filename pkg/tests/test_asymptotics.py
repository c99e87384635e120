import io
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lozenge.asymptotics import (
    AsymptoticDomainError,
    AsymptoticParams,
    arcsine_value,
    clp_density,
    convergence_table,
    write_csv,
)

P = AsymptoticParams
a_vals = st.floats(min_value=0.01, max_value=50)
b_vals = st.floats(min_value=0.001, max_value=0.999)


def test_arcsine_values():
    assert arcsine_value(P(0, 0.5)) == pytest.approx(1.0, abs=1e-15)
    assert arcsine_value(P(1, 0.5)) == pytest.approx(2 / math.pi * math.asin(1 / 3), abs=1e-15)
    assert arcsine_value(P(1, 0.5)) == pytest.approx(0.216347, abs=1e-6)
    assert arcsine_value(P(1, 1e-9)) < 1e-4


def test_clp_values():
    assert clp_density(P(1, 0.5)) == pytest.approx(arcsine_value(P(1, 0.5)), abs=1e-15)
    assert clp_density(P(2, 0.25)) == pytest.approx(arcsine_value(P(2, 0.25)), abs=1e-12)
    with pytest.raises(AsymptoticDomainError):
        clp_density(P(0, 0.5))


def test_param_validation():
    with pytest.raises(AsymptoticDomainError):
        P(-1, 0.5)
    with pytest.raises(AsymptoticDomainError):
        P(1, 1.0)


@given(a_vals, b_vals)
def test_two_forms_agree(a, b):
    assert abs(arcsine_value(P(a, b)) - clp_density(P(a, b))) <= 1e-12


@given(a_vals, b_vals)
def test_b_symmetry(a, b):
    assert clp_density(P(a, b)) == pytest.approx(clp_density(P(a, 1 - b)), abs=1e-12)


def test_table_rows():
    rows = convergence_table(P(1, 0.5), [2])
    assert [(r.N, r.m, r.l, r.exact) for r in rows] == [(2, 2, 1, Fraction(9, 35))]
    skipped = []
    assert convergence_table(P(0, 0.5), [4], skipped) == [] and skipped == [4]
    # half-up rounding: a*N = 2.5 gives m = 3
    assert convergence_table(P(0.5, 0.5), [5])[0].m == 3


def test_gap_decreases():
    gaps = [r.gap for r in convergence_table(P(1, 0.5), [8, 16, 32, 64])]
    assert gaps == sorted(gaps, reverse=True)


def test_csv_output():
    buf = io.StringIO()
    write_csv(convergence_table(P(1, 0.5), [32, 8]), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "N,m,l,proportion_exact_num,proportion_exact_den,proportion_float,limit,gap"
    assert [line.split(",")[0] for line in lines[1:]] == ["8", "32"]
    num, den = map(int, lines[1].split(",")[3:5])
    assert Fraction(num, den) == Fraction(22965763, 100180065)
