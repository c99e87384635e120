"""Exact enumeration of rhombus tilings of symmetric hexagons with fixed axis rhombi."""

from .closed_forms import (
    AxisProblem,
    AxisSet,
    HexagonShape,
    NonIntegralError,
    ParameterError,
    axis_sum,
    conjecture_count,
    fixed_rhombus_count,
    lemma_complex_rhs,
    lemma_simple_rhs,
    macmahon_count,
    p_closed_form,
    proportion,
)
from .determinants import (
    RationalMatrix,
    build_complex_matrix,
    build_simple_matrix,
    det_exact,
    reconstruct_detD_polynomial,
    reconstruct_P,
    verify_block_decomposition,
)
from .exact import Polynomial, binomial, lagrange_interpolate, pochhammer
from .report import VerificationReport
from .tiling import (
    BudgetExceeded,
    count_with_fixed_axis,
    enumerate_tilings,
    simple_half_count,
    weighted_half_count,
)

__version__ = "0.1.0"
