"""Terminating hypergeometric sums and exact checks of the identities used.

Every series here is a finite sum of Fractions.  The checks evaluate both
sides of an identity at concrete parameters and record any mismatch in a
:class:`VerificationReport`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .closed_forms import ParameterError, proportion, AxisProblem
from .determinants import (
    ParamMatrixSpec,
    build_D,
    lincomb_vector,
    reflection_matrix,
)
from .exact import as_fraction, pochhammer
from .report import VerificationReport

HALF = Fraction(1, 2)


class ZeroDenominatorError(ZeroDivisionError):
    """A lower parameter's shifted factorial vanishes inside the summation range."""


@dataclass(frozen=True)
class SeriesSpec:
    """pFq(numer; denom; z) summed for k = 0..truncation."""

    numer: tuple
    denom: tuple
    z: Fraction = Fraction(1)
    truncation: int = None

    def __post_init__(self):
        object.__setattr__(self, "numer", tuple(as_fraction(a) for a in self.numer))
        object.__setattr__(self, "denom", tuple(as_fraction(b) for b in self.denom))
        object.__setattr__(self, "z", as_fraction(self.z))
        if self.truncation is None:
            t = natural_truncation(self.numer)
            if t is None:
                raise ParameterError("series does not terminate; give an explicit truncation")
            object.__setattr__(self, "truncation", t)
        if self.truncation < 0:
            raise ParameterError("truncation must be nonnegative")


def natural_truncation(numer):
    """Largest k with a nonzero term, from the nonpositive integer upper parameters."""
    stops = [-a.numerator for a in map(as_fraction, numer) if a.denominator == 1 and a <= 0]
    return min(stops) if stops else None


def terminating_sum(s):
    """sum_{k=0}^{truncation} (a1)_k...(ar)_k / (k! (b1)_k...(bs)_k) z^k."""
    total = Fraction(0)
    term = Fraction(1)
    for k in range(s.truncation + 1):
        if k:
            num = s.z
            for a in s.numer:
                num *= a + k - 1
            den = Fraction(k)
            for b in s.denom:
                den *= b + k - 1
            if den == 0:
                if num == 0:
                    # every later term carries the same vanishing upper factor
                    break
                raise ZeroDenominatorError(f"lower parameter vanishes at k = {k} in {s}")
            term = term * num / den
        total += term
    return total


def hyp(numer, denom, z=1, truncation=None):
    return terminating_sum(SeriesSpec(tuple(numer), tuple(denom), z, truncation))


# ---------------------------------------------------------------------------
# classical summations and the contiguous relation


def check_chu_vandermonde(a, c, n):
    """2F1(a, -n; c; 1) = (c-a)_n / (c)_n."""
    a, c = as_fraction(a), as_fraction(c)
    rep = VerificationReport("chu-vandermonde", f"a={a}, c={c}, n={n}")
    if pochhammer(c, n) == 0:
        raise ParameterError("(c)_n vanishes")
    lhs = hyp((a, -n), (c,), truncation=n)
    rhs = pochhammer(c - a, n) / pochhammer(c, n)
    rep.record({"a": a, "c": c, "n": n}, rhs, lhs)
    return rep


def check_contiguous(a, A1, A2, B1, B2, n=None):
    """3F2(a,A1,A2;B1,B2;1) = 3F2(a-1,...) + A1 A2/(B1 B2) 3F2(a,A1+1,A2+1;B1+1,B2+1;1)."""
    a, A1, A2, B1, B2 = map(as_fraction, (a, A1, A2, B1, B2))
    params = {"a": a, "A1": A1, "A2": A2, "B1": B1, "B2": B2}
    rep = VerificationReport("contiguous", ", ".join(f"{k}={v}" for k, v in params.items()))
    if natural_truncation((A1, A2)) is None:
        raise ParameterError("A1 or A2 must be a nonpositive integer")
    lhs = hyp((a, A1, A2), (B1, B2))
    rhs = hyp((a - 1, A1, A2), (B1, B2))
    if A1 * A2:
        rhs += A1 * A2 / (B1 * B2) * hyp((a, A1 + 1, A2 + 1), (B1 + 1, B2 + 1))
    rep.record(params, lhs, rhs)
    return rep


def symmetry_series_closed_form(N, m, i, j):
    """Closed value of 3F2(1-2m-N, 1-j, 1-i-m; -2m-N, 3-2i+N; 1) for j >= 2."""
    m = as_fraction(m)
    return ((-N + i - m - 1) * (N + j + 2 * m - 1) * pochhammer(N - i + m + 2, j - 2)
            / ((-2 * m - N) * pochhammer(N - 2 * i + 3, j - 1)))


def check_symmetry_series(N, m, i, j):
    """The contiguous relation at a = 1-2m-N, B1 = -2m-N and its closed evaluation.

    Needs j >= 2 and (N-2i+3)_{j-1} != 0 so that the series is defined.
    Also checks that the series reproduces the column sum it came from.
    """
    m = as_fraction(m)
    if j < 2 or pochhammer(N - 2 * i + 3, j - 1) == 0:
        raise ParameterError("need j >= 2 and (N-2i+3)_{j-1} != 0")
    params = {"N": N, "m": m, "i": i, "j": j}
    rep = VerificationReport("symmetry-series", f"N={N}, m={m}, i={i}, j={j}")
    a, A1, A2, B1, B2 = 1 - 2 * m - N, Fraction(1 - j), 1 - i - m, -2 * m - N, Fraction(3 - 2 * i + N)
    rep.merge(check_contiguous(a, A1, A2, B1, B2))
    # after cancellation the right side is two Chu-Vandermonde sums
    two = (hyp((1 - i - m, 1 - j), (3 - 2 * i + N,))
           + Fraction(1 - j) * (1 - i - m) / ((-2 * m - N) * (N - 2 * i + 3))
           * hyp((2 - i - m, 2 - j), (4 - 2 * i + N,)))
    series = hyp((a, A1, A2), (B1, B2))
    rep.record(params, series, two, "reduction to two 2F1")
    rep.record(params, symmetry_series_closed_form(N, m, i, j), series, "closed form")
    column_sum = (-1) ** j * sum(
        (comb(j - 1, k - 1) * pochhammer(m + i - k + 1, k - 1)
         * pochhammer(N + k - 2 * i + 2, N - k) * (N + 2 * m - k + 1) / 2
         for k in range(1, j + 1)), Fraction(0))
    rewritten = ((-1) ** (j - 1) * HALF * (-2 * m - N) * pochhammer(N - 2 * i + 3, N - 1) * series)
    rep.record(params, column_sum, rewritten, "hypergeometric rewriting")
    return rep


# ---------------------------------------------------------------------------
# transformations of the axis sum


def axis_series_sum(N, m, l):
    """sum_{e<l} (-N)_e (1-N/2)_e (m)_e (-m-N)_e (1/2)_e / ((-N/2)_e (1-m-N)_e (1+m)_e (1/2-N)_e e!).

    The very-well-poised pair (1-N/2)_e/(-N/2)_e is taken as its reduced
    ratio (N-2e)/N, which is what stays finite when N is even and e > N/2.
    """
    m = as_fraction(m)
    total = Fraction(0)
    for e in range(l):
        t = (pochhammer(-N, e) * Fraction(N - 2 * e, N) * pochhammer(m, e) * pochhammer(-m - N, e)
             * pochhammer(HALF, e))
        if t:
            t /= pochhammer(1 - m - N, e) * pochhammer(1 + m, e) * pochhammer(HALF - N, e) * factorial(e)
        total += t
    return total


def axis_series_prefactor(N, m):
    """(2N-1)! ((m+1)_{N-1})^2 / ((N-1)!^2 (2m+1)_{2N-1})."""
    m = as_fraction(m)
    return (factorial(2 * N - 1) * pochhammer(m + 1, N - 1) ** 2
            / (factorial(N - 1) ** 2 * pochhammer(2 * m + 1, 2 * N - 1)))


def whipple_rhs(N, m, l):
    m = as_fraction(m)
    pref = (pochhammer(1 - N, l - 1) * pochhammer(HALF - l, l - 1)
            / (pochhammer(HALF - N, l - 1) * pochhammer(1 - l, l - 1)))
    return pref * hyp((1, HALF, l - N, 1 - l), (1 + m, 1 - m - N, Fraction(3, 2)))


def _check_axis_args(N, m, l):
    if N < 1 or m < 1 or not 1 <= l <= N:
        raise ParameterError(f"need N >= 1, m >= 1, 1 <= l <= N; got N={N}, m={m}, l={l}")


def check_whipple_special(N, m, l):
    """The terminating axis sum equals the transformed balanced 4F3.

    Also checks that the prefactor times the axis sum is the proportion.
    """
    _check_axis_args(N, m, l)
    params = {"N": N, "m": m, "l": l}
    rep = VerificationReport("whipple", f"N={N}, m={m}, l={l}")
    lhs = axis_series_sum(N, m, l)
    rep.record(params, lhs, whipple_rhs(N, m, l), "transformation")
    rep.record(params, proportion(AxisProblem(N, m, l)), axis_series_prefactor(N, m) * lhs, "prefactor")
    return rep


def bailey_form(N, m, l):
    """Factorial prefactor times 4F3(1-l,1,1,3/2-l+N; 3/2,2-l-m,2-l+m+N; 1)."""
    f = factorial
    pref = Fraction(f(2 * l) * f(2 * m) * f(m + N - 1) * f(m + N) * f(2 * N - 2 * l + 2),
                    4 * (l + m - 1) * (m + N - l + 1) * f(l - 1) * f(l) * f(m - 1))
    pref /= f(m) * f(N - l) * f(N - l + 1) * f(2 * m + 2 * N - 1)
    series = hyp((1 - l, 1, 1, Fraction(3, 2) - l + N), (Fraction(3, 2), 2 - l - m, 2 - l + m + N))
    return pref * series


def check_bailey_special(N, m, l):
    """Bailey's 4F3 transformation at the axis specialization, and its factorial form."""
    _check_axis_args(N, m, l)
    params = {"N": N, "m": m, "l": l}
    rep = VerificationReport("bailey", f"N={N}, m={m}, l={l}")
    a, b, c, e, f, n = Fraction(1), HALF, Fraction(l - N), Fraction(m + 1), Fraction(-m - N + 1), l - 1
    left = hyp((a, b, c, -n), (e, f, 1 + a + b + c - e - f - n))
    right = (pochhammer(e - a, n) * pochhammer(f - a, n) / (pochhammer(e, n) * pochhammer(f, n))
             * hyp((-n, a, a + c - e - f - n + 1, a + b - e - f - n + 1),
                   (a + b + c - e - f - n + 1, a - e - n + 1, a - f - n + 1)))
    rep.record(params, left, right, "transformation")
    rep.record(params, proportion(AxisProblem(N, m, l)), bailey_form(N, m, l), "factorial form")
    return rep


# ---------------------------------------------------------------------------
# column relations of D(m; N, l)


def check_column_combination(N, l, e, k):
    """The column combination of D(-e-1/2; N, l) indexed by k vanishes."""
    if not 1 <= l <= (N + 1) // 2 or not 1 <= k <= e <= N // 2 - 1:
        raise ParameterError("need 1 <= l <= (N+1)/2 and 1 <= k <= e <= N/2 - 1")
    rep = VerificationReport("column-combination", f"N={N}, l={l}, e={e}, k={k}")
    vec = lincomb_vector(N, l, e, k)
    for i, v in enumerate(vec, 1):
        rep.record({"N": N, "l": l, "e": e, "k": k, "row": i}, Fraction(0), v)
    return rep


def check_reflection_identity(N, l, m):
    """D(m; N, l) R(N) = D(-N-m; N, l) with row l negated."""
    m = as_fraction(m)
    rep = VerificationReport("reflection", f"N={N}, l={l}, m={m}")
    spec = ParamMatrixSpec(N, l)
    left = build_D(spec, m) @ reflection_matrix(N)
    right = build_D(spec, -N - m).with_row_negated(l)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            rep.record({"N": N, "l": l, "m": m, "row": i, "col": j}, right[i, j], left[i, j])
    return rep


def check_column_relations(N, l, e=None, k=None, m_samples=(1, Fraction(7, 3), Fraction(-5, 2))):
    """Both column relations; the combination part runs only when e, k are given."""
    rep = VerificationReport("column-relations", f"N={N}, l={l}, e={e}, k={k}")
    if e is not None:
        rep.merge(check_column_combination(N, l, e, k))
    for m in m_samples:
        rep.merge(check_reflection_identity(N, l, m))
    return rep
