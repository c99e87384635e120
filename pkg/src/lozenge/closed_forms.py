"""Closed-form product and sum formulas, evaluated in exact arithmetic."""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import (
    Polynomial,
    binomial,
    double_factorial,
    pochhammer,
    pochhammer_poly,
)

PARITIES = ("even", "odd")
PATTERNS = ("consecutive", "skip1", "skip2")


class ParameterError(ValueError):
    """Parameters violate a formula's preconditions."""


class NonIntegralError(ArithmeticError):
    """A count evaluated to a non-integer."""


@dataclass(frozen=True)
class HexagonShape:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ParameterError("hexagon sides must be nonnegative")


@dataclass(frozen=True)
class AxisProblem:
    """One fixed rhombus at position l on the symmetry axis.

    parity "even" is the hexagon N, 2m, N; "odd" is N+1, 2m-1, N+1.
    """

    N: int
    m: int
    l: int
    parity: str = "even"

    def __post_init__(self):
        _check_axis(self.N, self.m, self.parity)
        if not 1 <= self.l <= self.N:
            raise ParameterError(f"l out of range: need 1 <= l <= N = {self.N}, got {self.l}")

    @property
    def shape(self):
        return hexagon_for(self.N, self.m, self.parity)


@dataclass(frozen=True)
class AxisSet:
    """Several fixed rhombi L on the symmetry axis."""

    N: int
    m: int
    L: tuple
    parity: str = "even"

    def __post_init__(self):
        _check_axis(self.N, self.m, self.parity)
        L = tuple(sorted(set(self.L)))
        if not L:
            raise ParameterError("L must be nonempty")
        if L[0] < 1 or L[-1] > self.N:
            raise ParameterError(f"L out of range: positions must lie in 1..{self.N}")
        object.__setattr__(self, "L", L)

    @property
    def r(self):
        return len(self.L)

    @property
    def shape(self):
        return hexagon_for(self.N, self.m, self.parity)


def _check_axis(N, m, parity):
    if parity not in PARITIES:
        raise ParameterError(f"parity must be 'even' or 'odd', got {parity!r}")
    if N < 1:
        raise ParameterError(f"N must be positive, got {N}")
    if m < 0:
        raise ParameterError(f"m must be nonnegative, got {m}")
    if parity == "odd" and m < 1:
        raise ParameterError("odd parity needs m >= 1 (side 2m-1)")


def hexagon_for(N, m, parity):
    if parity == "even":
        return HexagonShape(N, 2 * m, N)
    return HexagonShape(N + 1, 2 * m - 1, N + 1)


def _as_integer(value, what):
    if value.denominator != 1:
        raise NonIntegralError(f"{what} is not an integer: {value}")
    return value.numerator


# ---------------------------------------------------------------------------


def macmahon_count(shape):
    """Number of rhombus tilings of the hexagon with sides a, b, c, a, b, c."""
    num = den = 1
    for i in range(1, shape.a + 1):
        for j in range(1, shape.b + 1):
            for k in range(1, shape.c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    q, r = divmod(num, den)
    assert r == 0
    return q


def _axis_term(N, m, e):
    """e-th summand of the axis sum without the 1/((m+e)(m+N-e)) factor."""
    return ((-1) ** e * binomial(N, e) * (N - 2 * e)
            * pochhammer(Fraction(1, 2), e) / pochhammer(Fraction(1, 2) - N, e))


def axis_sum(N, m, l):
    """sum_{e<l} (-1)^e C(N,e) (N-2e) (1/2)_e / ((m+e)(m+N-e) (1/2-N)_e)."""
    if not 1 <= l <= N:
        raise ParameterError(f"l out of range: need 1 <= l <= N = {N}")
    m = Fraction(m)
    total = Fraction(0)
    for e in range(l):
        t = _axis_term(N, m, e)
        if t:
            total += t / ((m + e) * (m + N - e))
    return total


def _m_times_axis_sum(N, m, l):
    # m * axis_sum with the e = 0 pole cancelled, so m = 0 is allowed
    m = Fraction(m)
    total = Fraction(N, 1) / (m + N)
    for e in range(1, l):
        t = _axis_term(N, m, e)
        if t:
            total += m * t / ((m + e) * (m + N - e))
    return total


def proportion(p):
    """Fraction of all tilings of the hexagon that contain the axis rhombus."""
    N, m = p.N, p.m
    pref = Fraction(binomial(m + N, m) * binomial(m + N - 1, m), binomial(2 * m + 2 * N - 1, 2 * m))
    return pref * _m_times_axis_sum(N, m, p.l)


def fixed_rhombus_count(p):
    """Number of tilings of the symmetric hexagon containing rhombus l."""
    value = proportion(p) * macmahon_count(p.shape)
    return _as_integer(value, f"count for {p}")


def lemma_simple_rhs(N, m):
    """Product side of the binomial determinant det(C(m+i, m-i+j))."""
    result = Fraction(1)
    for i in range(1, N + 1):
        result *= Fraction(
            factorial(N + m - i + 1) * factorial(i - 1) * pochhammer(2 * m + i + 1, i - 1),
            factorial(m + i - 1) * factorial(2 * N - 2 * i + 1))
    return _as_integer(result, "simple determinant")


def row_scale(N, m):
    """prod_i (N+m-i)! / ((m+i-1)! (2N-2i+1)!): the factor taken out of the rows."""
    result = Fraction(1)
    for i in range(1, N + 1):
        result *= Fraction(factorial(N + m - i), factorial(m + i - 1) * factorial(2 * N - 2 * i + 1))
    return result


def forced_factor(N, m):
    """prod_{i<=N/2} (m+i)_{N-2i+1} (m+i+1/2)_{N-2i} at a rational m."""
    m = Fraction(m)
    result = Fraction(1)
    for i in range(1, N // 2 + 1):
        result *= pochhammer(m + i, N - 2 * i + 1) * pochhammer(m + i + Fraction(1, 2), N - 2 * i)
    return result


def forced_factor_poly(N):
    result = Polynomial([1])
    for i in range(1, N // 2 + 1):
        result = result * pochhammer_poly(i, N - 2 * i + 1) * pochhammer_poly(Fraction(2 * i + 1, 2), N - 2 * i)
    return result


def _p_constant(N):
    num = Fraction(2) ** ((N - 1) * (N - 2) // 2)
    for j in range(1, N + 1):
        num *= factorial(2 * j - 1)
    den = Fraction(factorial(N))
    for i in range(1, N // 2 + 1):
        den *= pochhammer(2 * i, 2 * N - 4 * i + 1)
    return num / den


def lemma_complex_rhs(N, m, l):
    """Product-times-sum side of the weighted lower-half determinant."""
    if m < 1:
        raise ParameterError("m must be at least 1")
    p_value = _p_constant(N) * pochhammer(m, N + 1) * axis_sum(N, m, l)
    return row_scale(N, m) * forced_factor(N, m) * p_value


def p_closed_form(N, l):
    """P(m; N, l) as an explicit polynomial in m.

    The summands' denominators (m+e)(m+N-e) divide (m)_{N+1}, so each
    term is expanded as a polynomial before summing.
    """
    if not 1 <= l <= N:
        raise ParameterError(f"l out of range: need 1 <= l <= N = {N}")
    full = pochhammer_poly(0, N + 1)
    total = Polynomial()
    for e in range(l):
        t = _axis_term(N, 0, e)
        if not t:
            continue
        cofactor = full.exact_div(Polynomial([e, 1]) * Polynomial([N - e, 1]))
        total = total + cofactor * t
    return total * _p_constant(N)


# ---------------------------------------------------------------------------
# conjectures for several fixed rhombi


def conjecture_positions(pattern, r):
    if pattern == "consecutive":
        return tuple(range(1, r + 1))
    if pattern == "skip1":
        return tuple(range(1, r)) + (r + 1,)
    if pattern == "skip2":
        return tuple(range(1, r)) + (r + 2,)
    raise ParameterError(f"unknown pattern {pattern!r}")


def _conjecture_common(N, m, r):
    m = Fraction(m)
    # (r-1)(r-2N) is always even
    value = Fraction(2) ** ((r - 1) * (r - 2 * N) // 2)
    value *= Fraction(binomial(m.numerator + N - 1, m.numerator) ** 2,
                      binomial(2 * m.numerator + 2 * N - 1, 2 * m.numerator))
    for i in range(N - r, N - 1):
        value /= factorial(i)
    for i in range(1, r):
        value *= Fraction(double_factorial(2 * i) * double_factorial(2 * N - 2 * i - 1),
                          double_factorial(2 * i - 1))
        value *= pochhammer(m + i + 1, N - 2 * i - 1) / pochhammer(m + i + Fraction(1, 2), N - 2 * i)
    return value


def conjecture_count(pattern, N, m, r, parity="even"):
    """Conjectured number of tilings containing the axis rhombi of a pattern.

    consecutive: L = {1..r}; skip1: {1..r-1, r+1}; skip2: {1..r-1, r+2}.
    Returned as a Fraction so that a non-integral (falsified) value shows.
    """
    need = {"consecutive": r, "skip1": r + 1, "skip2": r + 2}
    if pattern not in need:
        raise ParameterError(f"unknown pattern {pattern!r}")
    if r < 1:
        raise ParameterError("r must be positive")
    if N < need[pattern]:
        raise ParameterError(f"{pattern} needs N >= {need[pattern]}, got N = {N}")
    if m < 1:
        raise ParameterError("m must be at least 1")
    _check_axis(N, m, parity)
    shape = hexagon_for(N, m, parity)
    mq = Fraction(m)
    value = _conjecture_common(N, m, r) * macmahon_count(shape)
    if pattern == "skip1":
        value *= Fraction(3 * r * (N - r),
                          (2 * r - 1) * (2 * N - 2 * r + 1)) / ((mq + r) * (mq + N - r))
        value *= mq * mq + N * mq + Fraction((2 * r - 1) * (2 * N - 2 * r + 1), 3)
    elif pattern == "skip2":
        value *= Fraction(45, 64) * pochhammer(r, 2) * pochhammer(N - r - 1, 2)
        value /= (pochhammer(Fraction(2 * r - 1, 2), 2) * pochhammer(Fraction(2 * N - 2 * r - 1, 2), 2)
                  * pochhammer(mq + r, 2) * pochhammer(mq + N - r - 1, 2))
        quad = N * N + Fraction((20 * r + 1) * N, 9) - Fraction(20 * r * r + 2 * r + 5, 9)
        lin = Fraction((20 * r + 1) * N - 20 * r * r - 2 * r - 5, 9) * N
        const = Fraction(4, 45) * (2 * r - 1) * (2 * r + 1) * (2 * N - 2 * r - 1) * (2 * N - 2 * r + 1)
        value *= mq ** 4 + 2 * N * mq ** 3 + quad * mq ** 2 + lin * mq + const
    return value
