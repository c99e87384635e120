"""Exact combinatorial kernels and univariate rational polynomials.

Integers are Python ints and rationals are :class:`fractions.Fraction`, which
is always stored in lowest terms with a positive denominator.
"""

from fractions import Fraction
from math import factorial, comb

__all__ = [
    "Fraction",
    "as_fraction",
    "factorial",
    "rfactorial",
    "pochhammer",
    "binomial",
    "double_factorial",
    "Polynomial",
    "lagrange_interpolate",
    "poly_eval",
    "pochhammer_poly",
]


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rfactorial(n):
    """Reciprocal factorial 1/n!, which is 0 for negative integers n."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def pochhammer(a, k):
    """Shifted factorial (a)_k for any integer k.

    For k >= 0 this is a(a+1)...(a+k-1).  For k < 0 the Gamma-ratio
    extension is used: (a)_k = 1/((a-1)(a-2)...(a+k)) = 1/(a+k)_{-k}.
    """
    a = as_fraction(a)
    if k >= 0:
        result = Fraction(1)
        for i in range(k):
            result *= a + i
        return result
    denom = Fraction(1)
    for i in range(1, -k + 1):
        denom *= a - i
    if denom == 0:
        raise ZeroDivisionError(
            f"pochhammer({a}, {k}): negative-length extension hits a zero factor")
    return 1 / denom


def binomial(n, k):
    """Binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    # falling factorial of a negative integer
    value = pochhammer(n - k + 1, k) / factorial(k)
    assert value.denominator == 1
    return value.numerator


def double_factorial(n):
    """n!! = n(n-2)(n-4)...; 0!! = (-1)!! = 1."""
    if n < -1:
        raise ValueError("double factorial is defined for n >= -1")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    Coefficients are stored in ascending degree with trailing zeros trimmed,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def linear(cls, root_shift, lead=1):
        """The polynomial lead*(x + root_shift)."""
        return cls([as_fraction(root_shift) * lead, lead])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return self.format()

    def format(self, var="m"):
        """Ascending-order display such as ``60 + 90*m + 30*m^2``."""
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(c)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{c}*{mono}")
            terms.append(body)
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Polynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, divisor):
        """Polynomial long division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dd = len(dc) - 1
        if len(rem) - 1 < dd:
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (len(rem) - dd)
        lead = dc[-1]
        for i in range(len(rem) - 1 - dd, -1, -1):
            q = rem[i + dd] / lead
            quot[i] = q
            if q:
                for j, c in enumerate(dc):
                    rem[i + j] -= q * c
        return Polynomial(quot), Polynomial(rem[:dd])

    def exact_div(self, divisor):
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def divides(self, other):
        """True if self divides other exactly."""
        return other.divmod(self)[1].is_zero()

    def compose_affine(self, scale, shift):
        """Return p(scale*x + shift)."""
        lin = Polynomial([shift, scale])
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result


def poly_eval(p, x):
    """Horner evaluation, exact."""
    x = as_fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def lagrange_interpolate(points):
    """Unique polynomial of degree < len(points) through the given points.

    Uses Newton divided differences, which is algebraically the same
    polynomial as the Lagrange form but cheaper to expand.
    """
    pts = [(as_fraction(x), as_fraction(y)) for x, y in points]
    if not pts:
        raise ValueError("need at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation points")
    coef = [y for _, y in pts]
    n = len(pts)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    result = Polynomial([coef[-1]])
    for i in range(n - 2, -1, -1):
        result = result * Polynomial([-xs[i], 1]) + coef[i]
    return result


def pochhammer_poly(shift, k):
    """The polynomial (x + shift)_k in x, for k >= 0."""
    result = Polynomial([1])
    for i in range(k):
        result = result * Polynomial([as_fraction(shift) + i, 1])
    return result
