"""Exact matrices and determinants behind the lattice-path counts.

Besides the two lattice-path matrices this module builds the scaled matrix
D(m; N, l), whose entries are polynomials in m, and the matrix D1 obtained
from it by the column operations that expose a factor (m+e)^e.  Polynomials
in m are recovered from exact determinant samples by interpolation.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, lcm

from .closed_forms import forced_factor_poly, ParameterError
from .exact import (
    Polynomial,
    as_fraction,
    binomial,
    lagrange_interpolate,
    pochhammer,
    pochhammer_poly,
    rfactorial,
)


class RationalMatrix:
    """Dense matrix of Fractions, stored as a tuple of row tuples."""

    __slots__ = ("_rows", "cols")

    def __init__(self, rows, cols=None):
        self._rows = tuple(tuple(as_fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(self._rows[0]) if self._rows else 0
        self.cols = cols
        if any(len(r) != cols for r in self._rows):
            raise ValueError("ragged matrix")

    @classmethod
    def from_function(cls, n_rows, n_cols, f):
        """Matrix with 1-based entries f(i, j)."""
        return cls([[f(i, j) for j in range(1, n_cols + 1)] for i in range(1, n_rows + 1)], n_cols)

    @classmethod
    def identity(cls, n):
        return cls.from_function(n, n, lambda i, j: 1 if i == j else 0)

    @property
    def rows(self):
        return len(self._rows)

    @property
    def entries(self):
        return tuple(x for r in self._rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i - 1][j - 1]

    def row(self, i):
        return self._rows[i - 1]

    def column(self, j):
        return tuple(r[j - 1] for r in self._rows)

    def tolist(self):
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.cols == other.cols and self._rows == other._rows

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"RationalMatrix([{body}])"

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ocols = [other.column(j) for j in range(1, other.cols + 1)]
        return RationalMatrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols] for r in self._rows],
            other.cols)

    def block(self, rows, cols):
        """Submatrix on 1-based inclusive ranges given as (first, last)."""
        (r1, r2), (c1, c2) = rows, cols
        return RationalMatrix([self._rows[i - 1][c1 - 1:c2] for i in range(r1, r2 + 1)], max(0, c2 - c1 + 1))

    def with_row_negated(self, i):
        rows = list(self._rows)
        rows[i - 1] = tuple(-x for x in rows[i - 1])
        return RationalMatrix(rows, self.cols)

    def det(self):
        return det_exact(self)


def det_exact(M):
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; the pivot is the first nonzero
    entry in the current column at or below the diagonal.
    """
    if isinstance(M, RationalMatrix):
        if M.rows != M.cols:
            raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
        rows = [list(M.row(i)) for i in range(1, M.rows + 1)]
    else:
        rows = [list(map(as_fraction, r)) for r in M]
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("determinant of a non-square matrix")
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for r in rows:
        d = lcm(*(x.denominator for x in r))
        scale *= d
        a.append([x.numerator * (d // x.denominator) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1]) / scale


def det_cofactor(M):
    """Laplace expansion along the first row; independent reference for small n."""
    rows = [list(r) for r in (M.tolist() if isinstance(M, RationalMatrix) else M)]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return as_fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * as_fraction(rows[0][j]) * det_cofactor(minor)
    return total


# ---------------------------------------------------------------------------
# lattice path matrices


def build_simple_matrix(N, m):
    """(C(m+i, m-i+j))_{i,j=1..N}; counts paths for the plain half."""
    return RationalMatrix.from_function(N, N, lambda i, j: binomial(m + i, m - i + j) if m - i + j >= 0 else 0)


def complex_entry(N, m, i, j, exceptional):
    m = as_fraction(m)
    if m.denominator != 1:
        raise ParameterError("the factorial form needs an integer m; use build_D for rational m")
    mi = m.numerator
    if mi + i - j < 0:
        return Fraction(0)
    if exceptional:
        return factorial(N + mi - i) * rfactorial(mi + i - j) * rfactorial(N + j - 2 * i)
    return (factorial(N + mi - i) * rfactorial(mi + i - j) * rfactorial(N + j - 2 * i + 1)
            * (m + Fraction(N - j + 1, 2)))


def build_complex_matrix(N, m, L):
    """Weighted path matrix for the lower half with fixed rhombi L."""
    Ls = set(L)
    if any(not 1 <= l <= N for l in Ls):
        raise ParameterError(f"L out of range: positions must lie in 1..{N}")
    return RationalMatrix.from_function(N, N, lambda i, j: complex_entry(N, m, i, j, i in Ls))


# ---------------------------------------------------------------------------
# D(m; N, l) and D1(m; N, l, e)


@dataclass(frozen=True)
class ParamMatrixSpec:
    N: int
    l: int
    variant: str = "D"
    e: int = 0

    def __post_init__(self):
        if not 1 <= self.l <= self.N:
            raise ParameterError(f"l out of range: need 1 <= l <= N = {self.N}")
        if self.variant not in ("D", "D1"):
            raise ParameterError(f"unknown variant {self.variant!r}")
        if self.variant == "D1" and not 0 <= self.e <= self.N // 2:
            raise ParameterError("D1 needs 0 <= e <= N/2")


def d_entry(N, l, m, i, j):
    m = as_fraction(m)
    if i != l:
        return (pochhammer(m + i - j + 1, j - 1) * pochhammer(N + j - 2 * i + 2, N - j)
                * (N + 2 * m - j + 1) / 2)
    return pochhammer(m + i - j + 1, j - 1) * pochhammer(N + j - 2 * i + 1, N - j + 1)


def d1_entry(N, l, e, m, i, j):
    if j <= N - 2 * e or j > N - e:
        return d_entry(N, l, m, i, j)
    m = as_fraction(m)
    k = j - (N - 2 * e + 1)
    if i != l:
        return (pochhammer(2 * e + i - k + m - N, N - 2 * e + k) * pochhammer(N - i + m + 1, k)
                * pochhammer(2 * N - 2 * e - 2 * i + 2 * k + 3, 2 * e - 2 * k - 1))
    const = pochhammer(2 * N - 2 * e - 2 * i + 2 * k + 2, 2 * e - 2 * k)
    if const == 0:
        # the remaining factors may carry a pole; the entry is identically 0
        return const
    return (const * shifted_product(m, [(2 * e + i - k - N, N - e - i + k), (e + 1, i - e - 1)])
            * pochhammer(1 - i + m + N, k))


def shifted_product(m, factors):
    """prod (m + s)_n over (s, n) pairs, cancelling poles symbolically.

    A negative length contributes reciprocal linear factors; these are
    cancelled against the positive ones before m is substituted, so a
    product that is a polynomial in m evaluates correctly at its removable
    singularities.
    """
    count = Counter()
    for s, n in factors:
        if n >= 0:
            for t in range(n):
                count[s + t] += 1
        else:
            for t in range(1, -n + 1):
                count[s - t] -= 1
    m = as_fraction(m)
    value = Fraction(1)
    for shift, mult in sorted(count.items()):
        if mult > 0:
            value *= (m + shift) ** mult
        elif mult < 0:
            value /= (m + shift) ** -mult
    return value


def build_D(spec, m):
    """D(m; N, l) or D1(m; N, l, e) with m substituted (any rational)."""
    N, l = spec.N, spec.l
    if spec.variant == "D":
        return RationalMatrix.from_function(N, N, lambda i, j: d_entry(N, l, m, i, j))
    return RationalMatrix.from_function(N, N, lambda i, j: d1_entry(N, l, spec.e, m, i, j))


def column_operated_D(N, l, e, m):
    """D(m; N, l) after adding sum_i C(k,i) col(N+1-2e+k+i) to col N+1-2e+k.

    The additions for k = 0..e-1 only read columns with a larger index, so
    applying them in increasing k uses original columns throughout.
    """
    D = build_D(ParamMatrixSpec(N, l), m)
    rows = D.tolist()
    for k in range(e):
        target = N + 1 - 2 * e + k
        for r in rows:
            r[target - 1] = r[target - 1] + sum(
                (comb(k, i) * r[target + i - 1] for i in range(1, k + 1)), Fraction(0))
    return RationalMatrix(rows, N)


def det_D_degree_bound(N):
    return comb(N + 1, 2) - 1


def reconstruct_detD_polynomial(N, l):
    """det D(m; N, l) as a polynomial in m, from samples at m = 1, 2, ..."""
    if not 1 <= l <= N:
        raise ParameterError(f"l out of range: need 1 <= l <= N = {N}")
    spec = ParamMatrixSpec(N, l)
    n_points = det_D_degree_bound(N) + 1
    pts = [(m, det_exact(build_D(spec, m))) for m in range(1, n_points + 1)]
    return lagrange_interpolate(pts)


def entry_polynomial(f, degree):
    """Interpolate a polynomial function of m of known degree bound."""
    return lagrange_interpolate([(m, f(m)) for m in range(1, degree + 2)])


def reconstruct_P(N, l, detD=None):
    """P(m; N, l) = det D(m; N, l) / forced factors, by exact division."""
    if detD is None:
        detD = reconstruct_detD_polynomial(N, l)
    q, r = detD.divmod(forced_factor_poly(N))
    if not r.is_zero():
        raise ArithmeticError(f"forced factors do not divide det D(m; {N}, {l})")
    return q


def step2_factor_poly(N, e):
    """(m + e + 1/2)^{min(e, N-e-1)}."""
    return Polynomial([Fraction(2 * e + 1, 2), 1]) ** min(e, N - e - 1)


def reflection_matrix(N):
    """R(N) = ((-1)^j C(j-1, i-1))."""
    return RationalMatrix.from_function(N, N, lambda i, j: (-1) ** j * comb(j - 1, i - 1))


# ---------------------------------------------------------------------------
# block structure of D1(-e; N, l, e)


@dataclass
class BlockDecomposition:
    N: int
    l: int
    e: int
    D1: RationalMatrix
    Q1: RationalMatrix
    Q2: RationalMatrix
    M: RationalMatrix
    sign: int
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def q1_closed_form(N, l, e):
    if l >= N + 1 - e:
        return Fraction(0)
    value = Fraction((-1) ** (e * (e - 1) // 2))
    for k in range(e):
        value *= factorial(k) * factorial(2 * e - 2 * k - 1) * factorial(N + k - 2 * e)
    return value


def q2_closed_form(N, l, e):
    """Diagonal product of the lower-triangular block Q2.

    Every row except row l carries a factor 1/2, so the power of 1/2 is
    the number of rows of Q2 other than row l.
    """
    in_q2 = e + 1 <= l <= N - e
    value = Fraction(1, 2) ** (N - 2 * e - (1 if in_q2 else 0))
    for j in range(1, N - 2 * e + 1):
        value *= factorial(j - 1) * pochhammer(N - 2 * e - j + 1, N - j + 1)
    return value


def m_closed_form(N, e):
    value = Fraction(-2) ** (e * (e - 1) // 2 - e) * pochhammer(e, e)
    for i in range(1, e + 1):
        value *= factorial(i - 1) * pochhammer(Fraction(e - i + 1, 2), i - 1) * pochhammer(i - N, N - e)
    return value


def block_ranges(N, e):
    """Row/column ranges of Q2, Q1 and M inside D1(-e; N, l, e)."""
    return {
        "Q2": ((e + 1, N - e), (1, N - 2 * e)),
        "Q1": ((N + 1 - e, N), (N + 1 - 2 * e, N - e)),
        "M": ((1, e), (N + 1 - e, N)),
        "zero": [((e + 1, N), (N + 1 - e, N)), ((N + 1 - e, N), (1, N - 2 * e))],
    }


def verify_block_decomposition(N, l, e):
    """Check the block factorisation of det D1(-e; N, l, e).

    The matrix is blocked as

        rows 1..e      [  *    *   M ]
        rows e+1..N-e  [ Q2    *   0 ]
        rows N+1-e..N  [  0   Q1   0 ]

    with column groups 1..N-2e, N+1-2e..N-e, N+1-e..N, Q2 lower and Q1
    upper triangular.  Failures are collected by name rather than raised.
    """
    if not (N + 2) // 2 <= l <= N:
        raise ParameterError(f"need ceil((N+1)/2) <= l <= N, got l = {l}")
    if not 0 <= e <= N // 2:
        raise ParameterError("need 0 <= e <= N/2")
    D1 = build_D(ParamMatrixSpec(N, l, "D1", e), -e)
    rng = block_ranges(N, e)
    Q2 = D1.block(*rng["Q2"])
    Q1 = D1.block(*rng["Q1"])
    M = D1.block(*rng["M"])
    sign = (-1) ** (e * (N - e))
    out = BlockDecomposition(N, l, e, D1, Q1, Q2, M, sign)

    for rows, cols in rng["zero"]:
        blk = D1.block(rows, cols)
        if any(x != 0 for x in blk.entries):
            out.failures.append(("zero block", (rows, cols)))
    n2 = Q2.rows
    if any(Q2[i, j] != 0 for i in range(1, n2 + 1) for j in range(i + 1, n2 + 1)):
        out.failures.append(("Q2 lower triangular", None))
    if any(Q1[i, j] != 0 for i in range(1, e + 1) for j in range(1, i)):
        out.failures.append(("Q1 upper triangular", None))

    d = det_exact(D1)
    d_blocks = sign * det_exact(Q2) * det_exact(Q1) * det_exact(M)
    if d != d_blocks:
        out.failures.append(("det D1 = sign det Q2 det Q1 det M", (d, d_blocks)))
    checks = [
        ("det Q1", det_exact(Q1), q1_closed_form(N, l, e)),
        ("det Q2", det_exact(Q2), q2_closed_form(N, l, e)),
        ("det M", det_exact(M), m_closed_form(N, e)),
    ]
    if e >= N + 1 - l:
        checks.append(("det D1 vanishes", d, Fraction(0)))
    for name, got, want in checks:
        if got != want:
            out.failures.append((name, (want, got)))
    return out


# ---------------------------------------------------------------------------
# determinant of shifted products with a product formula


@dataclass(frozen=True)
class ProductDetInput:
    """X has length n; A and B hold A_2..A_n and B_2..B_n."""

    n: int
    X: tuple
    A: tuple
    B: tuple

    def __post_init__(self):
        if len(self.X) != self.n or len(self.A) != max(self.n - 1, 0) or len(self.B) != max(self.n - 1, 0):
            raise ValueError("inconsistent input lengths for the product determinant")


def _ab(seq, idx):
    return as_fraction(seq[idx - 2])


def product_matrix(inp):
    """Entries (X_i+A_n)...(X_i+A_{j+1}) (X_i+B_j)...(X_i+B_2)."""
    def entry(i, j):
        x = as_fraction(inp.X[i - 1])
        v = Fraction(1)
        for k in range(j + 1, inp.n + 1):
            v *= x + _ab(inp.A, k)
        for k in range(2, j + 1):
            v *= x + _ab(inp.B, k)
        return v
    return RationalMatrix.from_function(inp.n, inp.n, entry)


def product_det_formula(inp):
    """prod_{i<j} (X_i - X_j) * prod_{2<=i<=j<=n} (B_i - A_j)."""
    v = Fraction(1)
    X = [as_fraction(x) for x in inp.X]
    for i in range(inp.n):
        for j in range(i + 1, inp.n):
            v *= X[i] - X[j]
    for i in range(2, inp.n + 1):
        for j in range(i, inp.n + 1):
            v *= _ab(inp.B, i) - _ab(inp.A, j)
    return v


def product_det_specialization(N, e):
    """The inputs that turn the M block into the shifted-product form."""
    return ProductDetInput(
        e,
        tuple(Fraction(i) for i in range(1, e + 1)),
        tuple(Fraction(-1 - N) + Fraction(e - j + 1, 2) for j in range(2, e + 1)),
        tuple(Fraction(-j - N + 1) for j in range(2, e + 1)),
    )


def product_det_specialization_value(e):
    v = Fraction(1)
    for j in range(2, e + 1):
        v *= factorial(j - 1) * pochhammer(Fraction(e - j + 1, 2), j - 1)
    return v


# ---------------------------------------------------------------------------
# Step 2: vanishing column combinations at m = -e - 1/2


def lincomb_coefficient(N, l, e, k):
    return pochhammer(Fraction(2 * (N - e - l) + 1, 2), k) / ((-4) ** k * pochhammer(N - e - l + 1, k))


def lincomb_vector(N, l, e, k):
    """sum_{j=0..k} C(k,j) col(N-2e+k+j) - c_k col(N-2e) of D(-e-1/2; N, l).

    Vanishes for 1 <= k <= e <= N/2 - 1 and l <= (N+1)/2; the j = 0 term
    is needed.
    """
    D = build_D(ParamMatrixSpec(N, l), Fraction(-2 * e - 1, 2))
    c = lincomb_coefficient(N, l, e, k)
    out = []
    for i in range(1, N + 1):
        v = sum((comb(k, j) * D[i, N - 2 * e + k + j] for j in range(k + 1)), Fraction(0))
        out.append(v - c * D[i, N - 2 * e])
    return out


# ---------------------------------------------------------------------------
# Step 4: P(-e; N, l) from the block evaluations


def _forced_factor_counter(N):
    count = Counter()
    for i in range(1, N // 2 + 1):
        for t in range(N - 2 * i + 1):
            count[Fraction(i + t)] += 1
        for t in range(N - 2 * i):
            count[Fraction(2 * i + 1, 2) + t] += 1
    return count


def p_at_minus_e(N, l, e):
    """P(-e; N, l) = det D1(-e) / (forced factors / (m+e)^e) at m = -e.

    det D1(-e) is assembled from the closed forms of det Q1, det Q2 and
    det M; the denominator is evaluated after cancelling (m+e)^e.
    """
    if not (N + 2) // 2 <= l <= N or not 0 <= e <= N // 2:
        raise ParameterError("need ceil((N+1)/2) <= l <= N and 0 <= e <= N/2")
    det_d1 = (-1) ** (e * (N - e)) * q2_closed_form(N, l, e) * q1_closed_form(N, l, e) * m_closed_form(N, e)
    count = _forced_factor_counter(N)
    count[Fraction(e)] -= e
    assert count[Fraction(e)] == 0
    denom = Fraction(1)
    for shift, mult in count.items():
        denom *= (shift - e) ** mult
    return det_d1 / denom
