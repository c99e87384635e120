"""Limit law for the axis-rhombus proportion and convergence tables."""

import csv
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .closed_forms import AxisProblem, proportion

CSV_COLUMNS = ("N", "m", "l", "proportion_exact_num", "proportion_exact_den",
               "proportion_float", "limit", "gap")
CLAMP_TOL = 1e-12


class AsymptoticDomainError(ValueError):
    pass


@dataclass(frozen=True)
class AsymptoticParams:
    """Scaling m ~ a*N and l ~ b*N."""

    a: float
    b: float

    def __post_init__(self):
        if not self.a >= 0:
            raise AsymptoticDomainError(f"a must be >= 0, got {self.a}")
        if not 0 < self.b < 1:
            raise AsymptoticDomainError(f"b must lie in (0, 1), got {self.b}")


def arcsine_value(p):
    """(2/pi) arcsin( sqrt(b(1-b)) / sqrt((a+b)(a-b+1)) )."""
    a, b = p.a, p.b
    x = math.sqrt(b * (1 - b)) / math.sqrt((a + b) * (a - b + 1))
    if x > 1:
        if x - 1 > CLAMP_TOL:
            raise AsymptoticDomainError(f"arcsine argument {x} exceeds 1")
        x = 1.0
    return 2 / math.pi * math.asin(x)


def clp_density(p):
    """(1/pi) arccot( (a(1+a) - b(1-b)) / (2 sqrt(a(1+a) b(1-b))) ), arccot in (0, pi)."""
    a, b = p.a, p.b
    if a <= 0:
        raise AsymptoticDomainError("the arccot form needs a > 0")
    u, v = a * (1 + a), b * (1 - b)
    # arccot(t) = atan2(1, t) on the principal branch (0, pi)
    return math.atan2(2 * math.sqrt(u * v), u - v) / math.pi


def _round_half_up(x):
    return int(Decimal(repr(x)).quantize(Decimal(1), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class TableRow:
    N: int
    m: int
    l: int
    exact: object
    limit: float

    @property
    def value(self):
        return float(self.exact)

    @property
    def gap(self):
        return abs(self.value - self.limit)

    def csv_fields(self):
        return (self.N, self.m, self.l, self.exact.numerator, self.exact.denominator,
                repr(self.value), repr(self.limit), repr(self.gap))


def table_params(p, N):
    """(m, l) for a given N, or None when m rounds below 1."""
    m = _round_half_up(p.a * N)
    if m < 1:
        return None
    l = min(max(_round_half_up(p.b * N), 1), N)
    return m, l


def convergence_table(p, Ns, skipped=None):
    """Rows (N, m, l, exact proportion, limit) ordered by N.

    N values whose m rounds below 1 are left out; if ``skipped`` is a list
    they are appended to it.
    """
    limit = arcsine_value(p)
    rows = []
    for N in sorted(set(Ns)):
        ml = table_params(p, N)
        if ml is None:
            if skipped is not None:
                skipped.append(N)
            continue
        m, l = ml
        rows.append(TableRow(N, m, l, proportion(AxisProblem(N, m, l)), limit))
    return rows


def write_csv(rows, stream):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_fields())
