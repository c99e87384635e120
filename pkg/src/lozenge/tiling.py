"""Brute-force ground truth for rhombus tilings and lattice path families.

Geometry
--------
Points of the triangular lattice are written ``x*u + y*v`` with ``u`` at 0
degrees and ``v`` at 60 degrees.  Unit triangles are addressed by
``(x, y, orientation)``::

    up   (x, y, 'U'): corners (x, y), (x+1, y), (x, y+1)
    down (x, y, 'D'): corners (x+1, y), (x, y+1), (x+1, y+1)

so ``U(x,y)`` borders ``D(x,y)``, ``D(x-1,y)`` and ``D(x,y-1)``.  The hexagon
with sides a, b, c, a, b, c is

    0 <= y <= b + c,   -c <= x <= a,   0 <= x + y <= a + b

and a rhombus tiling is a perfect pairing of adjacent up/down triangles.

For the symmetric hexagon with sides N, M, N (a = c = N, b = M) the
reflection through the midpoints of the two sides of length M is
``(x, y) -> (x, N + M - x - y)``.  The triangles it fixes lie on the axis
and alternate down/up from left to right; the axis rhombi are the pairs
``D(x-1, y) + U(x, y)`` with ``x + 2y = N + M - 1``::

          side M
            |      axis rhombus l = 1, 2, ..., N  (left to right)
            |     ____ ____ ____
    --------+----<____X____X____>------ symmetry axis
            |
            |
          side M

For M = 2m there are N of them (x = -N+1, -N+3, ..., N-1); for the
hexagon N+1, 2m-1, N+1 again N of them (same x values).
"""

import os
import sys
from fractions import Fraction
from itertools import combinations

from .closed_forms import AxisProblem, AxisSet, HexagonShape

DEFAULT_BUDGET = 10**7


def default_budget():
    value = os.environ.get("LOZENGE_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """The brute-force search visited more states than allowed."""


# ----------------------------------------------------------------------------
# triangle grid


def hexagon_cells(shape):
    """All unit triangles of the (a, b, c) hexagon, sorted."""
    a, b, c = shape.a, shape.b, shape.c

    def inside(x, y):
        return 0 <= y <= b + c and -c <= x <= a and 0 <= x + y <= a + b

    cells = []
    for y in range(0, b + c + 1):
        for x in range(-c - 1, a + 1):
            if inside(x, y) and inside(x + 1, y) and inside(x, y + 1):
                cells.append((x, y, "U"))
            if inside(x + 1, y) and inside(x, y + 1) and inside(x + 1, y + 1):
                cells.append((x, y, "D"))
    cells.sort(key=_cell_order)
    return cells


def _cell_order(cell):
    x, y, o = cell
    return (y, x, o == "D")


def neighbours(cell):
    x, y, o = cell
    if o == "U":
        return [(x, y, "D"), (x - 1, y, "D"), (x, y - 1, "D")]
    return [(x, y, "U"), (x + 1, y, "U"), (x, y + 1, "U")]


class TriangleGrid:
    """A finite region of unit triangles with its adjacency."""

    def __init__(self, cells):
        self.cells = sorted(set(cells), key=_cell_order)
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.adj = []
        for c in self.cells:
            self.adj.append(sorted(self.index[n] for n in neighbours(c) if n in self.index))

    @classmethod
    def hexagon(cls, shape):
        return cls(hexagon_cells(shape))

    def __len__(self):
        return len(self.cells)


def symmetric_shape(problem):
    """The hexagon in which an AxisProblem/AxisSet lives."""
    if problem.parity == "even":
        return HexagonShape(problem.N, 2 * problem.m, problem.N)
    return HexagonShape(problem.N + 1, 2 * problem.m - 1, problem.N + 1)


def axis_rhombus(shape, l):
    """The two cells of the l-th axis rhombus (1-based, from the left)."""
    if shape.a != shape.c:
        raise ValueError("axis rhombi need a hexagon with sides N, M, N")
    n, M = shape.a, shape.b
    count = n if M % 2 == 0 else n - 1
    if not 1 <= l <= count:
        raise ValueError(f"l out of range 1..{count}")
    x = -n + (1 if M % 2 == 0 else 2) + 2 * (l - 1)
    y2 = n + M - 1 - x
    assert y2 % 2 == 0
    y = y2 // 2
    return (x - 1, y, "D"), (x, y, "U")


def axis_rhombus_count(shape):
    return sum(1 for _ in _axis_positions(shape))


def _axis_positions(shape):
    l = 1
    while True:
        try:
            axis_rhombus(shape, l)
        except ValueError:
            return
        yield l
        l += 1


# ----------------------------------------------------------------------------
# enumeration


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.visited = 0

    def tick(self):
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExceeded(f"enumeration budget of {self.budget} states exceeded")


def iter_tilings(grid, budget=None):
    """Yield every tiling as a tuple of (cell_i, cell_j) index pairs.

    Plain depth-first search: the first uncovered cell in grid order is
    paired with each of its uncovered neighbours in turn.
    """
    budget = default_budget() if budget is None else budget
    counter = _Counter(budget)
    n = len(grid)
    covered = [False] * n
    pairs = []

    def first_free(start):
        while start < n and covered[start]:
            start += 1
        return start

    def rec(start):
        counter.tick()
        i = first_free(start)
        if i == n:
            yield tuple(pairs)
            return
        covered[i] = True
        for j in grid.adj[i]:
            if not covered[j]:
                covered[j] = True
                pairs.append((i, j))
                yield from rec(i + 1)
                pairs.pop()
                covered[j] = False
        covered[i] = False

    if n % 2:
        return
    yield from rec(0)


def enumerate_tilings(shape, visitor=None, budget=None):
    """Number of rhombus tilings of the (a, b, c) hexagon by exhaustive search.

    ``visitor``, if given, is called once per tiling with a tuple of
    rhombi, each rhombus a pair of cell addresses.
    """
    grid = TriangleGrid.hexagon(shape)
    count = 0
    for tiling in iter_tilings(grid, budget):
        count += 1
        if visitor is not None:
            visitor(tuple((grid.cells[i], grid.cells[j]) for i, j in tiling))
    return count


def count_matchings(grid, removed=(), budget=None, weights=None):
    """(Weighted) number of perfect matchings of ``grid`` minus ``removed``.

    Memoized on the frontier: once every cell before position i is covered
    the rest of the search only depends on which later cells are covered,
    so the state is (i, bitmask of covered cells at positions >= i).
    ``weights`` maps frozenset({cell, cell}) to a Fraction weight; pairs not
    listed have weight 1.
    """
    budget = default_budget() if budget is None else budget
    counter = _Counter(budget)
    n = len(grid)
    start_mask = 0
    for c in removed:
        start_mask |= 1 << grid.index[c]
    if (n - len(set(removed))) % 2:
        return 0
    wt = {}
    if weights:
        for pair, w in weights.items():
            a, b = tuple(pair)
            if a in grid.index and b in grid.index:
                i, j = grid.index[a], grid.index[b]
                wt[(i, j)] = wt[(j, i)] = w
    memo = {}
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def rec(i, mask):
        # mask holds covered bits for positions >= i
        while i < n and (mask >> i) & 1:
            i += 1
        if i == n:
            return 1
        # bits below i are all covered; drop them so equal frontiers share a key
        key = (i, mask >> i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        counter.tick()
        total = 0
        for j in grid.adj[i]:
            if j > i and not (mask >> j) & 1:
                sub = rec(i + 1, mask | (1 << j))
                if sub:
                    total += sub * wt[(i, j)] if (i, j) in wt else sub
        memo[key] = total
        return total

    return rec(0, start_mask)


def _axis_set_of(p):
    if isinstance(p, AxisSet):
        return p
    return AxisSet(p.N, p.m, (p.l,), p.parity)


def count_with_fixed_axis(p, budget=None, method="memo"):
    """Number of tilings of the symmetric hexagon containing the axis rhombi.

    ``method="memo"`` counts matchings of the hexagon with the fixed rhombi
    removed (memoized search); ``method="dfs"`` runs the plain exhaustive
    search over all tilings and tests each one for membership.
    """
    s = _axis_set_of(p)
    shape = symmetric_shape(s)
    rhombi = [axis_rhombus(shape, l) for l in s.L]
    if method == "dfs":
        wanted = [frozenset(r) for r in rhombi]
        grid = TriangleGrid.hexagon(shape)
        count = 0
        for tiling in iter_tilings(grid, budget):
            have = {frozenset((grid.cells[i], grid.cells[j])) for i, j in tiling}
            if all(w in have for w in wanted):
                count += 1
        return count
    if method != "memo":
        raise ValueError(f"unknown method {method!r}")
    grid = TriangleGrid.hexagon(shape)
    removed = [c for r in rhombi for c in r]
    return count_matchings(grid, removed, budget)


# ----------------------------------------------------------------------------
# halves of the symmetric hexagon


def half_regions(p):
    """Cut the symmetric hexagon (fixed rhombi removed) along the axis.

    Returns ``(plain_cells, weighted_cells, weights)``.  Every axis
    triangle keeps only its edge to the side holding ``weighted_cells`` and
    its edge along the axis; edges along the axis get weight 1/2.  The
    number of tilings containing the fixed rhombi is then
    ``2**(w) * R(plain) * R~(weighted)`` with ``w`` half the number of
    remaining axis triangles.
    """
    s = _axis_set_of(p)
    shape = symmetric_shape(s)
    total = shape.a + shape.b
    fixed = {c for l in s.L for c in axis_rhombus(shape, l)}

    def side(cell):
        x, y, o = cell
        return x + 2 * y - (total - 1 if o == "U" else total - 2)

    plain, weighted, axis = [], [], []
    for c in hexagon_cells(shape):
        if c in fixed:
            continue
        sd = side(c)
        if sd < 0:
            plain.append(c)
        elif sd > 0:
            weighted.append(c)
        else:
            axis.append(c)
    weights = {}
    axis_set = set(axis)
    for c in axis:
        if c[2] == "U":
            x, y, _ = c
            partner = (x - 1, y, "D")
            if partner in axis_set:
                weights[frozenset((c, partner))] = Fraction(1, 2)
    return plain, weighted + axis, weights, len(axis)


def half_region_factorization(p, budget=None):
    """(power, R(plain half), weighted R~(other half)) by direct matching."""
    plain, weighted, weights, n_axis = half_regions(p)
    g_plain = TriangleGrid(plain)
    # the cut removes every edge from an axis triangle into the plain half,
    # which holds automatically since the plain half is a separate grid
    r_plain = count_matchings(g_plain, budget=budget)
    g_w = TriangleGrid(weighted)
    r_w = count_matchings(g_w, budget=budget, weights=weights)
    return n_axis // 2, r_plain, Fraction(r_w)


# ----------------------------------------------------------------------------
# lattice paths


def _paths(start, end):
    """All lattice paths with steps (1, 0) and (0, -1) from start to end."""
    (x0, y0), (x1, y1) = start, end
    h, v = x1 - x0, y0 - y1
    if h < 0 or v < 0:
        return
    for horiz in combinations(range(h + v), h):
        hs = set(horiz)
        x, y = x0, y0
        pts = [(x, y)]
        for step in range(h + v):
            if step in hs:
                x += 1
            else:
                y -= 1
            pts.append((x, y))
        yield pts


def _nonintersecting_sum(endpoints, weight_of, budget):
    counter = _Counter(budget)
    options = []
    for start, end in endpoints:
        options.append([(frozenset(p), weight_of(len(options), p)) for p in _paths(start, end)])
    total = Fraction(0)

    def rec(k, used, w):
        nonlocal total
        counter.tick()
        if k == len(options):
            total += w
            return
        for pts, pw in options[k]:
            if used.isdisjoint(pts):
                rec(k + 1, used | pts, w * pw)

    rec(0, frozenset(), Fraction(1))
    return total


def simple_half_count(N, m, budget=None):
    """Nonintersecting families with P_i from (i, i) to (2i, i-m)."""
    budget = default_budget() if budget is None else budget
    endpoints = [((i, i), (2 * i, i - m)) for i in range(1, N + 1)]
    total = _nonintersecting_sum(endpoints, lambda k, p: 1, budget)
    assert total.denominator == 1
    return total.numerator


def weighted_half_count(N, m, L, budget=None):
    """Weighted nonintersecting families for the lower half C(N, m, L).

    P_i runs from (2i-N-1, i+m) to (i, i), or from (2i-N, i+m) when i is in
    L; a path with i not in L weighs 1/2 if its first step is horizontal.
    """
    budget = default_budget() if budget is None else budget
    Ls = set(L)
    endpoints = []
    for i in range(1, N + 1):
        sx = 2 * i - N if i in Ls else 2 * i - N - 1
        endpoints.append(((sx, i + m), (i, i)))

    def weight(k, pts):
        i = k + 1
        if i not in Ls and len(pts) > 1 and pts[1][0] != pts[0][0]:
            return Fraction(1, 2)
        return 1

    return _nonintersecting_sum(endpoints, weight, budget)


def format_tiling(tiling):
    """One-line stable rendering of a tiling: sorted rhombi as cell pairs."""
    rh = sorted(tuple(sorted(r, key=_cell_order)) for r in tiling)
    return " ".join(
        f"{a[2]}({a[0]},{a[1]})-{b[2]}({b[0]},{b[1]})" for a, b in rh)


def dump_tilings(shape, stream, budget=None):
    """Write every tiling of the hexagon, one per line, in search order."""
    lines = []
    enumerate_tilings(shape, visitor=lambda t: lines.append(format_tiling(t)), budget=budget)
    for line in sorted(lines):
        stream.write(line + "\n")
    return len(lines)
