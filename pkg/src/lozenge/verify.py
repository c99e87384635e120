"""Verification suites over parameter grids.

Each suite takes ``max_N``, ``max_m`` and an oracle ``budget`` and returns a
:class:`VerificationReport`.  The default grid sizes are the ones the
acceptance tests use.
"""

import random
import time
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from . import closed_forms as cf
from . import determinants as dt
from . import hypergeometric as hg
from . import tiling
from .asymptotics import AsymptoticParams, arcsine_value, clp_density
from .closed_forms import AxisProblem, AxisSet, HexagonShape, ParameterError
from .exact import Polynomial, lagrange_interpolate, pochhammer_poly
from .report import VerificationReport


@lru_cache(maxsize=None)
def det_D_poly(N, l):
    return dt.reconstruct_detD_polynomial(N, l)


@lru_cache(maxsize=None)
def p_poly(N, l):
    return dt.reconstruct_P(N, l, det_D_poly(N, l))


# ---------------------------------------------------------------------------
# counts


def suite_macmahon(max_N=3, max_m=None, budget=None, extra=((4, 4, 2),)):
    """Exhaustive tiling enumeration against the product formula, sides 0..max_N."""
    rep = VerificationReport("macmahon", f"0 <= a,b,c <= {max_N} plus {list(extra)}")
    shapes = [(a, b, c) for a in range(max_N + 1) for b in range(max_N + 1) for c in range(max_N + 1)]
    for s in shapes + [s for s in extra if s not in shapes]:
        shape = HexagonShape(*s)
        rep.record({"a": s[0], "b": s[1], "c": s[2]}, cf.macmahon_count(shape),
                   tiling.enumerate_tilings(shape, budget=budget))
    return rep


def _axis_counts(parity, max_N, max_m, budget):
    rep = VerificationReport(f"axis-counts-{parity}", f"1 <= N <= {max_N}, 1 <= m <= {max_m}, 1 <= l <= N")
    for N in range(1, max_N + 1):
        for m in range(1, max_m + 1):
            for l in range(1, N + 1):
                p = AxisProblem(N, m, l, parity)
                rep.record({"N": N, "m": m, "l": l, "parity": parity},
                           cf.fixed_rhombus_count(p), tiling.count_with_fixed_axis(p, budget))
    return rep


def suite_theorem1(max_N=4, max_m=3, budget=None):
    rep = _axis_counts("even", max_N, max_m, budget)
    rep.suite = "theorem1"
    return rep


def suite_theorem2(max_N=4, max_m=3, budget=None):
    rep = _axis_counts("odd", max_N, max_m, budget)
    rep.suite = "theorem2"
    return rep


def suite_lemma_simple(max_N=8, max_m=8, budget=None):
    rep = VerificationReport("lemma-simple", f"0 <= N <= {max_N}, 0 <= m <= {max_m}")
    for N in range(max_N + 1):
        for m in range(max_m + 1):
            rep.record({"N": N, "m": m}, cf.lemma_simple_rhs(N, m),
                       dt.det_exact(dt.build_simple_matrix(N, m)))
    return rep


def suite_lemma_complex(max_N=7, max_m=6, budget=None):
    rep = VerificationReport("lemma-complex", f"1 <= N <= {max_N}, 1 <= m <= {max_m}, 1 <= l <= N")
    for N in range(1, max_N + 1):
        for m in range(1, max_m + 1):
            for l in range(1, N + 1):
                rep.record({"N": N, "m": m, "l": l}, cf.lemma_complex_rhs(N, m, l),
                           dt.det_exact(dt.build_complex_matrix(N, m, (l,))))
    return rep


def factorization_check(s, budget=None):
    """Brute-force count against the product of the two half counts.

    Even parity: 2^(N-r) S(N-1, m) C(N, m, L); odd parity:
    2^(N+1-r) S(N+1, m-1) C(N, m, L).  The halves are also counted
    directly from the cut triangle regions, and the weighted half against
    its path determinant.
    """
    if not isinstance(s, AxisSet):
        s = AxisSet(s.N, s.m, (s.l,), s.parity)
    N, m, L, r = s.N, s.m, s.L, s.r
    params = {"N": N, "m": m, "L": list(L), "parity": s.parity}
    rep = VerificationReport("factorization", f"N={N}, m={m}, L={list(L)}, {s.parity}")
    if s.parity == "even":
        power, simple = N - r, tiling.simple_half_count(N - 1, m, budget)
    else:
        power, simple = N + 1 - r, tiling.simple_half_count(N + 1, m - 1, budget)
    weighted = tiling.weighted_half_count(N, m, L, budget)
    brute = tiling.count_with_fixed_axis(s, budget)
    rep.record(params, brute, 2 ** power * simple * weighted, "path factorization")
    cut_power, cut_plain, cut_weighted = tiling.half_region_factorization(s, budget)
    rep.record(params, brute, 2 ** cut_power * cut_plain * cut_weighted, "region factorization")
    rep.record(params, simple, cut_plain, "plain half: paths vs regions")
    rep.record(params, weighted, cut_weighted, "weighted half: paths vs regions")
    rep.record(params, weighted, dt.det_exact(dt.build_complex_matrix(N, m, L)), "weighted half: determinant")
    return rep


def suite_factorization(max_N=4, max_m=2, budget=None):
    rep = VerificationReport("factorization",
                             f"1 <= N <= {max_N}, 1 <= m <= {max_m}, |L| in (1, 2), both parities")
    for parity in cf.PARITIES:
        for N in range(1, max_N + 1):
            for m in range(1, max_m + 1):
                for size in (1, 2):
                    for L in combinations(range(1, N + 1), size):
                        rep.merge(factorization_check(AxisSet(N, m, L, parity), budget))
    return rep


# ---------------------------------------------------------------------------
# polynomial identities in m


def _aux_facts(rep, N, l):
    d = det_D_poly(N, l)
    params = {"N": N, "l": l}
    rep.record(params, d, det_D_poly(N, N + 1 - l), "fact I: l <-> N+1-l")
    rep.record(params, d * (-1) ** (comb(N + 1, 2) - 1), d.compose_affine(-1, -N), "fact II: m <-> -N-m")


def suite_aux_facts(max_N=6, max_m=4, budget=None):
    rep = VerificationReport("aux-facts", f"1 <= N <= {max_N}, 1 <= l <= N; counts for m <= {max_m}")
    for N in range(1, max_N + 1):
        for l in range(1, N + 1):
            _aux_facts(rep, N, l)
            rep.merge(hg.check_reflection_identity(N, l, Fraction(7, 3)))
            for m in range(1, max_m + 1):
                for parity in cf.PARITIES:
                    p, q = AxisProblem(N, m, l, parity), AxisProblem(N, m, N + 1 - l, parity)
                    rep.record({"N": N, "m": m, "l": l, "parity": parity},
                               cf.fixed_rhombus_count(p), cf.fixed_rhombus_count(q), "count symmetry")
                rep.record({"N": N, "m": m, "l": l}, cf.proportion(AxisProblem(N, m, l, "even")),
                           cf.proportion(AxisProblem(N, m, l, "odd")), "parity independence")
    return rep


def column_operation_check(N, l, e):
    """After the column additions each modified entry is (m+e) times the D1 entry.

    Holds for l > e, which covers the range l >= (N+1)/2 where D1 is used;
    for l <= e the row-l entries need not carry the factor.
    """
    if l <= e:
        raise ParameterError("column operation factor needs l > e")
    rep = VerificationReport("column-operation", f"N={N}, l={l}, e={e}")
    samples = list(range(1, N + 3))
    mats = {m: dt.column_operated_D(N, l, e, m) for m in samples}
    d1 = {m: dt.build_D(dt.ParamMatrixSpec(N, l, "D1", e), m) for m in samples}
    lin = Polynomial([e, 1])
    for k in range(e):
        j = N + 1 - 2 * e + k
        for i in range(1, N + 1):
            entry = lagrange_interpolate([(m, mats[m][i, j]) for m in samples])
            q, r = entry.divmod(lin)
            params = {"N": N, "l": l, "e": e, "row": i, "col": j}
            rep.record(params, Polynomial(), r, "divisible by m+e")
            rep.record(params, lagrange_interpolate([(m, d1[m][i, j]) for m in samples]), q, "quotient is D1")
    return rep


def product_det_random_check(rng, n, trials=3):
    rep = VerificationReport("product-determinant", f"n={n}, {trials} seeded random inputs")

    def rand():
        return Fraction(rng.randint(-20, 20), rng.randint(1, 9))

    for t in range(trials):
        inp = dt.ProductDetInput(n, tuple(rand() for _ in range(n)),
                                 tuple(rand() for _ in range(n - 1)), tuple(rand() for _ in range(n - 1)))
        rep.record({"n": n, "trial": t}, dt.product_det_formula(inp), dt.det_exact(dt.product_matrix(inp)))
    return rep


def suite_steps(max_N=6, max_m=4, budget=None, seed=20240611):
    rep = VerificationReport("steps", f"1 <= N <= {max_N}, all l, e; scaling link for m <= {max_m}")
    for N in range(1, max_N + 1):
        forced = cf.forced_factor_poly(N)
        for l in range(1, N + 1):
            params = {"N": N, "l": l}
            d = det_D_poly(N, l)
            P = p_poly(N, l)
            rep.record(params, cf.p_closed_form(N, l), P, "P reconstructed = closed form")
            rep.record(params, d, P * forced, "det D = forced factors * P")
            for i in range(1, N // 2 + 1):
                rep.record({**params, "i": i}, True, pochhammer_poly(i, N - 2 * i + 1).divides(d), "step 1 factor")
            for e in range(1, N - 1):
                rep.record({**params, "e": e}, True, dt.step2_factor_poly(N, e).divides(d), "step 2 factor")
            rep.record(params, True, d.degree <= dt.det_D_degree_bound(N), "degree of det D")
            rep.record(params, True, P.degree <= N - 1, "degree of P")
            if N - 2 * l + 1 >= 0:
                rep.record(params, True, pochhammer_poly(l, N - 2 * l + 1).divides(P), "(m+l)_{N-2l+1} divides P")
            rep.record(params, P * (-1) ** (N + 1), P.compose_affine(-1, -N), "P(-N-m) = (-1)^(N+1) P(m)")
            _aux_facts(rep, N, l)
            for m in range(1, max_m + 1):
                scaled = dt.det_exact(dt.build_complex_matrix(N, m, (l,))) / cf.row_scale(N, m)
                rep.record({**params, "m": m}, d(m), scaled, "scaling link")
            for e in range(1, min(N // 2, l - 1) + 1):
                rep.merge(column_operation_check(N, l, e))
            if l >= (N + 2) // 2:
                for e in range(N // 2 + 1):
                    bd = dt.verify_block_decomposition(N, l, e)
                    rep.cases += 1
                    for name, detail in bd.failures:
                        rep.fail({**params, "e": e}, name, detail, "block decomposition", count=False)
                    rep.record({**params, "e": e}, P(-e), dt.p_at_minus_e(N, l, e), "P(-e) from blocks")
    rng = random.Random(seed)
    for n in range(0, 5):
        rep.merge(product_det_random_check(rng, n))
    for N in range(1, max_N + 1):
        for e in range(1, N // 2 + 1):
            inp = dt.product_det_specialization(N, e)
            rep.record({"N": N, "e": e}, dt.product_det_specialization_value(e), dt.product_det_formula(inp),
                       "specialization value")
            rep.record({"N": N, "e": e}, dt.product_det_formula(inp),
                       dt.det_exact(dt.product_matrix(inp)), "specialization determinant")
    return rep


# ---------------------------------------------------------------------------
# hypergeometric identities


_CHU_PARAMS = (Fraction(1), Fraction(1, 2), Fraction(-7, 3), Fraction(5, 2), Fraction(3))


def suite_hypergeometric(max_N=6, max_m=4, budget=None):
    rep = VerificationReport("hypergeometric", f"1 <= N <= {max_N}, 1 <= m <= {max_m}, all valid l, e, k")
    for n in range(max_N + 1):
        for a in _CHU_PARAMS:
            for c in _CHU_PARAMS:
                rep.merge(hg.check_chu_vandermonde(a, c, n))
        for A2 in (Fraction(1, 2), Fraction(-3, 4), Fraction(2)):
            rep.merge(hg.check_contiguous(Fraction(5, 2), -n, A2, Fraction(3), Fraction(7, 2)))
    for N in range(1, max_N + 1):
        for m in range(1, max_m + 1):
            for l in range(1, N + 1):
                rep.merge(hg.check_whipple_special(N, m, l))
                rep.merge(hg.check_bailey_special(N, m, l))
            for i in range(1, N + 1):
                for j in range(2, N + 1):
                    try:
                        rep.merge(hg.check_symmetry_series(N, m, i, j))
                    except ParameterError:
                        pass  # lower parameter 3-2i+N hits zero: series undefined
        for l in range(1, N + 1):
            rep.merge(hg.check_column_relations(N, l))
        for l in range(1, (N + 1) // 2 + 1):
            for e in range(1, N // 2):
                for k in range(1, e + 1):
                    rep.merge(hg.check_column_combination(N, l, e, k))
    return rep


# ---------------------------------------------------------------------------
# conjectures


CONJECTURE_SHIFT = {"consecutive": 0, "skip1": 1, "skip2": 2}


def conjecture_case(pattern, N, m, r, parity, budget=None):
    """Conjectured value, determinant route and brute force for one case."""
    s = AxisSet(N, m, cf.conjecture_positions(pattern, r), parity)
    if parity == "even":
        power, simple = N - r, dt.det_exact(dt.build_simple_matrix(N - 1, m))
    else:
        power, simple = N + 1 - r, dt.det_exact(dt.build_simple_matrix(N + 1, m - 1))
    det_route = 2 ** power * simple * dt.det_exact(dt.build_complex_matrix(N, m, s.L))
    brute = tiling.count_with_fixed_axis(s, budget)
    return cf.conjecture_count(pattern, N, m, r, parity), det_route, brute


def suite_conjectures(max_N=4, max_m=2, budget=None):
    rep = VerificationReport("conjectures",
                             f"r <= N - shift <= {max_N} - shift (shift 0, 1, 2), 1 <= m <= {max_m}, both parities")
    for pattern, shift in CONJECTURE_SHIFT.items():
        for parity in cf.PARITIES:
            for N in range(1 + shift, max_N + 1):
                for m in range(1, max_m + 1):
                    for r in range(1, N - shift + 1):
                        params = {"pattern": pattern, "N": N, "m": m, "r": r, "parity": parity}
                        conj, det_route, brute = conjecture_case(pattern, N, m, r, parity, budget)
                        rep.record(params, brute, conj, "conjecture vs brute force")
                        rep.record(params, brute, det_route, "determinant vs brute force")
    return rep


# ---------------------------------------------------------------------------
# asymptotics


A_GRID = (0.25, 0.5, 1.0, 2.0, 4.0)
B_GRID = tuple(i / 10 for i in range(1, 10))
LIMIT_AT_ONE_HALF = 0.216344


def suite_asymptotics(max_N=60, max_m=None, budget=None):
    """Arcsine form against the arccot form, and the exact proportion at N = max_N."""
    rep = VerificationReport("asymptotics", f"a in {list(A_GRID)}, b in 0.1..0.9; N = {max_N}")
    for a in A_GRID:
        for b in B_GRID:
            p = AsymptoticParams(a, b)
            x, y = arcsine_value(p), clp_density(p)
            params = {"a": a, "b": b}
            if abs(x - y) > 1e-12:
                rep.fail(params, x, y, "arcsine vs arccot within 1e-12")
            else:
                rep.cases += 1
            z = arcsine_value(AsymptoticParams(a, 1 - b))
            if abs(x - z) > 1e-15:
                rep.fail(params, x, z, "b <-> 1-b within 1e-15")
            else:
                rep.cases += 1
    N = max_N
    m, l = N, max(N // 2, 1)
    value = float(cf.proportion(AxisProblem(N, m, l)))
    params = {"N": N, "m": m, "l": l}
    if abs(value - LIMIT_AT_ONE_HALF) > 0.02:
        rep.fail(params, LIMIT_AT_ONE_HALF, value, "proportion within 0.02 of the limit")
    else:
        rep.cases += 1
    return rep


SUITES = {
    "macmahon": suite_macmahon,
    "theorem1": suite_theorem1,
    "theorem2": suite_theorem2,
    "lemma-simple": suite_lemma_simple,
    "lemma-complex": suite_lemma_complex,
    "factorization": suite_factorization,
    "aux-facts": suite_aux_facts,
    "steps": suite_steps,
    "hypergeometric": suite_hypergeometric,
    "conjectures": suite_conjectures,
    "asymptotics": suite_asymptotics,
}


def run_suite(name, max_N=None, max_m=None, budget=None):
    """Run a named suite; unset grid bounds fall back to the suite defaults."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    kwargs = {"budget": budget}
    if max_N is not None:
        kwargs["max_N"] = max_N
    if max_m is not None:
        kwargs["max_m"] = max_m
    t0 = time.perf_counter()
    rep = SUITES[name](**kwargs)
    rep.elapsed = time.perf_counter() - t0
    return rep
