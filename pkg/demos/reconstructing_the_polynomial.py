"""
Recovering a polynomial from determinant samples
================================================

The weighted half determinant, after scaling rows, is a polynomial in m.
We sample it at m = 1, 2, ..., interpolate exactly, strip the forced
linear factors and compare the cofactor with the explicit sum.
"""

from lozenge.closed_forms import forced_factor_poly, p_closed_form
from lozenge.determinants import det_D_degree_bound, reconstruct_detD_polynomial, reconstruct_P

for N in range(1, 5):
    for l in range(1, N + 1):
        d = reconstruct_detD_polynomial(N, l)
        P = reconstruct_P(N, l, d)
        print(f"N={N} l={l}: deg det D = {d.degree} (bound {det_D_degree_bound(N)}), P = {P}")
        assert P == p_closed_form(N, l)

# The forced factors are products of shifted factorials in m.
print("forced factors for N=4:", forced_factor_poly(4))

# Reflecting m -> -N-m multiplies P by (-1)^(N+1).
P = reconstruct_P(4, 2)
print("P(-4-m) =", P.compose_affine(-1, -4))
