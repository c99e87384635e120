"""
Counting tilings that contain an axis rhombus
=============================================

A hexagon with sides N, 2m, N, N, 2m, N has N rhombi sitting across its
horizontal symmetry axis.  We count the tilings containing one of them
three ways: the closed formula, a memoized matching count, and the
factorization into two half regions.
"""

from fractions import Fraction

from lozenge import AxisProblem, AxisSet, fixed_rhombus_count, macmahon_count
from lozenge.tiling import count_with_fixed_axis, simple_half_count, weighted_half_count

# The total number of tilings is MacMahon's box product.
N, m = 3, 2
p = AxisProblem(N, m, 1)
total = macmahon_count(p.shape)
print(f"hexagon {p.shape}: {total} tilings")

# Count the tilings containing rhombus l, for every l.
for l in range(1, N + 1):
    p = AxisProblem(N, m, l)
    formula = fixed_rhombus_count(p)
    brute = count_with_fixed_axis(p)
    print(f"  l={l}: formula {formula}, matching count {brute}, share {Fraction(formula, total)}")

# Cutting along the axis splits a tiling into a plain half and a weighted
# half, each a family of nonintersecting lattice paths.
s = AxisSet(N, m, (1,))
halves = 2 ** (N - 1) * simple_half_count(N - 1, m) * weighted_half_count(N, m, s.L)
print(f"2^{N - 1} * S * C = {halves}")

# The odd hexagon N+1, 2m-1, N+1 gives the same share of all tilings.
q = AxisProblem(N, m, 1, "odd")
print(f"odd hexagon {q.shape}: {fixed_rhombus_count(q)} of {macmahon_count(q.shape)}")
