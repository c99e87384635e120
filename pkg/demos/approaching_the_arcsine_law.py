"""
Approaching the arcsine law
===========================

For m ~ a N and l ~ b N the share of tilings containing rhombus l tends to
(2/pi) arcsin(sqrt(b(1-b)) / sqrt((a+b)(a-b+1))).  The exact shares are
rationals; we convert them once to floats and watch the gap shrink.
"""

import sys

from lozenge.asymptotics import AsymptoticParams, arcsine_value, clp_density, convergence_table, write_csv

p = AsymptoticParams(1.0, 0.5)
print("limit:", arcsine_value(p), "arccot form:", clp_density(p))

rows = convergence_table(p, [4, 8, 16, 32, 64])
write_csv(rows, sys.stdout)

# The two closed forms of the limit agree across the plane.
worst = max(abs(arcsine_value(AsymptoticParams(a, b)) - clp_density(AsymptoticParams(a, b)))
            for a in (0.25, 0.5, 1, 2, 4) for b in (0.1, 0.3, 0.5, 0.7, 0.9))
print("largest disagreement:", worst)
