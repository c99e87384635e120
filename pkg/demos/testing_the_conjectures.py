"""
Testing conjectured counts for several axis rhombi
==================================================

With rhombi 1..r fixed (or 1..r-1 and r+1, or 1..r-1 and r+2) there are
conjectured product formulas.  We compare them with the determinant route
and with a direct matching count.
"""

from lozenge.verify import conjecture_case

for pattern in ("consecutive", "skip1", "skip2"):
    for N in range(2, 5):
        for r in range(1, N + 1):
            try:
                conj, det_route, brute = conjecture_case(pattern, N, 2, r, "even")
            except ValueError:
                continue
            mark = "ok" if conj == det_route == brute else "MISMATCH"
            print(f"{pattern:11s} N={N} m=2 r={r}: {brute} {mark}")
