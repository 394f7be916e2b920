"""
The D4 surface singularity, step by step
========================================

The ordinary triple point x^3 + y^3 = 0 has odd multiplicity, so its
resolution graph is blown up once more on each branch before the series
formula applies. Here we print every intermediate object.
"""

from arcfilt import from_program, normalize_parity, ordinary_point_program, stabilization_poincare
from arcfilt.pipeline import stabilization_q
from arcfilt.series import dominated_coordinates

# one blow-up separates the three branches; all three arrows sit on E_1
g = from_program(ordinary_point_program(3))
print("minimal resolution:", g.self_intersections, "arrows", g.arrows, "m", g.m)

# m_1 = 3 is odd, so each arrow gets its own extra blow-up
g = normalize_parity(g)
print("intersection matrix:")
for row in g.intersection_matrix:
    print("   ", row)
print("(m_ij) = (-M)^-1:")
for row in g.m_matrix:
    print("   ", row)
print("m =", g.m, " sigma =", g.sigma, " chi =", g.chi)

# Q before reduction, and which coordinates the pruning step throws away
q = stabilization_q(g)
print("Q =", q)
print("dominated coordinates (0-based):", dominated_coordinates(q))

res = stabilization_poincare(g)
print("series:", list(res.series))
print("closed form:", res.closed_form)
