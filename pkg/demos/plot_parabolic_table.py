"""
Parabolic singularities and the two corollaries
===============================================

Three surfaces realize the three parabolic series. We compute each from a
curve resolution (or the tangent cone) and compare with the corollary
formulas for ordinary points of even multiplicity and tangential odd
points.
"""

from arcfilt import (
    brieskorn_program,
    ordinary_point_program,
    stabilization_poincare,
    tangent_cone_poincare,
    tangential_program,
)
from arcfilt.pipeline import corollary_even, corollary_odd_tangent

table = [
    ("x^6 + y^3 = z^2", stabilization_poincare(brieskorn_program(6, 3)).closed_form),
    ("x^4 + y^4 = z^2", stabilization_poincare(ordinary_point_program(4)).closed_form),
    ("cubic cone in C^3", tangent_cone_poincare(3, 2)),
]
for name, cf in table:
    print(f"{name:<20} {cf}")

print()
for m in (2, 4, 6, 8):
    got = stabilization_poincare(ordinary_point_program(m))
    print(f"ordinary {m}-fold point: {got.closed_form}  agrees: {got.series == corollary_even(m).series()}")
for m in (3, 5, 7):
    got = stabilization_poincare(tangential_program(m))
    print(f"tangential m={m}: {got.closed_form}  agrees: {got.series == corollary_odd_tangent(m).series()}")
