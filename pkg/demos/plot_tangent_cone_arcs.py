"""
Arcs on a surface with reduced tangent cone
===========================================

When the tangent cone is reduced, F_i is the i-th power of the maximal
ideal. The lower bound is clear; for the upper bound we lift arcs through
smooth points of the tangent cone and watch each monomial reach order
exactly its degree.
"""

import random

from arcfilt import tangent_cone_poincare
from arcfilt.oracle import arc_order, lift_arc, residual_order
from arcfilt.verification import A2_SURFACE, WITNESS_SURFACES, arc_witnesses

rng = random.Random(1)
arc = lift_arc(A2_SURFACE, (1, 1, 1), 6, rng)
print("lifted arc on x^3 + y^2 = z^2:")
for name, coefs in zip("xyz", (arc.x, arc.y, arc.z)):
    print(f"  {name}(s) = " + " + ".join(f"{c}*s^{k}" for k, c in enumerate(coefs) if c))
print("f along the arc vanishes to order", residual_order(A2_SURFACE, arc, 8))
print("order of xy along it:", arc_order({(1, 1, 0): 1}, arc, 6))

for name, (f, points) in WITNESS_SURFACES.items():
    wit = arc_witnesses(f, points)
    print(f"{name}: {sum(wit.values())}/{len(wit)} monomials of degree <= 5 hit their degree")

print("series for a reduced cubic cone surface:", tangent_cone_poincare(3, 2))
print("series for a quadric cone in C^5:", tangent_cone_poincare(2, 4))
