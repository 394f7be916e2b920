"""
Counting monomials against the resolution formula
=================================================

For x^p + y^q = z^2 with coprime p, q and pq even, every germ is a sum of
monomials x^a y^b and z x^a y^b with distinct orders along arcs, so the
series is a plain count. That count is an independent check of the
resolution-graph pipeline.
"""

from arcfilt import brieskorn_program, from_program, stabilization_poincare
from arcfilt.oracle import MonomialGerm, monomial_value, oracle_poincare, z_monomial_value

g = from_program(brieskorn_program(2, 3))
print("toric weights along the chain:", g.toric_weights)
x, y, z = MonomialGerm(1, 0, 0), MonomialGerm(0, 1, 0), MonomialGerm(0, 0, 1)
print("order of x, y, z:", monomial_value(x, g), monomial_value(y, g), z_monomial_value(z, g))

for p, q in [(2, 3), (2, 5), (3, 4), (4, 5), (2, 9)]:
    counted = oracle_poincare(p, q, 15)
    computed = stabilization_poincare(brieskorn_program(p, q), 15).series
    print(f"({p},{q}) counted {list(counted)[:8]}... same as pipeline: {counted == computed}")
