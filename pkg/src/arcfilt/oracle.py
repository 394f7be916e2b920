"""Brute-force cross-checks that do not go through the pruned expansion path.

* monomial counting for stabilizations of coprime x^p + y^q (pq even), where
  every component of the resolution is toric and the filtration is monomial;
* naive factor-by-factor expansion and reduction of a factored series;
* direct arc-order evaluation of polynomials along truncated arcs;
* the r = 1 divisorial filtration checked against its definition.

The counting oracle is restricted to coprime exponents with pq even: then
the strict transform already meets an even-multiplicity component and no
blow-up at a non-toric point is needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Mapping, Sequence, Union

from .resolution import DualGraph, brieskorn_program, from_program
from .series import FactoredSeries, OneVarSeries, expand, poincare_pi, reduce

Number = Union[int, Fraction]


@dataclass(frozen=True)
class MonomialGerm:
    """x^a y^b z^c on the stabilization, with c in {0, 1}."""

    a: int
    b: int
    c: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.c not in (0, 1):
            raise ValueError(f"bad monomial germ {self}")


def _weights(graph: DualGraph):
    if graph.toric_weights is None:
        raise ValueError("graph carries no toric weights")
    return graph.toric_weights


def monomial_value(g: MonomialGerm, graph: DualGraph) -> int:
    """Arc-filtration order of x^a y^b: min_i sigma_i (a p_i + b q_i)."""
    if g.c != 0:
        raise ValueError("use z_monomial_value for germs containing z")
    return min(s * (g.a * p + g.b * q) for s, (p, q) in zip(graph.sigma, _weights(graph)))


def z_monomial_value(g: MonomialGerm, graph: DualGraph) -> int:
    """Arc-filtration order of z x^a y^b: min_i sigma_i (a p_i + b q_i + m_i / 2)."""
    if g.c != 1:
        raise ValueError("z_monomial_value needs a germ containing z")
    vals = []
    for s, (p, q), m in zip(graph.sigma, _weights(graph), graph.m):
        v = s * (Fraction(g.a * p + g.b * q) + Fraction(m, 2))
        assert v.denominator == 1
        vals.append(int(v))
    return min(vals)


def oracle_poincare(p: int, q: int, n: int) -> OneVarSeries:
    """Count monomials of each arc order on x^p + y^q = z^2 (coprime p, q; pq even)."""
    if p < 2 or q < 2:
        raise ValueError("exponents must be >= 2")
    if gcd(p, q) != 1 or (p * q) % 2:
        raise ValueError(f"oracle needs coprime exponents with pq even, got ({p}, {q})")
    graph = from_program(brieskorn_program(p, q))
    # m_i of a generic x^p + y^q is the smaller of the two monomial values
    for (pi, qi), m in zip(graph.toric_weights, graph.m):
        assert m == min(p * pi, q * qi), "toric weights disagree with the linear algebra"
    c = [0] * (n + 1)
    # every value is >= a + b since all sigma_i, p_i, q_i >= 1
    for a in range(n + 1):
        for b in range(n + 1 - a):
            for z in (0, 1):
                g = MonomialGerm(a, b, z)
                v = z_monomial_value(g, graph) if z else monomial_value(g, graph)
                if v <= n:
                    c[v] += 1
    return OneVarSeries(c)


def brute_reduce(fs: FactoredSeries, n: int) -> OneVarSeries:
    """Reduction of ``fs`` through degree ``n`` by plain full expansion, no pruning."""
    for w, e in fs.factors:
        if e > 0 and min(w) < 1:
            raise ValueError(f"geometric factor with zero component {w} is rejected")
    poly: dict[tuple[int, ...], int] = dict(fs.numerator)
    for w, e in fs.factors:
        if e < 0:
            series = [(k, (-1) ** k * comb(-e, k)) for k in range(-e + 1)]
        else:
            series = [(k, comb(e - 1 + k, k)) for k in range(n // min(w) + 1)]
        out: dict[tuple[int, ...], int] = {}
        for u, a in poly.items():
            for k, c in series:
                v = tuple(x + k * y for x, y in zip(u, w))
                if min(v) <= n:
                    out[v] = out.get(v, 0) + a * c
        poly = out
    coeffs = [0] * (n + 1)
    for exp, c in poly.items():
        if min(exp) <= n:
            coeffs[min(exp)] += c
    return OneVarSeries(coeffs)


# ---------------------------------------------------------------------------
# arcs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AtLeast:
    """Order not reached within the working precision: the true order is >= ``bound``."""

    bound: int

    def __str__(self):
        return f">= {self.bound}"


@dataclass(frozen=True)
class Arc:
    """Polynomial arc tau -> (x(tau), y(tau), z(tau)); coefficient lists start at tau^0."""

    x: tuple[Number, ...]
    y: tuple[Number, ...]
    z: tuple[Number, ...]

    def __post_init__(self):
        for name in "xyz":
            comp = tuple(getattr(self, name))
            if comp and comp[0] != 0:
                raise ValueError(f"{name}(0) must vanish")
            object.__setattr__(self, name, comp)
        if not any(any(getattr(self, name)) for name in "xyz"):
            raise ValueError("arc is constant")

    @property
    def components(self):
        return self.x, self.y, self.z


Polynomial = Mapping[tuple[int, int, int], Number]


def _mul(a: list, b: list, k: int) -> list:
    out = [0] * k
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), k - i)):
                out[i + j] += x * b[j]
    return out


def _compose(g: Polynomial, phi: Arc, k: int) -> list:
    comps = [list(c[:k]) + [0] * (k - len(c[:k])) for c in phi.components]
    powers = [{0: [1] + [0] * (k - 1)} for _ in range(3)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = _mul(power(i, e - 1), comps[i], k)
        return cache[e]

    total = [0] * k
    for (a, b, c), coef in g.items():
        if not coef:
            continue
        term = _mul(_mul(power(0, a), power(1, b), k), power(2, c), k)
        total = [t + coef * x for t, x in zip(total, term)]
    return total


def arc_order(g: Polynomial, phi: Arc, k: int) -> Union[int, AtLeast]:
    """Order in tau of g(phi(tau)) computed modulo tau^k."""
    if k < 1:
        raise ValueError("precision must be >= 1")
    for i, c in enumerate(_compose(g, phi, k)):
        if c != 0:
            return i
    return AtLeast(k)


def residual_order(f: Polynomial, phi: Arc, k: int) -> Union[int, AtLeast]:
    """Order of f along phi; ``AtLeast(k)`` means phi lies on {f = 0} to precision k."""
    return arc_order(f, phi, k)


def homogeneous_part(f: Polynomial, d: int) -> dict:
    return {e: c for e, c in f.items() if sum(e) == d and c}


def _gradient_at(f: Polynomial, p: Sequence[Number]) -> list:
    grad = [0, 0, 0]
    for e, c in f.items():
        for j in range(3):
            if e[j]:
                de = list(e)
                de[j] -= 1
                val = c * e[j]
                for i in range(3):
                    val *= Fraction(p[i]) ** de[i]
                grad[j] += val
    return grad


def lift_arc(f: Polynomial, point: Sequence[int], k: int, rng: random.Random,
             spread: int = 3) -> Arc:
    """A smooth arc tau*point + ... on {f = 0}, exact modulo tau^(k + d).

    ``point`` must be a smooth point of the tangent cone {f_d = 0}. The
    coordinates other than a solving direction get random small integer
    higher-order terms; the solving coordinate is fixed degree by degree.
    """
    d = min(sum(e) for e, c in f.items() if c)
    fd = homogeneous_part(f, d)
    if sum(c * Fraction(point[0]) ** e[0] * Fraction(point[1]) ** e[1] * Fraction(point[2]) ** e[2]
           for e, c in fd.items()) != 0:
        raise ValueError(f"{point} is not on the tangent cone")
    grad = _gradient_at(fd, point)
    j = next((i for i in range(3) if grad[i] != 0), None)
    if j is None:
        raise ValueError(f"{point} is a singular point of the tangent cone")
    comps = []
    for i in range(3):
        c = [Fraction(0), Fraction(point[i])] + [Fraction(0)] * (k - 1)
        if i != j:
            for deg in range(2, k + 1):
                c[deg] = Fraction(rng.randint(-spread, spread))
        comps.append(c)
    prec = k + d
    for deg in range(2, k + 1):
        arc = Arc(*map(tuple, comps))
        # coefficient of tau^(d + deg - 1) is grad_j * s_deg + (known terms)
        coef = _compose(f, arc, prec)[d + deg - 1]
        comps[j][deg] = -coef / grad[j]
    arc = Arc(*map(tuple, comps))
    assert isinstance(residual_order(f, arc, prec), AtLeast)
    return arc


def laurent_check_r1(graph: DualGraph, n: int) -> bool:
    """Check the one-vertex divisorial filtration against its definition.

    With one component the valuation is the order of a germ in (x, y), so
    dim J(v)/J(v+1) is the number of degree-v monomials, and J(v) is the
    whole ring for v <= 0. For r = 1 the Laurent normalization factor
    (t - 1)/(t - 1) is trivial, so these counts must be the coefficients of
    the product formula for P_pi.
    """
    if graph.size != 1:
        raise ValueError("laurent_check_r1 needs a single-vertex graph")
    dims = [0] * (n + 1)
    for a in range(n + 1):
        for b in range(n + 1 - a):
            dims[a + b] += 1
    return list(reduce(expand(poincare_pi(graph), n))) == dims
