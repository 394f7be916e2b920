"""Oracle-versus-pipeline comparisons run by ``arcfilt verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Callable, Iterator

from .oracle import (
    AtLeast,
    Polynomial,
    arc_order,
    brute_reduce,
    laurent_check_r1,
    lift_arc,
    oracle_poincare,
    residual_order,
)
from .pipeline import (
    T236,
    T244,
    T333,
    arnold_case,
    classify_arnold,
    corollary_even,
    corollary_odd_tangent,
    stabilization_poincare,
    tangent_cone_poincare,
    UnknownFamilyError,
)
from .resolution import (
    DualGraph,
    brieskorn_program,
    from_program,
    normalize_parity,
    ordinary_point_program,
    tangential_program,
)
from .series import ClosedForm, expand, prune_dominated, reduce

D4_MATRIX = ((-4, 1, 1, 1), (1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1))
D4_M_MATRIX = ((1, 1, 1, 1), (1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2))

# surfaces with reduced tangent cone, with generators of smooth tangent-cone points
A2_SURFACE: Polynomial = {(3, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1}  # x^3 + y^2 - z^2
XYZ_SURFACE: Polynomial = {(1, 1, 1): 1, (4, 0, 0): 1}  # xyz + x^4


def _a2_points(rng):
    s = rng.choice([-3, -2, -1, 1, 2, 3])
    return [(s, 1, 1), (s, 1, -1), (s, 2, 2)]


def _xyz_points(rng):
    a, b = (rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(2))
    return [(0, a, b), (a, 0, b), (a, b, 0)]


WITNESS_SURFACES = {
    "x^3+y^2-z^2": (A2_SURFACE, _a2_points),
    "xyz+x^4": (XYZ_SURFACE, _xyz_points),
}

ARNOLD_TAGS = {
    "J_{2,0}": "i", "J_{2,3}": "i", "J_{3,0}": "i", "J_10": "i",
    "E_12": "i", "E_13": "i", "E_14": "i", "E_18": "i", "E_19": "i", "E_20": "i",
    "T_{2,3,6}": "i",
    "X": "ii", "Y": "ii", "Z": "ii", "W": "ii", "X_9": "ii", "T_{2,4,4}": "ii",
    "Q": "iii", "S": "iii", "U": "iii", "T_{3,3,3}": "iii",
}
SIMPLE_TAGS = ("A_1", "A_5", "D_4", "D_7", "E_6", "E_7", "E_8")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def arc_witnesses(f: Polynomial, points: Callable, max_degree: int = 5, samples: int = 4,
                  seed: int = 0, precision: int = 8) -> dict[tuple[int, int, int], bool]:
    """For each monomial of degree <= max_degree not divisible by the tangent cone,
    whether some sampled smooth arc on {f = 0} has order exactly its degree."""
    d = min(sum(e) for e, c in f.items() if c)
    cone = [e for e, c in f.items() if sum(e) == d and c]
    rng = random.Random(seed)
    arcs = []
    for _ in range(samples):
        for pt in points(rng):
            arc = lift_arc(f, pt, precision, rng)
            assert isinstance(residual_order(f, arc, precision + d), AtLeast)
            arcs.append(arc)
    out = {}
    for i in range(max_degree + 1):
        for a, b in product(range(i + 1), repeat=2):
            c = i - a - b
            if c < 0:
                continue
            # a monomial is divisible by the cone only if the cone is a dividing monomial
            if len(cone) == 1 and all(x >= y for x, y in zip((a, b, c), cone[0])):
                continue
            h = {(a, b, c): 1}
            out[(a, b, c)] = any(arc_order(h, arc, precision) == i for arc in arcs)
    return out


def pipeline_corpus() -> dict[str, object]:
    corpus = {"ordinary(3)": ordinary_point_program(3), "brieskorn(6,3)": brieskorn_program(6, 3)}
    for m in (2, 4, 6, 8):
        corpus[f"ordinary({m})"] = ordinary_point_program(m)
    for m in (3, 5, 7):
        corpus[f"tangential({m})"] = tangential_program(m)
    return corpus


def oracle_pairs(limit: int = 12) -> list[tuple[int, int]]:
    return [(p, q) for p in range(2, limit) for q in range(2, limit)
            if p + q <= limit and gcd(p, q) == 1 and (p * q) % 2 == 0]


def run_checks(n: int = 20, graph: DualGraph | None = None) -> Iterator[CheckResult]:
    def same(name, got, want):
        return CheckResult(name, got == want, "" if got == want else f"got {got}, want {want}")

    g = normalize_parity(from_program(ordinary_point_program(3)))
    yield same("D4 intersection matrix", g.intersection_matrix, D4_MATRIX)
    yield same("D4 (m_ij)", g.m_matrix, D4_M_MATRIX)
    yield same("D4 series", stabilization_poincare(g, n).series, ClosedForm(3, (1, 1, 2)).series(n))

    yield same("T_{2,3,6} x^6+y^3", stabilization_poincare(brieskorn_program(6, 3), n).series, T236.series(n))
    yield same("T_{2,4,4} x^4+y^4", stabilization_poincare(ordinary_point_program(4), n).series, T244.series(n))
    yield same("T_{3,3,3} tangent cone", tangent_cone_poincare(3, 2).series(n), T333.series(n))

    for m in (2, 4, 6, 8):
        yield same(f"even multiplicity m={m}",
                   stabilization_poincare(ordinary_point_program(m), n).series, corollary_even(m).series(n))
    for m in (3, 5, 7):
        yield same(f"odd tangential m={m}",
                   stabilization_poincare(tangential_program(m), n).series, corollary_odd_tangent(m).series(n))

    for p, q in oracle_pairs():
        yield same(f"monomial oracle ({p},{q})",
                   oracle_poincare(p, q, n), stabilization_poincare(brieskorn_program(p, q), n).series)

    a1 = tangent_cone_poincare(2, 2).series(n)
    yield same("A1 curve: pipeline = even corollary",
               stabilization_poincare(ordinary_point_program(2), n).series, corollary_even(2).series(n))
    yield same("A1 curve: even corollary = tangent cone", corollary_even(2).series(n), a1)
    yield same("cusp: pipeline = tangent cone", stabilization_poincare(brieskorn_program(2, 3), n).series, a1)

    for name, prog in pipeline_corpus().items():
        res = stabilization_poincare(prog, n)
        yield same(f"pruning soundness {name}", reduce(expand(prune_dominated(res.q), n)), brute_reduce(res.q, n))

    yield CheckResult("r=1 definition check", laurent_check_r1(from_program(ordinary_point_program(2)), n))

    bad = []
    for tag, case in ARNOLD_TAGS.items():
        if arnold_case(tag) != case or classify_arnold(tag) not in (T236, T244, T333):
            bad.append(tag)
    for tag in SIMPLE_TAGS:
        try:
            classify_arnold(tag)
            bad.append(tag)
        except UnknownFamilyError:
            pass
    yield CheckResult("Arnold classifier", not bad, ", ".join(bad))

    for name, (f, points) in WITNESS_SURFACES.items():
        wit = arc_witnesses(f, points)
        missing = [m for m, ok in wit.items() if not ok]
        yield CheckResult(f"arc witnesses {name}", not missing, f"no witness for {missing}" if missing else "")

    if graph is not None:
        res = stabilization_poincare(graph, n)
        yield same("given graph: pruning soundness", res.series, brute_reduce(res.q, n))
        yield same("given graph: normalization idempotent", normalize_parity(res.graph), res.graph)
