"""Acceptance suite: one test per criterion, each checked exactly.

Reference coefficients come from dividing sympy-expanded numerators by
denominators, not from ``ClosedForm.series``. Run directly with
``python tests/test_acceptance.py`` or through pytest; either way a
PASS/FAIL line per criterion is printed at the end.
"""

import sys

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from arcfilt.oracle import brute_reduce, laurent_check_r1, oracle_poincare
from arcfilt.pipeline import (
    T236,
    T244,
    T333,
    classify_arnold,
    corollary_even,
    stabilization_poincare,
    tangent_cone_poincare,
)
from arcfilt.resolution import (
    brieskorn_program,
    from_program,
    normalize_parity,
    ordinary_point_program,
    tangential_program,
)
from arcfilt.series import expand, poincare_pi, prune_dominated, reduce
from arcfilt.verification import (
    ARNOLD_TAGS,
    SIMPLE_TAGS,
    WITNESS_SURFACES,
    arc_witnesses,
)

N = 20
t = sympy.symbols("t")


def coeffs(expr, n=N):
    # expand numerator and denominator with sympy, then divide power series
    num, den = (sympy.Poly(sympy.expand(e), t).all_coeffs()[::-1] for e in sympy.fraction(sympy.together(expr)))
    num = num + [0] * (n + 1)
    out = []
    for k in range(n + 1):
        acc = num[k] - sum(den[j] * out[k - j] for j in range(1, min(k, len(den) - 1) + 1))
        assert acc % den[0] == 0
        out.append(int(acc // den[0]))
    return tuple(out)


def series(source, n=N):
    return stabilization_poincare(source, n).series.coefficients


def test_criterion_01_d4_end_to_end():
    g = normalize_parity(from_program(ordinary_point_program(3)))
    assert g.intersection_matrix == ((-4, 1, 1, 1), (1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1))
    assert g.m_matrix == ((1, 1, 1, 1), (1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2))
    assert series(g) == coeffs((1 - t**3) / ((1 - t)**2 * (1 - t**2)))


def test_criterion_02_parabolic_table():
    t236 = coeffs((1 - t**6) / ((1 - t) * (1 - t**2) * (1 - t**3)))
    t244 = coeffs((1 - t**4) / ((1 - t)**2 * (1 - t**2)))
    t333 = coeffs((1 - t**3) / (1 - t)**3)
    assert series(brieskorn_program(6, 3)) == t236
    assert series(ordinary_point_program(4)) == t244
    assert tangent_cone_poincare(3, 2).series(N).coefficients == t333


def test_criterion_03_even_multiplicity():
    for m in (2, 4, 6, 8):
        want = coeffs((1 - t**m) / ((1 - t**(m // 2)) * (1 - t)**2))
        assert series(ordinary_point_program(m)) == want, m


def test_criterion_04_odd_tangential():
    for m in (3, 5, 7):
        want = coeffs((1 - t**(2 * m)) / ((1 - t**m) * (1 - t**2) * (1 - t)))
        assert series(tangential_program(m)) == want, m


def test_criterion_05_oracle_equivalence():
    for p, q in [(2, 3), (2, 5), (3, 4), (4, 5)]:
        assert oracle_poincare(p, q, 15) == stabilization_poincare(brieskorn_program(p, q), 15).series, (p, q)


def test_criterion_06_triple_consistency():
    cone = tangent_cone_poincare(2, 2).series(N)
    assert stabilization_poincare(ordinary_point_program(2), N).series == corollary_even(2).series(N) == cone
    assert stabilization_poincare(brieskorn_program(2, 3), N).series == cone


# every FactoredSeries Q produced in criteria 1-4
CRITERIA_SOURCES = (
    [ordinary_point_program(3), brieskorn_program(6, 3), ordinary_point_program(4)]
    + [ordinary_point_program(m) for m in (2, 4, 6, 8)]
    + [tangential_program(m) for m in (3, 5, 7)]
)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CRITERIA_SOURCES), st.integers(0, N))
def test_criterion_07_pruning_soundness(source, n):
    q = stabilization_poincare(source, n).q
    assert reduce(expand(prune_dominated(q), n)) == brute_reduce(q, n)


def test_criterion_08_laurent_r1():
    g = from_program(ordinary_point_program(2))
    assert laurent_check_r1(g, 15)
    assert reduce(expand(poincare_pi(g), 15)).coefficients == tuple(v + 1 for v in range(16))


def test_criterion_09_classifier():
    forms = {"i": T236, "ii": T244, "iii": T333}
    for tag, case in ARNOLD_TAGS.items():
        assert classify_arnold(tag) == forms[case], tag
    for tag in SIMPLE_TAGS + ("E_9", "J_{1,0}"):
        with pytest.raises(ValueError):
            classify_arnold(tag)


@pytest.mark.parametrize("surface", sorted(WITNESS_SURFACES))
def test_criterion_10_arc_witnesses(surface):
    f, points = WITNESS_SURFACES[surface]
    wit = arc_witnesses(f, points, max_degree=5)
    assert wit and all(wit.values()), [m for m, ok in wit.items() if not ok]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider",
                          "-W", "ignore::pytest.PytestAssertRewriteWarning"]))
