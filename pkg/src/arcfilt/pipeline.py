"""Poincare series of the arc filtration for stabilizations and related families."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .resolution import BlowUpProgram, DualGraph, as_graph, normalize_parity
from .series import (
    DEFAULT_DEGREE,
    ClosedForm,
    FactoredSeries,
    OneVarSeries,
    expand,
    match_closed_form,
    poincare_pi,
    prune_dominated,
    reduce,
    stabilization_factor,
    substitute_sigma,
)

T236 = ClosedForm(6, (1, 2, 3))
T244 = ClosedForm(4, (1, 1, 2))
T333 = ClosedForm(3, (1, 1, 1))


@dataclass(frozen=True)
class StabilizationResult:
    series: OneVarSeries
    closed_form: ClosedForm | None
    graph: DualGraph  # parity-normalized
    q: FactoredSeries  # (1 + t^s) P_pi(t^sigma), before pruning
    pruned: FactoredSeries


def stabilization_q(graph: DualGraph) -> FactoredSeries:
    """(1 + t^{sigma m / 2}) * P_pi(t^sigma) for a parity-normalized graph."""
    s = stabilization_factor(graph)
    q = substitute_sigma(poincare_pi(graph), graph.sigma)
    return q.times_numerator({(0,) * graph.size: 1, s: 1})


def stabilization_poincare(
    source: Union[DualGraph, BlowUpProgram],
    n: int = DEFAULT_DEGREE,
    prune: bool = True,
) -> StabilizationResult:
    """Arc-filtration Poincare series of the surface f(x, y) = z^2.

    ``source`` describes an embedded resolution of the reduced curve f = 0.
    The graph is parity-normalized first, so any resolution is accepted.
    With ``prune=False`` the reduction is computed by the naive full
    expansion in :mod:`arcfilt.oracle`.
    """
    graph = normalize_parity(as_graph(source))
    q = stabilization_q(graph)
    if prune:
        pruned = prune_dominated(q)
        series = reduce(expand(pruned, n))
    else:
        from .oracle import brute_reduce

        pruned = q
        series = brute_reduce(q, n)
    cf = match_closed_form(series) if n >= 10 else None
    return StabilizationResult(series, cf, graph, q, pruned)


def tangent_cone_poincare(d: int, n: int) -> ClosedForm:
    """(1 - t^d)/(1 - t)^(n+1) for a degree-d hypersurface in C^(n+1) with reduced tangent cone."""
    if d < 1 or n < 1:
        raise ValueError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    return ClosedForm(d, (1,) * (n + 1))


def corollary_even(m: int) -> ClosedForm:
    if m < 2 or m % 2:
        raise ValueError(f"multiplicity must be even and >= 2, got {m}")
    return ClosedForm(m, (m // 2, 1, 1))


def corollary_odd_tangent(m: int) -> ClosedForm:
    if m < 3 or m % 2 == 0:
        raise ValueError(f"multiplicity must be odd and >= 3, got {m}")
    return ClosedForm(2 * m, (m, 2, 1))


# ---------------------------------------------------------------------------
# Arnold families
# ---------------------------------------------------------------------------


class UnknownFamilyError(ValueError):
    pass


_TAG = re.compile(r"^\s*([A-Za-z])(.*)$")


def _parse_tag(tag: str) -> tuple[str, tuple[int, ...]]:
    mt = _TAG.match(tag)
    if not mt:
        raise UnknownFamilyError(f"cannot parse family tag {tag!r}")
    return mt.group(1).upper(), tuple(int(x) for x in re.findall(r"\d+", mt.group(2)))


def arnold_case(tag: str) -> str:
    """Which statement ('i', 'ii' or 'iii') of the Arnold-family table covers ``tag``."""
    letter, idx = _parse_tag(tag)
    if letter == "T":
        cases = {(2, 3, 6): "i", (2, 4, 4): "ii", (3, 3, 3): "iii"}
        if idx in cases:
            return cases[idx]
        raise UnknownFamilyError(f"only the parabolic T-classes are covered, got {tag!r}")
    if letter in "AD":
        raise UnknownFamilyError(f"{tag!r} is a simple singularity")
    if letter == "E":
        if len(idx) != 1:
            raise UnknownFamilyError(f"E needs one index, got {tag!r}")
        (n,) = idx
        if n in (6, 7, 8):
            raise UnknownFamilyError(f"{tag!r} is a simple singularity")
        if n >= 12 and n % 6 in (0, 1, 2):
            return "i"
        raise UnknownFamilyError(f"{tag!r} is not of the form E_6k, E_6k+1, E_6k+2 with k >= 2")
    if letter == "J":
        if idx == (10,):  # J_10 = J_{2,0}
            return "i"
        if len(idx) != 2:
            raise UnknownFamilyError(f"J needs indices (k, i), got {tag!r}")
        k, i = idx
        if k >= 2 and i >= 0:
            return "i"
        raise UnknownFamilyError(f"J_{{k,i}} requires k >= 2, got {tag!r}")
    if letter == "P":
        if idx == (8,):  # P_8 = T_{3,3,3}
            return "iii"
        raise UnknownFamilyError(f"only P_8 is covered, got {tag!r}")
    # bare class letters; sub-family indices are not checked
    if letter in "XYZW":
        return "ii"
    if letter in "QSU":
        return "iii"
    raise UnknownFamilyError(f"unknown family {tag!r}")


def classify_arnold(tag: str) -> ClosedForm:
    return {"i": T236, "ii": T244, "iii": T333}[arnold_case(tag)]
