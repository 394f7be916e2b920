"""Dual graphs of embedded resolutions of plane curve germs.

A resolution enters as a :class:`BlowUpProgram`: a list of point blow-ups
(the origin, a generic point of one exceptional component, or the
intersection point of two components) together with the smooth transverse
branches of the strict transform ("arrows") attached to the components.

All linear algebra is exact. Vertex ids are 1-based and follow the order in
which the components are created.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence, Union


class InvalidGraphError(ValueError):
    """Raised for programs or graphs that do not describe a resolution."""


# ---------------------------------------------------------------------------
# blow-up programs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlowOrigin:
    pass


@dataclass(frozen=True)
class BlowFree:
    on: int


@dataclass(frozen=True)
class BlowSatellite:
    between: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "between", tuple(self.between))


Step = Union[BlowOrigin, BlowFree, BlowSatellite]


@dataclass(frozen=True)
class BlowUpProgram:
    steps: tuple[Step, ...]
    arrows: tuple[tuple[int, int], ...]
    # (v(x), v(y)) per vertex; only set by brieskorn_program for coprime exponents
    toric_weights: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))

    def extended(self, *steps: Step, arrows=None) -> "BlowUpProgram":
        """Return a copy with extra steps appended (toric weights are dropped)."""
        return BlowUpProgram(
            self.steps + tuple(steps),
            self.arrows if arrows is None else arrows,
        )


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def _fraction_inverse(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise InvalidGraphError("intersection matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _determinant(matrix: Sequence[Sequence[int]]) -> Fraction:
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


# ---------------------------------------------------------------------------
# dual graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualGraph:
    """Weighted dual graph of the exceptional divisor plus arrow counts.

    ``self_intersections[i - 1]`` is E_i . E_i, ``edges`` are sorted pairs of
    1-based vertex ids and ``arrows[i - 1]`` counts strict-transform branches
    through generic points of E_i. Construction validates the graph.
    """

    self_intersections: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    arrows: tuple[int, ...]
    toric_weights: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        r = len(self.self_intersections)
        edges = set()
        for e in self.edges:
            i, j = sorted(e)
            if not (1 <= i <= r and 1 <= j <= r) or i == j:
                raise InvalidGraphError(f"bad edge {tuple(e)}")
            edges.add((i, j))
        object.__setattr__(self, "self_intersections", tuple(int(s) for s in self.self_intersections))
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "arrows", tuple(int(a) for a in self.arrows))
        if self.toric_weights is not None:
            object.__setattr__(self, "toric_weights", tuple(tuple(w) for w in self.toric_weights))
        self._validate()

    def _validate(self):
        r = self.size
        if r == 0:
            raise InvalidGraphError("empty graph")
        if len(self.arrows) != r:
            raise InvalidGraphError("arrow vector length differs from vertex count")
        if any(a < 0 for a in self.arrows):
            raise InvalidGraphError("negative arrow count")
        if sum(self.arrows) == 0:
            raise InvalidGraphError("curve has no branches (zero arrows)")
        if self.toric_weights is not None and len(self.toric_weights) != r:
            raise InvalidGraphError("toric weight list length differs from vertex count")
        # connectivity
        seen, stack = {1}, [1]
        nbrs = self.neighbors
        while stack:
            for j in nbrs[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != r:
            raise InvalidGraphError("dual graph is not connected")
        neg = [[-x for x in row] for row in self.intersection_matrix]
        # Sylvester: -M positive definite iff all leading principal minors > 0
        for k in range(1, r + 1):
            if _determinant([row[:k] for row in neg[:k]]) <= 0:
                raise InvalidGraphError("intersection matrix is not negative definite")
        if _determinant(neg) != 1:
            raise InvalidGraphError("intersection matrix is not unimodular")
        self.m_matrix

    @property
    def size(self) -> int:
        return len(self.self_intersections)

    @property
    def vertices(self) -> range:
        return range(1, self.size + 1)

    @cached_property
    def neighbors(self) -> dict[int, tuple[int, ...]]:
        out = {i: [] for i in self.vertices}
        for i, j in self.edges:
            out[i].append(j)
            out[j].append(i)
        return {i: tuple(sorted(v)) for i, v in out.items()}

    @cached_property
    def intersection_matrix(self) -> tuple[tuple[int, ...], ...]:
        r = self.size
        mat = [[0] * r for _ in range(r)]
        for i, s in enumerate(self.self_intersections):
            mat[i][i] = s
        for i, j in self.edges:
            mat[i - 1][j - 1] = mat[j - 1][i - 1] = 1
        return tuple(tuple(row) for row in mat)

    @cached_property
    def m_matrix(self) -> tuple[tuple[int, ...], ...]:
        """(m_ij) = (-M)^{-1}; row i holds the valuations of a curvette at E_i."""
        inv = _fraction_inverse([[-x for x in row] for row in self.intersection_matrix])
        if any(x.denominator != 1 for row in inv for x in row):
            raise InvalidGraphError("inverse intersection matrix is not integral")
        out = tuple(tuple(int(x) for x in row) for row in inv)
        if any(x < 1 for row in out for x in row):
            raise InvalidGraphError("(m_ij) has non-positive entries")
        return out

    @cached_property
    def m(self) -> tuple[int, ...]:
        """Multiplicities m_i = v_i(f), the solution of M m = -a."""
        return tuple(sum(mij * a for mij, a in zip(row, self.arrows)) for row in self.m_matrix)

    @property
    def sigma(self) -> tuple[int, ...]:
        return tuple(1 if mi % 2 == 0 else 2 for mi in self.m)

    @property
    def chi(self) -> tuple[int, ...]:
        return tuple(euler_char_smooth_part(self, i) for i in self.vertices)

    @property
    def curve_multiplicity(self) -> int:
        """m(f), read off the first component (the blow-up of the origin)."""
        return self.m[0]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], arrows: Sequence[int]) -> "DualGraph":
        """Build a graph from a raw intersection matrix, validating it."""
        r = len(matrix)
        if any(len(row) != r for row in matrix):
            raise InvalidGraphError("intersection matrix is not square")
        edges = []
        for i in range(r):
            for j in range(i + 1, r):
                if matrix[i][j] != matrix[j][i]:
                    raise InvalidGraphError("intersection matrix is not symmetric")
                if matrix[i][j] not in (0, 1):
                    raise InvalidGraphError(f"entry ({i + 1},{j + 1}) is not 0 or 1")
                if matrix[i][j]:
                    edges.append((i + 1, j + 1))
        return cls(tuple(matrix[i][i] for i in range(r)), tuple(edges), tuple(arrows))


def _check_vertex(graph: DualGraph, i: int):
    if not isinstance(i, int) or not 1 <= i <= graph.size:
        raise InvalidGraphError(f"no vertex {i!r}")


def euler_char_smooth_part(graph: DualGraph, i: int) -> int:
    """Euler characteristic of E_i minus its points on other exceptional components.

    Arrow points are not removed.
    """
    _check_vertex(graph, i)
    return 2 - len(graph.neighbors[i])


def multiplicities(graph: DualGraph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    return graph.m, graph.m_matrix


# ---------------------------------------------------------------------------
# building graphs from programs
# ---------------------------------------------------------------------------


class _Builder:
    def __init__(self):
        self.selfs: list[int] = []
        self.edges: set[tuple[int, int]] = set()

    def new_vertex(self) -> int:
        self.selfs.append(-1)
        return len(self.selfs)

    def _check(self, i):
        if not isinstance(i, int) or not 1 <= i <= len(self.selfs):
            raise InvalidGraphError(f"reference to nonexistent vertex {i!r}")

    def free(self, on: int) -> int:
        self._check(on)
        new = self.new_vertex()
        self.selfs[on - 1] -= 1
        self.edges.add((on, new))
        return new

    def satellite(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        pair = (min(i, j), max(i, j))
        if pair not in self.edges:
            raise InvalidGraphError(f"vertices {i} and {j} are not adjacent")
        self.edges.remove(pair)
        new = self.new_vertex()
        self.selfs[i - 1] -= 1
        self.selfs[j - 1] -= 1
        self.edges.update({(i, new), (j, new)})
        return new


def from_program(program: BlowUpProgram) -> DualGraph:
    steps = program.steps
    if not steps or not isinstance(steps[0], BlowOrigin):
        raise InvalidGraphError("first step must blow up the origin")
    b = _Builder()
    b.new_vertex()
    for step in steps[1:]:
        if isinstance(step, BlowOrigin):
            raise InvalidGraphError("the origin can only be blown up once")
        elif isinstance(step, BlowFree):
            b.free(step.on)
        elif isinstance(step, BlowSatellite):
            b.satellite(*step.between)
        else:
            raise InvalidGraphError(f"unknown step {step!r}")
    arrows = [0] * len(b.selfs)
    for vertex, count in program.arrows:
        b._check(vertex)
        if count < 0:
            raise InvalidGraphError("negative arrow count")
        arrows[vertex - 1] += count
    if sum(arrows) == 0:
        raise InvalidGraphError("program attaches no arrows")
    return DualGraph(tuple(b.selfs), tuple(b.edges), tuple(arrows), program.toric_weights)


def normalize_parity(graph: DualGraph) -> DualGraph:
    """Blow up every point where the strict transform meets an odd-multiplicity component.

    Each arrow sits at its own point, so each gets its own free blow-up and
    moves to the new component, whose multiplicity is m_i + 1.
    """
    for _ in range(2):
        odd = [i for i in graph.vertices if graph.arrows[i - 1] and graph.m[i - 1] % 2]
        if not odd:
            return graph
        selfs = list(graph.self_intersections)
        edges = list(graph.edges)
        arrows = list(graph.arrows)
        for i in odd:
            for _ in range(arrows[i - 1]):
                selfs[i - 1] -= 1
                selfs.append(-1)
                arrows.append(1)
                edges.append((i, len(selfs)))
            arrows[i - 1] = 0
        # toric weights of the new vertices are unknown (non-toric points)
        graph = DualGraph(tuple(selfs), tuple(edges), tuple(arrows))
    raise AssertionError("parity normalization did not terminate in 2 rounds")


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def brieskorn_program(p: int, q: int) -> BlowUpProgram:
    """Minimal embedded resolution of a generic curve x^p + y^q.

    Components are toric: each carries a primitive weight (v(x), v(y)).
    Starting from the cone spanned by (1, 0) and (0, 1), the mediant of the
    two current rays is blown up until it equals the Newton weight
    (q/g, p/g), g = gcd(p, q) (a Stern-Brocot walk, i.e. the Euclidean
    algorithm). The g branches then cross that last component.
    """
    if p < 2 or q < 2:
        raise ValueError(f"exponents must be >= 2, got ({p}, {q})")
    g = gcd(p, q)
    target = (q // g, p // g)
    # rays are (weight, vertex id or None for a coordinate axis)
    left, right = ((1, 0), None), ((0, 1), None)
    steps: list[Step] = []
    weights = []
    while True:
        w = (left[0][0] + right[0][0], left[0][1] + right[0][1])
        ids = [v for _, v in (left, right) if v is not None]
        if not steps:
            steps.append(BlowOrigin())
        elif len(ids) == 1:
            steps.append(BlowFree(ids[0]))
        else:
            steps.append(BlowSatellite((ids[0], ids[1])))
        weights.append(w)
        vid = len(steps)
        if w == target:
            break
        # compare slopes v(y)/v(x) of target and mediant
        if target[1] * w[0] < w[1] * target[0]:
            right = (w, vid)
        else:
            left = (w, vid)
    return BlowUpProgram(
        tuple(steps), ((len(steps), g),),
        toric_weights=tuple(weights) if g == 1 else None,
    )


def ordinary_point_program(m: int) -> BlowUpProgram:
    """m pairwise transverse smooth branches: one blow-up, m arrows."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return BlowUpProgram((BlowOrigin(),), ((1, m),))


def tangential_program(m: int) -> BlowUpProgram:
    """m smooth branches y = c_j x^2 sharing a tangent (model y^m + x^(2m))."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return BlowUpProgram((BlowOrigin(), BlowFree(1)), ((2, m),))


def as_graph(obj: Union[DualGraph, BlowUpProgram]) -> DualGraph:
    if isinstance(obj, DualGraph):
        return obj
    if isinstance(obj, BlowUpProgram):
        return from_program(obj)
    raise TypeError(f"expected DualGraph or BlowUpProgram, got {type(obj).__name__}")
