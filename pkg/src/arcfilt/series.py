"""Factored multivariate series, min-truncated expansion and reduction to one variable.

The reduction sends a monomial t_1^k_1 ... t_r^k_r to t^min(k_i). Only
monomials whose minimal exponent is at most the truncation bound ``N`` can
contribute to the first ``N + 1`` coefficients of a reduction, and since
``min(u + v) >= min(u) + min(v)`` for non-negative exponent vectors, any
product term with minimum above ``N`` can be dropped as soon as it appears.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .resolution import DualGraph

Exponent = tuple[int, ...]

DEFAULT_DEGREE = 20


def _min(v: Exponent) -> int:
    return min(v) if v else 0


def _add(u: Exponent, v: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(u, v))


def _scale(v: Exponent, k: int) -> Exponent:
    return tuple(k * a for a in v)


class MinTruncatedPolynomial:
    """Integer polynomial in r variables, truncated at minimal exponent ``bound``.

    Terms whose exponent vector has minimum greater than ``bound`` are never
    stored. Zero coefficients are dropped.
    """

    __slots__ = ("nvars", "bound", "terms")

    def __init__(self, terms: Mapping[Exponent, int], nvars: int, bound: int):
        self.nvars = nvars
        self.bound = bound
        self.terms: dict[Exponent, int] = {}
        for exp, coef in terms.items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length (expected {nvars})")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if coef and _min(exp) <= bound:
                self.terms[exp] = self.terms.get(exp, 0) + coef
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def one(cls, nvars: int, bound: int) -> "MinTruncatedPolynomial":
        return cls({(0,) * nvars: 1}, nvars, bound)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "MinTruncatedPolynomial") -> "MinTruncatedPolynomial":
        self._check(other)
        out = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            out[e] += c
        return MinTruncatedPolynomial(out, self.nvars, min(self.bound, other.bound))

    def __mul__(self, other: "MinTruncatedPolynomial") -> "MinTruncatedPolynomial":
        self._check(other)
        bound = min(self.bound, other.bound)
        out = defaultdict(int)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = _add(u, v)
                if _min(w) <= bound:
                    out[w] += a * b
        return MinTruncatedPolynomial(out, self.nvars, bound)

    def truncate(self, bound: int) -> "MinTruncatedPolynomial":
        return MinTruncatedPolynomial(self.terms, self.nvars, min(bound, self.bound))

    def __eq__(self, other):
        if not isinstance(other, MinTruncatedPolynomial):
            return NotImplemented
        return (self.nvars, self.bound, self.terms) == (other.nvars, other.bound, other.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"MinTruncatedPolynomial({len(self.terms)} terms, nvars={self.nvars}, bound={self.bound})"


@dataclass(frozen=True)
class FactoredSeries:
    """``numerator * prod (1 - t^w)^(-e)`` over the factor list.

    ``numerator`` is a tuple of ``(exponent, coefficient)`` pairs and
    ``factors`` a tuple of ``(w, e)`` pairs; a negative ``e`` is a
    polynomial factor. Factors with ``e == 0`` are dropped and equal ``w``
    are merged.
    """

    nvars: int
    numerator: tuple[tuple[Exponent, int], ...] = ()
    factors: tuple[tuple[Exponent, int], ...] = ()

    def __post_init__(self):
        num = defaultdict(int)
        for exp, coef in self.numerator:
            exp = tuple(int(x) for x in exp)
            if len(exp) != self.nvars or any(x < 0 for x in exp):
                raise ValueError(f"bad numerator exponent {exp}")
            num[exp] += int(coef)
        fac = defaultdict(int)
        for w, e in self.factors:
            w = tuple(int(x) for x in w)
            if len(w) != self.nvars or any(x < 0 for x in w) or not any(w):
                raise ValueError(f"bad factor exponent {w}")
            fac[w] += int(e)
        object.__setattr__(self, "numerator", tuple(sorted((k, c) for k, c in num.items() if c)))
        object.__setattr__(self, "factors", tuple(sorted((k, e) for k, e in fac.items() if e)))

    @classmethod
    def build(cls, numerator: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]],
              factors: Iterable[tuple[Exponent, int]], nvars: int | None = None) -> "FactoredSeries":
        if isinstance(numerator, Mapping):
            numerator = numerator.items()
        numerator = [(tuple(k), c) for k, c in numerator]
        factors = [(tuple(w), e) for w, e in factors]
        if nvars is None:
            vecs = [k for k, _ in numerator] + [w for w, _ in factors]
            if not vecs:
                raise ValueError("cannot infer the number of variables")
            nvars = len(vecs[0])
        return cls(nvars, tuple(numerator), tuple(factors))

    def generators(self) -> list[Exponent]:
        """Every exponent vector an expansion monomial is built from."""
        return [k for k, _ in self.numerator] + [w for w, _ in self.factors]

    def times_numerator(self, poly: Mapping[Exponent, int]) -> "FactoredSeries":
        out = defaultdict(int)
        for u, a in self.numerator:
            for v, b in poly.items():
                out[_add(u, tuple(v))] += a * b
        return FactoredSeries(self.nvars, tuple(out.items()), self.factors)

    def project(self, keep: Sequence[int]) -> "FactoredSeries":
        """Restrict every exponent vector to the 0-based coordinates in ``keep``."""
        pick = lambda v: tuple(v[i] for i in keep)  # noqa: E731
        return FactoredSeries(
            len(keep),
            tuple((pick(k), c) for k, c in self.numerator),
            tuple((pick(w), e) for w, e in self.factors),
        )

    def __str__(self):
        def mono(v):
            parts = []
            for i, x in enumerate(v, 1):
                if x == 1:
                    parts.append(f"t{i}")
                elif x:
                    parts.append(f"t{i}^{x}")
            return "*".join(parts) or "1"

        num = " + ".join(f"{c}*{mono(k)}" if c != 1 else mono(k) for k, c in self.numerator) or "0"
        facs = "".join(f"(1-{mono(w)})^{-e}" for w, e in self.factors)
        return f"({num}){facs}" if facs else f"({num})"


@dataclass(frozen=True)
class OneVarSeries:
    """Truncated univariate series c_0 + c_1 t + ... + c_N t^N."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def truncate(self, n: int) -> "OneVarSeries":
        if n > self.degree:
            raise ValueError(f"series only known through degree {self.degree}")
        return OneVarSeries(self.coefficients[: n + 1])

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __str__(self):
        return ", ".join(map(str, self.coefficients))


@dataclass(frozen=True, order=True)
class ClosedForm:
    """The rational function (1 - t^a) / prod_j (1 - t^b_j)."""

    numerator: int
    denominator: tuple[int, ...]

    def __post_init__(self):
        if self.numerator < 1 or any(b < 1 for b in self.denominator):
            raise ValueError("closed-form exponents must be >= 1")
        object.__setattr__(self, "denominator", tuple(sorted(self.denominator)))

    def series(self, n: int = DEFAULT_DEGREE) -> OneVarSeries:
        c = [0] * (n + 1)
        c[0] = 1
        if self.numerator <= n:
            c[self.numerator] -= 1
        for b in self.denominator:
            # multiply by 1/(1 - t^b)
            for k in range(b, n + 1):
                c[k] += c[k - b]
        return OneVarSeries(c)

    def __str__(self):
        den = list(self.denominator)
        if self.numerator in den:
            den.remove(self.numerator)
            num = "1"
        else:
            num = f"(1-{_tpow(self.numerator)})"
        if not den:
            return num
        groups = []
        for b in sorted(set(den)):
            k = den.count(b)
            groups.append(f"(1-{_tpow(b)})" + (f"^{k}" if k > 1 else ""))
        body = "".join(groups)
        if len(groups) > 1:
            body = f"({body})"
        return f"{num}/{body}"


def _tpow(k: int) -> str:
    return "t" if k == 1 else f"t^{k}"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def poincare_pi(graph: DualGraph) -> FactoredSeries:
    """Poincare series of the divisorial filtration: prod (1 - t^{m_i})^(-chi_i)."""
    return FactoredSeries(
        graph.size,
        (((0,) * graph.size, 1),),
        tuple((row, chi) for row, chi in zip(graph.m_matrix, graph.chi)),
    )


def substitute_sigma(fs: FactoredSeries, sigma: Sequence[int]) -> FactoredSeries:
    """Substitute t_i -> t_i^sigma_i."""
    sigma = tuple(sigma)
    if len(sigma) != fs.nvars:
        raise ValueError(f"sigma has length {len(sigma)}, series has {fs.nvars} variables")
    mul = lambda v: tuple(a * s for a, s in zip(v, sigma))  # noqa: E731
    return FactoredSeries(
        fs.nvars,
        tuple((mul(k), c) for k, c in fs.numerator),
        tuple((mul(w), e) for w, e in fs.factors),
    )


def stabilization_factor(graph: DualGraph) -> Exponent:
    """Exponent vector with entries sigma_i m_i / 2."""
    out = []
    for s, m in zip(graph.sigma, graph.m):
        assert (s * m) % 2 == 0
        out.append(s * m // 2)
    return tuple(out)


def _factor_terms(w: Exponent, e: int, bound: int) -> list[tuple[int, int]]:
    """(k, coefficient of t^{k w}) for (1 - t^w)^(-e), k up to the truncation."""
    if e < 0:
        n = -e
        return [(k, (-1) ** k * comb(n, k)) for k in range(n + 1) if _min(_scale(w, k)) <= bound]
    if min(w) < 1:
        raise ValueError(f"geometric factor (1 - t^{w})^{-e} does not terminate under min-truncation")
    kmax = bound // min(w)
    return [(k, comb(e - 1 + k, k)) for k in range(kmax + 1)]


def _factor_cost(w: Exponent, e: int, bound: int) -> int:
    if e < 0:
        return -e + 1
    return bound // min(w) + 1


def expand(fs: FactoredSeries, n: int = DEFAULT_DEGREE) -> MinTruncatedPolynomial:
    """Exact coefficients of every monomial of ``fs`` with minimal exponent <= n."""
    for w, e in fs.factors:
        if e > 0 and min(w) < 1:
            raise ValueError(f"geometric factor with zero component {w} is rejected")
    acc = MinTruncatedPolynomial(dict(fs.numerator), fs.nvars, n)
    for w, e in sorted(fs.factors, key=lambda f: (_factor_cost(*f, n), f)):
        terms = _factor_terms(w, e, n)
        out = defaultdict(int)
        for u, a in acc.terms.items():
            for k, c in terms:
                v = _add(u, _scale(w, k))
                if _min(v) > n:
                    # later k only increase the minimum when w >= 1
                    if e > 0:
                        break
                    continue
                out[v] += a * c
        acc = MinTruncatedPolynomial(out, fs.nvars, n)
    return acc


def reduce(p: MinTruncatedPolynomial) -> OneVarSeries:
    """Replace every monomial t^k by t^min(k) and collect through degree ``p.bound``."""
    c = [0] * (p.bound + 1)
    for exp, coef in p.terms.items():
        m = _min(exp)
        if m <= p.bound:
            c[m] += coef
    return OneVarSeries(c)


def dominated_coordinates(fs: FactoredSeries) -> list[int]:
    """0-based coordinates removed by :func:`prune_dominated`, in deletion order."""
    gens = fs.generators()
    alive = list(range(fs.nvars))
    removed = []
    changed = True
    while changed and len(alive) > 1:
        changed = False
        for j in alive:
            if any(k != j and all(g[k] <= g[j] for g in gens) for k in alive):
                alive.remove(j)
                removed.append(j)
                changed = True
                break
    return removed


def prune_dominated(fs: FactoredSeries) -> FactoredSeries:
    """Drop coordinates that can never realise the minimum.

    Coordinate j goes if another surviving coordinate k satisfies
    ``g[k] <= g[j]`` on every generator g (numerator support and factor
    vectors). Every expansion monomial is a sum of generators, so the
    minimum over the remaining coordinates is unchanged.
    """
    removed = set(dominated_coordinates(fs))
    if not removed:
        return fs
    return fs.project([i for i in range(fs.nvars) if i not in removed])


@lru_cache(maxsize=None)
def closed_form_pool() -> tuple[ClosedForm, ...]:
    """Candidate closed forms, most specific first."""
    pool = [
        ClosedForm(6, (1, 2, 3)),  # T_{2,3,6}
        ClosedForm(4, (1, 1, 2)),  # T_{2,4,4}
        ClosedForm(3, (1, 1, 1)),  # T_{3,3,3}
    ]
    pool += [ClosedForm(d, (1,) * (n + 1)) for n in range(1, 5) for d in range(1, 9)]
    pool += [ClosedForm(m, (m // 2, 1, 1)) for m in range(2, 17, 2)]
    pool += [ClosedForm(2 * m, (m, 2, 1)) for m in range(3, 17, 2)]
    # remaining three-generator forms with small exponents
    pool += [
        ClosedForm(a, (b1, b2, b3))
        for a in range(1, 13)
        for b1 in range(1, 7)
        for b2 in range(b1, 7)
        for b3 in range(b2, 7)
    ]
    out = []
    for cf in pool:
        if cf not in out:
            out.append(cf)
    return tuple(out)


def match_closed_form(s: OneVarSeries, candidates: Sequence[ClosedForm] | None = None) -> ClosedForm | None:
    """First candidate whose expansion agrees with ``s`` through its degree."""
    if s.degree < 10:
        raise ValueError("closed-form recognition needs at least 11 coefficients")
    if candidates is None:
        candidates = closed_form_pool()
    for cf in candidates:
        if cf.series(s.degree) == s:
            return cf
    return None
