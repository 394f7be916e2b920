"""JSON encodings of graphs, blow-up programs and series.

Graph::

    {"vertices": [{"id": 1, "self": -4}, ...],
     "edges": [[1, 2], ...],
     "arrows": [{"vertex": 2, "count": 1}, ...]}

Vertex ids must be 1..r. Instead of ``vertices``/``edges`` a graph may give
a raw symmetric intersection ``"matrix"``; it is validated like any other
graph. Program::

    {"steps": [{"op": "blow_origin"}, {"op": "blow_free", "on": 1},
               {"op": "blow_satellite", "between": [1, 2]}],
     "arrows": [{"vertex": 3, "count": 1}]}

Factored series::

    {"numerator": [{"exp": [1, 1, 1, 1], "coef": -1}, ...],
     "factors": [{"exp": [1, 2, 1, 1], "e": 1}, ...]}

meaning numerator * prod (1 - t^exp)^(-e).
"""

from __future__ import annotations

from typing import Any

from .resolution import (
    BlowFree,
    BlowOrigin,
    BlowSatellite,
    BlowUpProgram,
    DualGraph,
    InvalidGraphError,
)
from .series import ClosedForm, FactoredSeries, OneVarSeries


class MalformedInputError(ValueError):
    """Input is not shaped like any documented schema."""


def _require(cond, msg):
    if not cond:
        raise MalformedInputError(msg)


def _arrow_list(data) -> list[tuple[int, int]]:
    arrows = data.get("arrows")
    _require(isinstance(arrows, list), "'arrows' must be a list")
    out = []
    for a in arrows:
        _require(isinstance(a, dict) and {"vertex", "count"} <= a.keys(), f"bad arrow entry {a!r}")
        _require(isinstance(a["vertex"], int) and isinstance(a["count"], int), f"bad arrow entry {a!r}")
        out.append((a["vertex"], a["count"]))
    return out


def graph_to_json(graph: DualGraph) -> dict[str, Any]:
    return {
        "vertices": [{"id": i, "self": s} for i, s in zip(graph.vertices, graph.self_intersections)],
        "edges": [list(e) for e in graph.edges],
        "arrows": [{"vertex": i, "count": a} for i, a in zip(graph.vertices, graph.arrows) if a],
    }


def graph_from_json(data: dict[str, Any]) -> DualGraph:
    _require(isinstance(data, dict), "graph must be a JSON object")
    arrows = _arrow_list(data)
    if "matrix" in data:
        mat = data["matrix"]
        _require(isinstance(mat, list) and all(isinstance(row, list) for row in mat), "'matrix' must be a list of rows")
        _require(all(isinstance(x, int) for row in mat for x in row), "matrix entries must be integers")
        a = [0] * len(mat)
        for v, c in arrows:
            if not 1 <= v <= len(mat):
                raise InvalidGraphError(f"arrow on nonexistent vertex {v}")
            a[v - 1] += c
        return DualGraph.from_matrix(mat, a)
    verts = data.get("vertices")
    edges = data.get("edges", [])
    _require(isinstance(verts, list), "'vertices' must be a list")
    _require(isinstance(edges, list), "'edges' must be a list")
    selfs = {}
    for v in verts:
        _require(isinstance(v, dict) and isinstance(v.get("id"), int) and isinstance(v.get("self"), int),
                 f"bad vertex entry {v!r}")
        _require(v["id"] not in selfs, f"duplicate vertex id {v['id']}")
        selfs[v["id"]] = v["self"]
    if sorted(selfs) != list(range(1, len(selfs) + 1)):
        raise InvalidGraphError("vertex ids must be 1..r")
    for e in edges:
        _require(isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e), f"bad edge {e!r}")
    a = [0] * len(selfs)
    for v, c in arrows:
        if v not in selfs:
            raise InvalidGraphError(f"arrow on nonexistent vertex {v}")
        a[v - 1] += c
    return DualGraph(tuple(selfs[i] for i in range(1, len(selfs) + 1)), tuple(map(tuple, edges)), tuple(a))


def program_to_json(program: BlowUpProgram) -> dict[str, Any]:
    steps = []
    for s in program.steps:
        if isinstance(s, BlowOrigin):
            steps.append({"op": "blow_origin"})
        elif isinstance(s, BlowFree):
            steps.append({"op": "blow_free", "on": s.on})
        else:
            steps.append({"op": "blow_satellite", "between": list(s.between)})
    return {"steps": steps, "arrows": [{"vertex": v, "count": c} for v, c in program.arrows]}


def program_from_json(data: dict[str, Any]) -> BlowUpProgram:
    _require(isinstance(data, dict), "program must be a JSON object")
    steps_in = data.get("steps")
    _require(isinstance(steps_in, list), "'steps' must be a list")
    steps = []
    for s in steps_in:
        _require(isinstance(s, dict), f"bad step {s!r}")
        op = s.get("op")
        if op == "blow_origin":
            steps.append(BlowOrigin())
        elif op == "blow_free":
            _require(isinstance(s.get("on"), int), f"bad step {s!r}")
            steps.append(BlowFree(s["on"]))
        elif op == "blow_satellite":
            pair = s.get("between")
            _require(isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair),
                     f"bad step {s!r}")
            steps.append(BlowSatellite(tuple(pair)))
        else:
            raise MalformedInputError(f"unknown op {op!r}")
    return BlowUpProgram(tuple(steps), tuple(_arrow_list(data)))


def factored_to_json(fs: FactoredSeries) -> dict[str, Any]:
    return {
        "numerator": [{"exp": list(k), "coef": c} for k, c in fs.numerator],
        "factors": [{"exp": list(w), "e": e} for w, e in fs.factors],
    }


def factored_from_json(data: dict[str, Any]) -> FactoredSeries:
    _require(isinstance(data, dict), "series must be a JSON object")
    num, fac = data.get("numerator", [{"coef": 1}]), data.get("factors", [])
    _require(isinstance(num, list) and isinstance(fac, list), "'numerator' and 'factors' must be lists")
    try:
        numerator = [(tuple(t["exp"]), int(t["coef"])) for t in num if "exp" in t]
        factors = [(tuple(t["exp"]), int(t["e"])) for t in fac]
    except (KeyError, TypeError) as exc:
        raise MalformedInputError(f"bad series entry: {exc}") from None
    lengths = {len(k) for k, _ in numerator} | {len(w) for w, _ in factors}
    _require(len(lengths) == 1, "exponent vectors must be non-empty and share one length")
    (nvars,) = lengths
    constant = sum(int(t["coef"]) for t in num if "exp" not in t)
    if constant:
        numerator.append(((0,) * nvars, constant))
    try:
        return FactoredSeries.build(numerator, factors, nvars)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from None


def series_to_json(s: OneVarSeries, closed_form: ClosedForm | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {"degree": s.degree, "coefficients": list(s.coefficients)}
    out["closed_form"] = None if closed_form is None else {
        "text": str(closed_form),
        "numerator": closed_form.numerator,
        "denominator": list(closed_form.denominator),
    }
    return out


def series_from_json(data: dict[str, Any]) -> tuple[OneVarSeries, ClosedForm | None]:
    _require(isinstance(data, dict) and isinstance(data.get("coefficients"), list), "bad series object")
    s = OneVarSeries(tuple(data["coefficients"]))
    cf = data.get("closed_form")
    return s, (None if cf is None else ClosedForm(cf["numerator"], tuple(cf["denominator"])))
