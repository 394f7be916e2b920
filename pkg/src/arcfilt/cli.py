"""Command line front end.

Exit codes: 0 success, 1 malformed input or usage, 2 validation failure
(an invalid graph or program, or a failing ``verify`` check).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .formats import (
    MalformedInputError,
    factored_from_json,
    graph_from_json,
    graph_to_json,
    program_from_json,
    series_to_json,
)
from .oracle import brute_reduce
from .pipeline import (
    UnknownFamilyError,
    arnold_case,
    classify_arnold,
    stabilization_poincare,
    tangent_cone_poincare,
)
from .resolution import (
    InvalidGraphError,
    brieskorn_program,
    from_program,
    ordinary_point_program,
    tangential_program,
)
from .series import DEFAULT_DEGREE, expand, match_closed_form, prune_dominated, reduce
from .verification import run_checks


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _default_degree() -> int:
    raw = os.environ.get("ARCFILT_DEGREE")
    if raw is None:
        return DEFAULT_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"ARCFILT_DEGREE must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("ARCFILT_DEGREE must be non-negative")
    return value


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}: invalid JSON ({exc})") from None


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _series_lines(series, cf) -> list[str]:
    lines = ["coefficients: " + ", ".join(map(str, series))]
    lines.append("closed form: " + (str(cf) if cf is not None else "(no match)"))
    return lines


def cmd_poincare(args) -> int:
    if args.graph:
        source = graph_from_json(_load_json(args.graph))
    elif args.program:
        source = from_program(program_from_json(_load_json(args.program)))
    elif args.brieskorn:
        source = from_program(brieskorn_program(*args.brieskorn))
    elif args.ordinary is not None:
        source = from_program(ordinary_point_program(args.ordinary))
    else:
        source = from_program(tangential_program(args.tangential))
    res = stabilization_poincare(source, args.degree, prune=not args.no_prune)
    payload = series_to_json(res.series, res.closed_form)
    lines = _series_lines(res.series, res.closed_form)
    if args.explain:
        g = res.graph
        payload["graph"] = graph_to_json(g)
        payload["m"] = list(g.m)
        payload["m_matrix"] = [list(r) for r in g.m_matrix]
        payload["sigma"] = list(g.sigma)
        payload["chi"] = list(g.chi)
        lines += [
            f"vertices: {g.size}",
            f"m: {list(g.m)}",
            "(m_ij):",
            *(f"  {list(r)}" for r in g.m_matrix),
            f"sigma: {list(g.sigma)}",
            f"chi: {list(g.chi)}",
            f"Q: {res.q}",
        ]
    _emit(args, payload, lines)
    return 0


def cmd_tangent_cone(args) -> int:
    cf = tangent_cone_poincare(args.d, args.n)
    s = cf.series(args.degree)
    _emit(args, series_to_json(s, cf), _series_lines(s, cf))
    return 0


def cmd_classify(args) -> int:
    cf = classify_arnold(args.tag)
    s = cf.series(args.degree)
    payload = series_to_json(s, cf)
    payload["tag"] = args.tag
    payload["case"] = arnold_case(args.tag)
    _emit(args, payload, [f"{args.tag}: {cf}"] + _series_lines(s, cf)[:1])
    return 0


def cmd_reduce(args) -> int:
    fs = factored_from_json(_load_json(args.series))
    if args.no_prune:
        s = brute_reduce(fs, args.degree)
    else:
        s = reduce(expand(prune_dominated(fs), args.degree))
    cf = match_closed_form(s) if args.degree >= 10 else None
    _emit(args, series_to_json(s, cf), _series_lines(s, cf))
    return 0


def cmd_verify(args) -> int:
    graph = None
    if args.graph:
        graph = graph_from_json(_load_json(args.graph))
    results = list(run_checks(args.degree, graph))
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({
            "degree": args.degree,
            "passed": ok,
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        }, indent=2, sort_keys=True))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}"
            print((line + (f"  {r.detail}" if r.detail else "")).rstrip())
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok else 2


def build_parser(default_degree: int = DEFAULT_DEGREE) -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--degree", "-N", type=int, default=default_degree,
                        help=f"truncation degree (default {default_degree}, env ARCFILT_DEGREE)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="arcfilt", description="Poincare series of arc filtrations on surface singularities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poincare", parents=[common], help="stabilization f(x,y) = z^2 of a plane curve")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE")
    src.add_argument("--program", metavar="FILE")
    src.add_argument("--brieskorn", nargs=2, type=int, metavar=("P", "Q"))
    src.add_argument("--ordinary", type=int, metavar="M")
    src.add_argument("--tangential", type=int, metavar="M")
    p.add_argument("--explain", action="store_true", help="print m, (m_ij), sigma, chi")
    p.add_argument("--no-prune", action="store_true", help="reduce by brute-force expansion")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("tangent-cone", parents=[common], help="hypersurface with reduced tangent cone")
    p.add_argument("d", type=int, help="degree of the tangent cone")
    p.add_argument("n", type=int, help="dimension of the hypersurface (ambient C^(n+1))")
    p.set_defaults(func=cmd_tangent_cone)

    p = sub.add_parser("classify", parents=[common], help="series for an Arnold family tag")
    p.add_argument("tag")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", parents=[common], help="reduce a factored series given as JSON")
    p.add_argument("series", metavar="FILE")
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", parents=[common], help="run the oracle comparisons")
    p.add_argument("--graph", metavar="FILE", help="also check this graph")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_degree())
    except UsageError as exc:
        print(f"arcfilt: error: {exc}", file=sys.stderr)
        return 1
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.degree < 0:
        print("arcfilt: error: --degree must be non-negative", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except InvalidGraphError as exc:
        print(f"arcfilt: invalid resolution: {exc}", file=sys.stderr)
        return 2
    except (UsageError, MalformedInputError, UnknownFamilyError, ValueError) as exc:
        print(f"arcfilt: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
