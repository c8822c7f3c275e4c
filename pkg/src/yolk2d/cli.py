"""Command line interface.

Subcommands: ``solve`` (compute the yolk), ``oracle`` (brute-force result),
``check`` (solver vs oracle with a pass/fail gap test), ``bench`` (decision
timing over growing n), ``gen`` (write a point file).  Points come from
``--input`` (CSV ``x,y`` lines with ``#`` comments, or a JSON array of
pairs) or from a seeded generator via ``--gen/--n/--seed``.

Exit codes: 0 success, 1 malformed input, 2 invalid flags, 3 failed check.
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time

import numpy as np

from .decision import decide
from .generators import GENERATOR_NAMES, PRNG_NAME, generate_points
from .geometry import Point, PolygonParams, polygon_vertex
from .medians import PointSet, limiting_median_lines
from .oracle import NormTag, yolk_bruteforce
from .solver import Metric, choose_k, yolk

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2
EXIT_CHECK = 3

_ORACLE_NORMS = {
    "l1": NormTag.DIAMOND,
    "l2": NormTag.EUCLIDEAN,
    "linf": NormTag.SQUARE,
}

_SVG_LINE_LIMIT = 64


class InputError(Exception):
    pass


def _add_instance_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--metric", choices=["l1", "l2", "linf"], default="l1")
    sp.add_argument("--epsilon", type=float, default=None)
    sp.add_argument("--tol", type=float, default=1e-6)
    sp.add_argument("--input", default=None, help="point file (csv or json)")
    sp.add_argument("--input-format", choices=["csv", "json"], default=None)
    sp.add_argument("--gen", choices=GENERATOR_NAMES, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--svg", default=None, help="also render the instance to this file")
    sp.add_argument("--format", choices=["json", "csv"], default="json")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="yolk2d",
        description="Yolk of a planar point set: smallest ball meeting every median line.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="compute the yolk")
    _add_instance_args(sp)

    sp = sub.add_parser("oracle", help="brute-force yolk over limiting median lines")
    _add_instance_args(sp)

    sp = sub.add_parser("check", help="solver against oracle; exit 3 on gap failure")
    _add_instance_args(sp)

    sp = sub.add_parser("bench", help="decision timing over growing n")
    sp.add_argument("--metric", choices=["l1", "l2", "linf"], default="l1")
    sp.add_argument("--epsilon", type=float, default=None)
    sp.add_argument("--sizes", default="10000,100000,1000000")
    sp.add_argument("--repeats", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["json", "csv"], default="csv")

    sp = sub.add_parser("gen", help="write a generated point file")
    sp.add_argument("--gen", choices=GENERATOR_NAMES, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    return p


def _read_points_file(path: str, fmt: str | None) -> np.ndarray:
    if fmt is None:
        fmt = "json" if path.lower().endswith(".json") else "csv"
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if fmt == "json":
        try:
            data = json.loads(text)
            rows = [(float(a), float(b)) for a, b in data]
        except (ValueError, TypeError) as exc:
            raise InputError(f"{path}: expected a JSON array of [x, y] pairs") from exc
        return np.array(rows, dtype=float).reshape(-1, 2)
    rows = []
    for ln_no, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split(",")
        if len(parts) != 2:
            raise InputError(f"{path}:{ln_no}: expected 'x,y'")
        try:
            rows.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise InputError(f"{path}:{ln_no}: bad coordinate") from exc
    return np.array(rows, dtype=float).reshape(-1, 2)


def _load_point_set(args, parser: argparse.ArgumentParser) -> PointSet:
    have_input = args.input is not None
    have_gen = args.gen is not None
    if have_input == have_gen:
        parser.error("exactly one point source: --input PATH or --gen NAME")
    if have_gen:
        if args.n is None:
            parser.error("--gen requires --n")
        try:
            arr = generate_points(args.gen, args.n, args.seed)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    else:
        arr = _read_points_file(args.input, args.input_format)
    try:
        return PointSet(arr)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _validate_metric(args, parser: argparse.ArgumentParser, solver: bool = True) -> None:
    if not solver:
        if args.epsilon is not None:
            parser.error("--epsilon does not apply to the oracle")
    elif args.metric == "l2":
        if args.epsilon is None or args.epsilon <= 0:
            parser.error("--metric l2 requires --epsilon > 0")
    elif args.epsilon is not None:
        parser.error(f"--epsilon does not apply to --metric {args.metric}")
    if args.tol is not None and args.tol <= 0:
        parser.error("--tol must be positive")


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload))
    else:
        cells = []
        for value in payload.values():
            if isinstance(value, (list, tuple)):
                cells.extend(repr(float(v)) for v in value)
            elif value is None:
                cells.append("")
            elif isinstance(value, float):
                cells.append(repr(value))
            else:
                cells.append(str(value))
        print(",".join(cells))


def _ball_vertices(metric: str, center: Point, result) -> list[Point]:
    if metric == "linf":
        r = result.radius
        return [
            Point(center.x - r, center.y - r),
            Point(center.x + r, center.y - r),
            Point(center.x + r, center.y + r),
            Point(center.x - r, center.y + r),
        ]
    k = result.k_used
    poly = PolygonParams(k, result.diagnostics["circumradius"], center.x, center.y)
    return [polygon_vertex(poly, i) for i in range(k)]


def _render(args, voters: PointSet, metric: str, result=None, oracle_res=None) -> None:
    from .figures import render_instance

    lines = limiting_median_lines(voters) if 2 <= voters.n <= _SVG_LINE_LIMIT else []
    ball = None
    circle = None
    title = None
    if result is not None:
        ball = _ball_vertices(metric, result.center, result)
        if metric == "l2":
            circle = (result.center.x, result.center.y, result.radius)
        title = f"{metric} yolk radius {result.radius:.6g}"
    elif oracle_res is not None:
        c, r = oracle_res.center, oracle_res.radius
        norm = _ORACLE_NORMS[metric]
        if norm is NormTag.EUCLIDEAN:
            circle = (c.x, c.y, r)
        elif norm is NormTag.DIAMOND:
            ball = [Point(c.x + r, c.y), Point(c.x, c.y + r),
                    Point(c.x - r, c.y), Point(c.x, c.y - r)]
        else:
            ball = [Point(c.x - r, c.y - r), Point(c.x + r, c.y - r),
                    Point(c.x + r, c.y + r), Point(c.x - r, c.y + r)]
        title = f"{metric} oracle radius {r:.6g}"
    render_instance(args.svg, voters, ball_vertices=ball, circle=circle,
                    lines=lines, title=title)


def _cmd_solve(args, parser) -> int:
    _validate_metric(args, parser)
    voters = _load_point_set(args, parser)
    result = yolk(voters, Metric(args.metric), epsilon=args.epsilon, tol=args.tol)
    payload = {
        "metric": args.metric,
        "center": [result.center.x, result.center.y],
        "radius": result.radius,
        "k_used": result.k_used,
        "epsilon": result.epsilon,
        "tolerance": result.tolerance,
        "n": voters.n,
        "decisions_evaluated": result.decisions_evaluated,
    }
    _emit(payload, args.format)
    if args.svg:
        _render(args, voters, args.metric, result=result)
    return EXIT_OK


def _cmd_oracle(args, parser) -> int:
    _validate_metric(args, parser, solver=False)
    voters = _load_point_set(args, parser)
    if voters.n < 2:
        raise InputError("oracle needs at least two points")
    sol = yolk_bruteforce(voters, _ORACLE_NORMS[args.metric])
    payload = {
        "metric": args.metric,
        "center": [sol.center.x, sol.center.y],
        "radius": sol.radius,
        "n": voters.n,
        "limiting_lines": len(limiting_median_lines(voters)),
        "active_constraints": sol.active_constraints,
    }
    _emit(payload, args.format)
    if args.svg:
        _render(args, voters, args.metric, oracle_res=sol)
    return EXIT_OK


def _cmd_check(args, parser) -> int:
    _validate_metric(args, parser)
    voters = _load_point_set(args, parser)
    if voters.n < 2:
        raise InputError("check needs at least two points")
    result = yolk(voters, Metric(args.metric), epsilon=args.epsilon, tol=args.tol)
    sol = yolk_bruteforce(voters, _ORACLE_NORMS[args.metric])
    gap = result.radius - sol.radius
    slack = max(1e-5 * (1.0 + sol.radius), 10.0 * args.tol)
    if args.metric == "l2":
        passed = -slack <= gap <= args.epsilon * sol.radius + slack
    else:
        passed = abs(gap) <= slack
    payload = {
        "metric": args.metric,
        "n": voters.n,
        "solver_radius": result.radius,
        "oracle_radius": sol.radius,
        "gap": gap,
        "slack": slack,
        "passed": passed,
    }
    _emit(payload, args.format)
    if args.svg:
        _render(args, voters, args.metric, result=result)
    return EXIT_OK if passed else EXIT_CHECK


def _cmd_bench(args, parser) -> int:
    if args.metric == "l2":
        if args.epsilon is None or args.epsilon <= 0:
            parser.error("--metric l2 requires --epsilon > 0")
        k = choose_k(args.epsilon)
    else:
        if args.epsilon is not None:
            parser.error(f"--epsilon does not apply to --metric {args.metric}")
        k = 4
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        parser.error("--sizes expects a comma-separated list of integers")
    if not sizes or min(sizes) < 1 or args.repeats < 1:
        parser.error("--sizes and --repeats must be positive")
    rows = []
    for size in sizes:
        voters = PointSet(generate_points("uniform", size, args.seed))
        poly = PolygonParams(k, 0.25, 0.5, 0.5)
        decide(poly, voters)  # warm cache effects out of the timing
        samples = []
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            decide(poly, voters)
            samples.append((time.perf_counter() - t0) * 1000.0)
        rows.append((size, statistics.median(samples)))
    if args.format == "json":
        print(json.dumps({"k": k, "seed": args.seed, "prng": PRNG_NAME,
                          "rows": [[n, ms] for n, ms in rows]}))
    else:
        for n, ms in rows:
            print(f"{n},{ms:.3f}")
    return EXIT_OK


def _cmd_gen(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be at least 1")
    arr = generate_points(args.gen, args.n, args.seed)
    lines = [f"# generator={args.gen} n={args.n} seed={args.seed} prng={PRNG_NAME}"]
    lines.extend(f"{repr(float(x))},{repr(float(y))}" for x, y in arr)
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "check": _cmd_check,
    "bench": _cmd_bench,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
