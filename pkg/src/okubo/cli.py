"""Command-line front end.  Output is JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io, lie, verify
from .affine import DegenerateError, incident, join, meet, parallel_through
from .algebra import inverse, norm, octonion_mul, solve, star, tau
from .collineation import (
    DEFAULT_TOLERANCE,
    is_spin_triple,
    multiplicativity_residual,
    spin_residual,
    triality_affine,
    triality_affine_line,
    triality_proj,
)
from .projective import (
    MalformedVectorError,
    ProjectiveLine,
    ProjectivePoint,
    drop_line,
    drop_point,
    incident_proj,
    is_veronese,
    lift_line,
    lift_line_vector,
    lift_point,
    lift_vector,
)

VERBS = (
    "mul", "norm", "solve", "inverse", "octmul", "tau", "join", "meet", "parallel",
    "lift", "drop", "incident", "triality", "spin-check", "dim", "exp", "verify",
)


class InputError(Exception):
    pass


def _load(path: str | None, flag: str):
    if path is None:
        raise InputError(f"missing required input {flag}")
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {flag} {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{flag} {path} is not valid JSON: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="okubo", description="Okubo algebra and its projective plane.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--a", metavar="FILE", help="first JSON input ('-' for stdin)")
    p.add_argument("--b", metavar="FILE", help="second JSON input")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--algebra", choices=lie.PRODUCTS, default="okubo")
    p.add_argument("--which", choices=("tri", "der"), default="tri")
    p.add_argument("--role", choices=("point", "line"), default="point", help="how 'drop' reads its vector")
    p.add_argument("--suite", default="all")
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--t", type=float, default=1.0, help="parameter for 'exp'")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--basis", action="store_true", help="include basis dumps in 'dim'")
    p.add_argument("--json", action="store_true", default=True, help="JSON output (the only format)")
    return p


def _element(args, flag="a"):
    return io.element_from_json(_load(getattr(args, flag), "--" + flag))


def _run(args) -> tuple[int, object]:
    v = args.verb
    if v in ("mul", "octmul"):
        x, y = _element(args, "a"), _element(args, "b")
        octo = v == "octmul" or args.algebra == "octonion"
        return 0, io.element_to_json(octonion_mul(x, y) if octo else star(x, y))
    if v == "norm":
        return 0, {"norm": io.scalar_to_json(norm(_element(args)))}
    if v == "solve":
        return 0, io.element_to_json(solve(_element(args, "a"), _element(args, "b"), args.side))
    if v == "inverse":
        return 0, io.element_to_json(inverse(_element(args), args.side))
    if v == "tau":
        return 0, io.element_to_json(tau(_element(args)))
    if v == "join":
        p = io.point_from_json(_load(args.a, "--a"))
        q = io.point_from_json(_load(args.b, "--b"))
        return 0, io.line_to_json(join(p, q))
    if v == "meet":
        l1 = io.line_from_json(_load(args.a, "--a"))
        l2 = io.line_from_json(_load(args.b, "--b"))
        return 0, io.point_to_json(meet(l1, l2))
    if v == "parallel":
        l = io.line_from_json(_load(args.a, "--a"))
        p = io.point_from_json(_load(args.b, "--b"))
        return 0, io.line_to_json(parallel_through(l, p))
    if v == "lift":
        obj = _load(args.a, "--a")
        if io.is_line_json(obj):
            return 0, {"role": "line", "vector": io.veronese_to_json(lift_line_vector(io.line_from_json(obj)))}
        return 0, {"role": "point", "vector": io.veronese_to_json(lift_vector(io.point_from_json(obj)))}
    if v == "drop":
        vec = io.veronese_from_json(_load(args.a, "--a"))
        if not is_veronese(vec):
            raise InputError("input is not a nonzero Veronese vector")
        if args.role == "line":
            return 0, io.line_to_json(drop_line(ProjectiveLine(vec, check=False)))
        return 0, io.point_to_json(drop_point(ProjectivePoint(vec, check=False)))
    if v == "incident":
        p = io.point_from_json(_load(args.a, "--a"))
        l = io.line_from_json(_load(args.b, "--b"))
        return 0, {"incident": incident(p, l), "projective": incident_proj(lift_point(p), lift_line(l))}
    if v == "triality":
        obj = _load(args.a, "--a")
        if io.is_point_json(obj):
            return 0, io.point_to_json(triality_affine(io.point_from_json(obj)))
        if io.is_line_json(obj):
            return 0, io.line_to_json(triality_affine_line(io.line_from_json(obj)))
        return 0, io.veronese_to_json(triality_proj(io.veronese_from_json(obj)))
    if v == "spin-check":
        T = io.triple_from_json(_load(args.a, "--a"))
        if T.is_exact:
            return 0, {"spin": is_spin_triple(T)}
        res = spin_residual(T)
        return 0, {"spin": res < args.tolerance, "residual": res,
                   "multiplicativity_residual": multiplicativity_residual(T)}
    if v == "dim":
        fn = lie.tri_dimension if args.which == "tri" else lie.der_dimension
        dim, basis = fn(args.algebra)
        out = {"algebra": args.algebra, "which": args.which, "dimension": dim}
        if args.basis:
            if args.which == "tri":
                out["basis"] = [{"T1": io.map_to_json(L.T1), "T2": io.map_to_json(L.T2),
                                 "T3": io.map_to_json(L.T3)} for L in basis]
            else:
                out["basis"] = [io.map_to_json(D) for D in basis]
        return 0, out
    if v == "exp":
        if args.a is not None:
            obj = _load(args.a, "--a")
            if not isinstance(obj, dict) or any(k not in obj for k in ("T1", "T2", "T3")):
                raise InputError("Lie triple needs keys 'T1', 'T2', 'T3'")
            mats = tuple(_as_array(io.map_from_json(obj[k])) for k in ("T1", "T2", "T3"))
        else:
            if args.seed is None:
                raise InputError("exp without --a draws a random tri element and needs --seed")
            mats = lie.random_tri_element(np.random.default_rng(args.seed), args.algebra)
        T = lie.exp_triple(mats, args.t)
        res = spin_residual(T, args.algebra)
        out = io.triple_to_json(T)
        out["residual"] = res
        return (0 if res < args.tolerance else 1), out
    if v == "verify":
        if args.seed is None:
            raise InputError("verify needs --seed")
        if args.n < 1:
            raise InputError("--n must be positive")
        if args.suite != "all" and args.suite not in verify.SUITES:
            raise InputError(f"unknown suite {args.suite!r}; expected 'all' or one of {', '.join(verify.SUITES)}")
        report = verify.run(args.suite, args.n, args.seed, args.tolerance)
        report = {"passed": report["passed"], "seed": args.seed, "n": args.n, "suites": report["suites"]}
        return (0 if report["passed"] else 1), report
    raise InputError(f"unknown verb {v!r}")


def _as_array(m) -> np.ndarray:
    return m.to_float() if hasattr(m, "to_float") else np.asarray(m, dtype=float)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, doc = _run(args)
    except (InputError, io.FormatError, MalformedVectorError, DegenerateError, ZeroDivisionError, ValueError) as exc:
        print(f"okubo: {exc}", file=sys.stderr)
        return 2
    json.dump(doc, sys.stdout)
    sys.stdout.write("\n")
    if code == 1:
        print("okubo: verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
