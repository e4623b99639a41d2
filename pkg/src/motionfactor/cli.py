"""Command line interface: ``motionfactor {analyze,factor,verify,trajectory,reparam}``.

Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 engine failure, 5 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field

from .algebra import format_scalar, tolerance
from .errors import (
    GcdViolation,
    HasRealRoot,
    IrrationalFactor,
    MotionFactorError,
    NotBounded,
    NotMonic,
    NotMotion,
    NotPlanar,
    ParseError,
    SingularParameter,
)
from .factor import EngineConfig, Factorization, factor, verify
from .kinematics import (
    complexity,
    is_bounded,
    is_generic,
    is_planar,
    reparameterize,
    trajectory,
    trajectory_csv,
    validate_motion,
)
from .parse import load_input, parse_point, parse_real, parse_samples
from .polyring import poly_to_json, quadratic_factors, rpoly_to_json

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_ENGINE, EXIT_MISMATCH = 0, 2, 3, 4, 5

_PRECONDITION = (NotMotion, NotBounded, NotMonic, NotPlanar, HasRealRoot, GcdViolation,
                 SingularParameter)


_SCALAR_LIST = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dumps(payload) -> str:
    """Indented JSON with lists of scalars kept on one line."""
    text = json.dumps(payload, indent=2)
    return _SCALAR_LIST.sub(
        lambda m: "[" + ", ".join(p.strip() for p in m.group(1).split(",")) + "]", text)


@dataclass
class Session:
    mode: str = "exact"
    tolerance: float = 1e-10
    as_json: bool = False
    out: object = field(default_factory=lambda: sys.stdout)

    def load(self, source: str):
        return load_input(source, self.mode)

    def emit(self, payload: dict, text: str | None = None) -> None:
        if self.as_json or text is None:
            print(dumps(payload), file=self.out)
        else:
            print(text, file=self.out)


def _write(path: str | None, content: str, session: Session) -> None:
    if path is None or path == "-":
        session.out.write(content if content.endswith("\n") else content + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)


def cmd_analyze(args, session: Session) -> int:
    raw = session.load(args.input)
    m = validate_motion(raw)
    ok, axis = is_planar(m)
    norm = m.primal.norm()
    report = {
        "is_motion": True,
        "monic": str(m),
        "monic_json": poly_to_json(m),
        "is_bounded": is_bounded(m),
        "is_generic": is_generic(m),
        "is_planar": ok,
        "axis": None if axis is None else [format_scalar(c) for c in axis],
        "complexity": list(complexity(m).as_tuple()),
        "norm": rpoly_to_json(norm),
    }
    try:
        report["quadratic_factors"] = [rpoly_to_json(q) for q in quadratic_factors(norm)]
    except (HasRealRoot, IrrationalFactor) as exc:
        report["quadratic_factors"] = None
        report["quadratic_factors_error"] = str(exc)
    lines = [f"monic form:   {report['monic']}",
             f"bounded:      {report['is_bounded']}",
             f"generic:      {report['is_generic']}",
             f"planar:       {ok}" + (f" (axis {tuple(report['axis'])})" if ok else ""),
             f"complexity:   {tuple(report['complexity'])}",
             f"norm:         {norm}"]
    if report["quadratic_factors"] is not None:
        lines.append("quadratics:   " + ", ".join(str(q) for q in quadratic_factors(norm)))
    session.emit(report, "\n".join(lines))
    return EXIT_OK


def _parse_order(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad --order {text!r}", 0) from exc


def _parse_direction(text: str) -> tuple:
    if text.strip().lower() in ("", "none", "default"):
        return None
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"direction {text!r} needs three components", 0)
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad direction {text!r}", 0) from exc


def cmd_factor(args, session: Session) -> int:
    m = validate_motion(session.load(args.input))
    cfg = EngineConfig(mode=session.mode, strategy=args.strategy,
                       factor_order=_parse_order(args.order), direction_seed=args.seed,
                       directions=tuple(_parse_direction(d) for d in args.direction or ()))
    result = factor(m, cfg)
    check = verify(result, m)
    payload = result.to_json(include_trace=args.trace)
    payload["verified"] = check.ok
    _write(args.out, dumps(payload) + "\n", session)
    if not check.ok:
        print(f"verification failed: {check.reason}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, session: Session) -> int:
    try:
        with open(args.factorization, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed factorization JSON: {exc.msg}", exc.pos) from exc
    try:
        fac = Factorization.from_json(obj, session.mode)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), 0) from exc
    m = validate_motion(session.load(args.input))
    check = verify(fac, m)
    session.emit({"verified": check.ok, "reason": check.reason},
                 "verified" if check.ok else f"mismatch: {check.reason}")
    return EXIT_OK if check.ok else EXIT_MISMATCH


def cmd_trajectory(args, session: Session) -> int:
    m = validate_motion(session.load(args.input))
    point = parse_point(args.point, session.mode)
    samples = parse_samples(args.samples, session.mode)
    points = trajectory(m, point, samples)
    _write(args.out, trajectory_csv(samples, points), session)
    return EXIT_OK


def cmd_reparam(args, session: Session) -> int:
    m = session.load(args.input)
    num = parse_real(args.num, session.mode)
    den = parse_real(args.den, session.mode)
    try:
        out = reparameterize(m, num, den)
    except ValueError as exc:
        if isinstance(exc, MotionFactorError):
            raise
        raise GcdViolation(str(exc)) from exc
    _write(args.out, dumps(poly_to_json(out)) + "\n", session)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default=argparse.SUPPRESS,
                        help="scalar arithmetic (default: exact rationals)")
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS,
                        help="float comparison tolerance (float mode only)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine readable output")

    parser = argparse.ArgumentParser(
        prog="motionfactor", parents=[common],
        description="Factor bounded motion polynomials into linear rotation factors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="report motion polynomial properties")
    p.add_argument("input", help="JSON file, expression file or inline expression")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("factor", parents=[common], help="compute a factorization")
    p.add_argument("input")
    p.add_argument("--strategy", default="factor_all",
                   choices=("gfactor", "factor_i", "factor_all", "planar"))
    p.add_argument("--seed", type=int, default=0, help="offset into the direction sequence")
    p.add_argument("--order", help="permutation of quadratic norm factors, e.g. 1,0,2")
    p.add_argument("--direction", action="append",
                   help="first candidate direction 'x,y,z' for the next free root "
                        "choice (repeatable; 'none' keeps the default)")
    p.add_argument("--trace", action="store_true", help="include the iteration log")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", parents=[common], help="check a factorization file")
    p.add_argument("factorization")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trajectory", parents=[common], help="sample the orbit of a point")
    p.add_argument("input")
    p.add_argument("--point", required=True, help="x1,x2,x3")
    p.add_argument("--samples", required=True, help="a..b, a..b:n or a comma list")
    p.add_argument("--out")
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("reparam", parents=[common], help="substitute t -> num/den")
    p.add_argument("input")
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reparam)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    session = Session(mode=getattr(args, "mode", "exact"),
                      tolerance=getattr(args, "tolerance", 1e-10),
                      as_json=getattr(args, "json", False))
    try:
        with tolerance(session.tolerance):
            return args.func(args, session)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _PRECONDITION as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except MotionFactorError as exc:
        print(f"engine failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
