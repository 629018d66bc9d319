"""Command-line interface: ``ruukin {constraints|ik|fk|classify|surface|selfmotion|curve|verify}``."""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from fractions import Fraction

from gmpy2 import mpq

from .algebra import ExtScalar, MPoly
from .algebra.dump import write_sections
from .model import DesignError, resolve_design

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_DEGENERATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- number formatting ---------------------------------------------------------

def fmt_number(v) -> str:
    """Exact rationals as ``p/q``; floats with 17 significant digits."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (Fraction, type(mpq()))):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, ExtScalar):
        return str(v)
    if isinstance(v, complex):
        return f"{fmt_number(v.real)}{'+' if v.imag >= 0 else '-'}{fmt_number(abs(v.imag))}i"
    v = float(v)
    if not math.isfinite(v):
        return str(v)
    return format(v + 0.0, ".17g")


def to_json(obj, indent: int = 0) -> str:
    """JSON text with floats in 17 significant digits and exact values as strings."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_number(obj) if math.isfinite(obj) else json.dumps(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (Fraction, type(mpq()), ExtScalar, complex, MPoly)):
        return json.dumps(fmt_number(obj) if not isinstance(obj, MPoly) else str(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {to_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + to_json(v, indent + 1) for v in obj) + f"\n{pad}]"
    return json.dumps(str(obj))


def parse_triple(text: str, what: str) -> tuple:
    """``a,b,c``; integers and ``p/q`` stay exact, decimals become floats."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"{what} needs three comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) if any(ch in p for ch in ".eE") else Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {what} {text!r}") from None


def _design(args, default="pars"):
    return resolve_design(args.design or default)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------------

def cmd_constraints(args) -> int:
    from .model import general_constraints, translational_system
    from .workspace import eliminate_inputs

    design = _design(args)
    cs = general_constraints(design)
    polys = dict(cs)
    wt = translational_system(design, cs)
    polys.update({f"WT.{n}": p for n, p in wt})
    polys.update({f"WS.{n}": p for n, p in eliminate_inputs(cs).equations().items()})
    if args.format == "json":
        _emit(args, to_json({"design": design.label(), "polynomials": polys}) + "\n")
    else:
        buf = io.StringIO()
        write_sections(buf, polys, {"design": design.to_json()})
        _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_ik(args) -> int:
    from .kinematics import ik

    if not args.pose:
        raise UsageError("ik needs --pose y1,y2,y3")
    design = _design(args)
    sol = ik(design, parse_triple(args.pose, "pose"))
    report = {
        "design": design.label(),
        "pose": list(sol.y),
        "limbs": [{"roots": list(r), "tag": tag} for r, tag in zip(sol.roots, sol.tags)],
        "combinations": sol.count,
    }
    _emit(args, to_json(report) + "\n")
    return EXIT_OK


def cmd_fk(args) -> int:
    from .kinematics import fk

    if not args.inputs:
        raise UsageError("fk needs --inputs t1,t2,t3")
    design = _design(args)
    t = parse_triple(args.inputs, "inputs")
    sol = fk(design, [float(v) for v in t], tol=args.tol)
    report = {"design": design.label(), "inputs": list(t), "tag": sol.tag, "points": [list(p) for p in sol.points]}
    if sol.circle is not None:
        center, normal, r2 = sol.circle
        report["circle"] = {"center": list(center), "normal": list(normal), "radius_sq": r2}
        report["self_motion_match"] = sol.self_motion_match
    if sol.common_sphere is not None:
        report["common_sphere"] = {"center": list(sol.common_sphere[0]), "radius_sq": sol.common_sphere[1]}
    _emit(args, to_json(report) + "\n")
    return EXIT_OK if sol.tag == "none" else EXIT_DEGENERATE


def cmd_classify(args) -> int:
    from .singularity import NotOnWorkspace, classify

    if not args.pose or not args.inputs:
        raise UsageError("classify needs --pose and --inputs")
    design = _design(args)
    y, t = parse_triple(args.pose, "pose"), parse_triple(args.inputs, "inputs")
    try:
        rep = classify(design, y, t, tol=args.tol)
    except NotOnWorkspace as exc:
        raise UsageError(str(exc)) from None
    _emit(args, to_json({"design": design.label(), "pose": list(y), "inputs": list(t), **rep.as_dict()}) + "\n")
    return EXIT_OK


def cmd_surface(args) -> int:
    from .surface import SURFACES, parse_grid, sample_surface

    if args.which not in SURFACES:
        raise UsageError(f"unknown surface {args.which!r}; choose from {', '.join(SURFACES)}")
    try:
        axes = parse_grid(args.grid or "-10:10:50")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    design = _design(args)
    grid = sample_surface(design, args.which, axes, limb=args.limb)
    if args.format == "json":
        data = {"design": design.label(), "surface": args.which, "columns": [*grid.names, "residual", "crossing"],
                "rows": [list(r) for r in grid.rows()]}
        _emit(args, to_json(data) + "\n")
        return EXIT_OK
    lines = [f"# design={design.label()}; surface={args.which}", ",".join([*grid.names, "residual", "crossing"])]
    for *c, val, cross in grid.rows():
        lines.append(",".join([*(fmt_number(v) for v in c), fmt_number(val), "1" if cross else "0"]))
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_selfmotion(args) -> int:
    from .singularity import self_motion, self_motion_radius_sq

    design = _design(args)
    sm = self_motion(design)
    report = {"design": design.label(), "radius_sq": self_motion_radius_sq(design), "real_circle": sm is not None}
    if sm is not None:
        report["fixed_inputs"] = list(sm.fixed_inputs)
        report["complex_inputs"] = sm.complex_inputs
    _emit(args, to_json(report) + "\n")
    return EXIT_OK


def cmd_curve(args) -> int:
    from .surface import Axis
    from .verify import PARS2
    from .workspace import eliminate_inputs, membership, mode_of, transition_curve_point

    try:
        axis = Axis.parse(args.grid or "-1:1:41")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if axis.lo < -1 or axis.hi > 1:
        raise UsageError("the transition curve is sampled on [-1, 1]")
    ws = eliminate_inputs(design=PARS2)
    rows = []
    for t in axis.values():
        t = float(t)
        pose = transition_curve_point(0 if abs(t) < 1e-15 else t)
        rep = membership(ws, pose, tol=args.tol)
        rows.append({"t": t, "pose": list(pose.coords), "mode": mode_of(pose),
                     "residual": max(rep.relative().values()), "member": rep.in_workspace})
    _emit(args, to_json({"design": PARS2.label(), "samples": rows}) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_checks

    design = resolve_design(args.design) if args.design else None
    results = run_checks(design, full=args.full)
    if args.json:
        text = to_json({"passed": all(r.ok for r in results), "checks": [r.as_dict() for r in results]}) + "\n"
    else:
        text = "".join(r.line() + "\n" for r in results)
    _emit(args, text)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


COMMANDS = {
    "constraints": cmd_constraints, "ik": cmd_ik, "fk": cmd_fk, "classify": cmd_classify,
    "surface": cmd_surface, "selfmotion": cmd_selfmotion, "curve": cmd_curve, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ruukin", description="Translational 3-RUU parallel manipulator analysis.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("which", nargs="?", help="surface name for the surface command")
    p.add_argument("--design", help="design JSON file or built-in name (pars, pars2)")
    p.add_argument("--pose", help="translation y1,y2,y3")
    p.add_argument("--inputs", help="input parameters t1,t2,t3")
    p.add_argument("--grid", help="min:max:count[,...] per axis; a bare number fixes an axis")
    p.add_argument("--limb", type=int, default=1, choices=(1, 2, 3), help="limb for input-torus")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json", "dump"), default=None)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true", help="machine-readable verify report")
    p.add_argument("--full", action="store_true", help="verify: include the slow eliminant check")
    return p


VALUE_OPTIONS = ("--pose", "--inputs", "--grid")


def _join_values(argv: list[str]) -> list[str]:
    """Glue ``--pose -1,2,3`` into ``--pose=-1,2,3`` so negatives are not read as flags."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.tol <= 0:
        print("ruukin: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DesignError) as exc:
        print(f"ruukin: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
