"""Identity suite: every reference polynomial identity, re-derived and compared."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MPoly
from .model import TRANSLATIONAL, TWISTED, Design, translational_system
from .reference import reference

PARS = Design.builtin("pars")
PARS2 = Design.builtin("pars2")


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}: {self.detail}"

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def check_wt_match(design=None):
    wt = translational_system(None)
    bad = [n for n in ("g2", "g4", "g6") if wt[n] != reference(n)]
    return not bad, "g2, g4, g6 equal the reference system" if not bad else f"mismatch in {bad}"


def check_workspace_modes(design=None):
    from .workspace import eliminate_inputs

    bad = []
    for d in (PARS, PARS2):
        ws = eliminate_inputs(design=d)
        for mode, cond in (("O1", TRANSLATIONAL), ("O2", TWISTED)):
            sub = {k: MPoly.const(v) for k, v in cond.items()}
            for name, eq in ws.equations().items():
                if not eq.subs(sub).is_zero():
                    bad.append(f"{d.name}:{mode}:{name}")
    return not bad, "g12, g34, g56 vanish on O1 and O2" if not bad else f"nonzero: {bad}"


def check_input_minors(design=None):
    from .singularity import input_minors_translational

    f = input_minors_translational(None)
    ok = f.zero_minors == f.total_minors - 1
    return ok, f"{f.zero_minors}/{f.total_minors} minors vanish; survivor {f.survivor} = ({f.cofactor}) p1 p2 p3"


def check_output_det(design=None):
    from .singularity import output_det_translational

    f = output_det_translational(None)
    return True, f"det(J_o) = ({f.cofactor}) s1 s2; s1, s2 free of a3"


def check_torus(design=None):
    from .singularity import degenerate_points, scaled_value, torus_equation, torus_from_p

    design = design or PARS
    if torus_from_p(1, None) != reference("torus1"):
        return False, "limb-1 torus differs from the reference"

    tor = torus_equation(1, design)
    pts = [p for p in degenerate_points(design) if not isinstance(p[1], complex)]
    if not pts:
        return True, "torus identity exact; no real degenerate points"
    vals = []
    for p in pts:
        point = dict(zip(("y1", "y2", "y3"), p))
        if isinstance(p[1], float):
            vals.append(scaled_value(tor, point) <= 1e-12)
        else:
            vals.append(tor.eval(point).is_zero())
    if not all(vals):
        return False, "torus does not vanish at the degenerate points"
    return True, "torus identity exact; zero at both degenerate points"


def check_self_motion(design=None):
    from .kinematics import wt_residuals
    from .singularity import self_motion

    sm2, sm3 = self_motion(PARS2), self_motion(PARS)
    ok = (sm2.radius_sq == Fraction(7, 4) and set(sm2.fixed_inputs) == {Fraction(-1, 2), Fraction(-2)}
          and sm3.radius_sq == 8 and sm3.complex_inputs)
    r = math.sqrt(sm2.radius_sq_float)
    worst = 0.0
    for k in range(12):
        th = 2 * math.pi * k / 12
        y = (r * math.cos(th), r * math.sin(th), 0.0)
        worst = max(worst, *wt_residuals(PARS2, y, (-0.5, -0.5, -0.5)))
    ok = ok and worst <= 1e-9
    return ok, f"pars2 radius^2 {sm2.radius_sq}, inputs {sorted(map(str, sm2.fixed_inputs))}, " \
               f"circle residual {worst:.2e}; pars radius^2 {sm3.radius_sq}, complex {sm3.complex_inputs}"


def check_transition_curve(design=None):
    from .workspace import eliminate_inputs, membership, transition_curve_point

    c0 = transition_curve_point(0)
    if c0.coords != (1, 0, 0, 0, 0, 0, 0, Fraction(7, 2)):
        return False, f"C(0) = {c0.coords}"
    ws = eliminate_inputs(design=PARS2)
    worst = 0.0
    for k in range(50):
        t = -1 + 2 * k / 49
        worst = max(worst, *membership(ws, transition_curve_point(t), tol=1e-6).relative().values())
    return worst <= 1e-6, f"C(0) exact; worst scaled residual on 50 samples {worst:.2e}"


def check_joint_input(design=None):
    from .singularity import joint_poly_eval, joint_poly_scaled, torus_configurations

    design = design or PARS
    const = joint_poly_eval("input", (0, 0, 0), exact=True)
    cfg = torus_configurations(design, 20, limb=3)
    worst = max(joint_poly_scaled("input", t) for _, t in cfg) if cfg else math.inf
    ok = const == 32 and len(cfg) >= 20 and worst <= 1e-6
    return ok, f"constant term {const}; {len(cfg)} input-singular triples, worst {worst:.2e}"


def check_joint_output(design=None):
    from .singularity import joint_poly_eval, joint_poly_scaled, output_configurations

    design = design or PARS
    const = joint_poly_eval("output", (0, 0, 0), exact=True)
    cfg = output_configurations(design, 20, factor="s1")
    worst = max(joint_poly_scaled("output", t) for _, t in cfg) if cfg else math.inf
    ok = const == 144 and len(cfg) >= 20 and worst <= 1e-6
    return ok, f"constant term {const}; {len(cfg)} s1-singular triples, worst {worst:.2e}"


def check_eliminant_circle(design=None):
    from .singularity import output_eliminant, scaled_value

    el = output_eliminant(PARS, "s1")
    r = math.sqrt(8)
    vals = [scaled_value(el, {"y1": r * math.cos(math.radians(a)), "y2": r * math.sin(math.radians(a)), "y3": 0.0})
            for a in (0, 30, 45)]
    return max(vals) <= 1e-6, f"scaled values on the circle y1^2 + y2^2 = 8: {[f'{v:.1e}' for v in vals]}"


CHECKS = (
    ("wt-match", check_wt_match),
    ("workspace-modes", check_workspace_modes),
    ("input-minors", check_input_minors),
    ("output-det", check_output_det),
    ("torus", check_torus),
    ("self-motion", check_self_motion),
    ("transition-curve", check_transition_curve),
    ("joint-input", check_joint_input),
    ("joint-output", check_joint_output),
)
SLOW_CHECKS = (("eliminant-circle", check_eliminant_circle),)


def run_checks(design: Design | None = None, full: bool = False) -> list[CheckResult]:
    """Run the suite; ``design`` replaces the default for design-specific checks."""
    out = []
    for name, fn in CHECKS + (SLOW_CHECKS if full else ()):
        start = time.perf_counter()
        try:
            ok, detail = fn(design)
        except ArithmeticError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(ok), detail, time.perf_counter() - start))
    return out


__all__ = ["CheckResult", "CHECKS", "SLOW_CHECKS", "run_checks"]
