import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from ruukin.algebra import MPoly
from ruukin.kinematics import ik
from ruukin.model import INPUTS, STUDY, general_constraints
from ruukin.reference import reference
from ruukin.singularity import (
    classify, common_torus_points, degenerate_points, input_minors_translational, input_sing_root,
    jacobian, joint_poly, joint_poly_eval, joint_poly_scaled, limb_frame, NotOnWorkspace,
    output_configurations, regular_configurations, scaled_value, self_motion, torus_configurations,
    torus_equation, torus_from_p,
)

Y = ("y1", "y2", "y3")


@pytest.fixture(scope="module")
def jac(pars):
    return jacobian(general_constraints(pars))


def test_jacobian_trivial_rows(jac):
    names = list(jac.names)
    g7, g8 = names.index("g7"), names.index("g8")
    assert all(jac.Ji[g8, j].is_zero() for j in range(3))
    expected = [MPoly.var(v) for v in STUDY[4:] + STUDY[:4]]
    assert [jac.Jo[g7, j] for j in range(8)] == expected


def test_jacobian_matches_finite_differences(pars, jac):
    cs = general_constraints(pars)
    rng = np.random.default_rng(0)
    names = STUDY + INPUTS
    h = 1e-6
    for _ in range(10):
        point = dict(zip(names, rng.uniform(-1, 1, len(names))))
        Jo, Ji = jac.eval_float(point)
        full = np.hstack([Jo, Ji])
        for k, (_, g) in enumerate(cs):
            for j, v in enumerate(names):
                up, dn = dict(point), dict(point)
                up[v] += h
                dn[v] -= h
                fd = (g.eval_float(up) - g.eval_float(dn)) / (2 * h)
                assert fd == pytest.approx(full[k, j], rel=1e-6, abs=1e-6 * max(1.0, abs(full[k, j])))


def test_input_minor_factorization():
    f = input_minors_translational(None)
    assert (f.zero_minors, f.total_minors) == (55, 56)
    assert f.cofactor.is_constant() and not f.cofactor.is_zero()
    assert f.factors[0] == reference("p1")


def test_input_sing_root_examples(pars):
    r = input_sing_root(1, (1, 0, 0), pars)
    assert r.value == Fraction(-9, 5)
    d = input_sing_root(1, (0, 0, 0), pars)
    assert d.degenerate


def test_degenerate_points_on_torus(pars):
    pts = degenerate_points(pars)
    assert sorted(pts) == [(-2, -2, 0), (-2, 2, 0)]
    tor = torus_equation(1, pars)
    for p in pts:
        assert tor.eval(dict(zip(Y, p))).is_zero()
        r = input_sing_root(1, p, pars)
        assert r.degenerate and r.constant_zero and r.pair_holds


def test_torus_matches_reference_and_symmetries():
    t1 = torus_from_p(1, None)
    assert t1 == reference("torus1")
    assert all(e[_idx("y2")] % 2 == 0 for e, _ in t1.terms())
    for limb in (2, 3):
        rotated = torus_equation(limb)
        direct = torus_from_p(limb, None)
        assert rotated == direct or rotated == -direct


def _idx(name):
    from ruukin.algebra.poly import VAR_INDEX
    return VAR_INDEX[name]


def test_torus_line_roots_make_minors_vanish(pars, jac):
    tor = torus_equation(1, pars).subs({"y2": MPoly(), "y3": MPoly()})
    coeffs = [float(c) for c in reversed(tor.coeffs_in("y1"))]
    roots = [r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-9]
    assert roots
    checked = 0
    for y1 in roots:
        y = (y1, 0.0, 0.0)
        root = input_sing_root(1, y, pars)
        sol = ik(pars, y)
        if root.degenerate or not sol.roots[1] or not sol.roots[2]:
            continue
        point = dict(zip(STUDY, (1.0, 0.0, 0.0, 0.0, 0.0, *y)))
        point.update(zip(INPUTS, (float(root.value), sol.roots[1][0], sol.roots[2][0])))
        _, Ji = jac.eval_float(point)
        scale = np.abs(Ji).max() ** 3
        for rows in itertools.combinations(range(8), 3):
            assert abs(np.linalg.det(Ji[list(rows)])) <= 1e-6 * scale
        checked += 1
    assert checked


def test_common_torus_points(pars):
    pts = common_torus_points(pars, starts=30)
    axis = [p for p in pts if abs(p[0]) + abs(p[1]) < 1e-9]
    assert sorted(round(p[2], 9) for p in axis) == [round(-2 * math.sqrt(3), 9), round(2 * math.sqrt(3), 9)]
    for p in pts:
        for limb in (1, 2, 3):
            assert scaled_value(torus_equation(limb, pars), dict(zip(Y, p))) <= 1e-9


def test_output_factorization(output_factorization):
    f = output_factorization
    assert "a3" not in f.s1.variables and "a3" not in f.s2.variables
    assert f.cofactor.is_constant() and not f.cofactor.is_zero()
    assert f.s1 * f.s2 * f.cofactor == f.det


def test_joint_poly_constants_and_symmetry():
    assert joint_poly_eval("input", (0, 0, 0), exact=True) == 32
    assert joint_poly_eval("output", (0, 0, 0), exact=True) == 144
    assert joint_poly("input").total_degree() == joint_poly("output").total_degree() == 12
    t = (Fraction(1, 3), Fraction(-2, 5), Fraction(3, 7))
    out = joint_poly_eval("output", t, exact=True)
    for perm in itertools.permutations(t):
        assert joint_poly_eval("output", perm, exact=True) == out
    assert joint_poly_eval("input", (t[1], t[0], t[2]), exact=True) == joint_poly_eval("input", t, exact=True)
    assert joint_poly_scaled("input", (1, 1, 1)) > 1e-3
    assert joint_poly_scaled("output", (1, 1, 1)) > 1e-3


def test_joint_input_vanishes_on_input_singular_triples(pars):
    cfg = torus_configurations(pars, 8, limb=3, seed=5)
    assert len(cfg) == 8
    for y, t in cfg:
        assert joint_poly_scaled("input", t) <= 1e-6
        assert 3 in classify(pars, y, t).input_singular


def test_joint_output_pairs_with_s1(pars):
    s1 = output_configurations(pars, 5, factor="s1", seed=1)
    assert max(joint_poly_scaled("output", t) for _, t in s1) <= 1e-6
    s2 = output_configurations(pars, 5, factor="s2", seed=1)
    assert min(joint_poly_scaled("output", t) for _, t in s2) > 1e-8


def test_regular_configurations_are_away_from_singularities(pars):
    cfg = regular_configurations(pars, 3, seed=11)
    assert len(cfg) == 3
    for points, t in cfg:
        for y in points:
            rep = classify(pars, y, t)
            assert not rep.input_singular and not rep.output_singular


def test_eliminant_vanishes_on_circle(eliminant):
    r = math.sqrt(8)
    for deg in (0, 30, 45, 100):
        a = math.radians(deg)
        assert scaled_value(eliminant, {"y1": r * math.cos(a), "y2": r * math.sin(a), "y3": 0.0}) <= 1e-6
    assert scaled_value(eliminant, {"y1": 0.0, "y2": 0.0, "y3": 2.0}) > 1e-6
    assert set(eliminant.variables) <= set(Y)


def test_self_motion(pars, pars2):
    sm = self_motion(pars2)
    assert sm.radius_sq == Fraction(7, 4)
    assert set(sm.fixed_inputs) == {Fraction(-1, 2), Fraction(-2)}
    sm3 = self_motion(pars)
    assert sm3.radius_sq == 8 and sm3.complex_inputs
    # complex spheres: centers (0, 0, +-i sqrt7/2), radius 5/2 give the same real circle
    assert Fraction(25, 4) + Fraction(7, 4) == sm3.radius_sq
    for z in sm3.fixed_inputs:
        assert abs(z * z + 1.5 * z + 1) < 1e-12


def test_classify_examples(pars, pars2):
    tau = 3 - math.sqrt(14)
    rep = classify(pars, (0, 0, 2), (tau,) * 3)
    assert not rep.input_singular and not rep.output_singular and not rep.self_motion
    r = math.sqrt(7 / 4)
    rep = classify(pars2, (r * math.cos(1.0), r * math.sin(1.0), 0.0), (-0.5,) * 3)
    assert rep.output_singular and rep.self_motion
    y, t = torus_configurations(pars, 1)[0]
    assert classify(pars, y, t).input_singular == (1,)
    with pytest.raises(NotOnWorkspace):
        classify(pars, (0, 0, 2), (1, 1, 1))


def test_limb_frame_rotates_by_thirds():
    sub = limb_frame(2)
    pt = {"y1": 1.0, "y2": 0.0}
    v = (sub["y1"].eval_float(pt), sub["y2"].eval_float(pt))
    assert np.allclose(v, (math.cos(2 * math.pi / 3), -math.sin(2 * math.pi / 3)))
