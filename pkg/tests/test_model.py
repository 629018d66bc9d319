import json
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ruukin.algebra import MPoly
from ruukin.model import (
    INPUTS, STUDY, Design, DesignError, Pose, anchor, displacement,
    general_constraints, reference_translational_system, resolve_design, rot_z, translational_system,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=8)


def _unit_rational_quat(a, b, c):
    # stereographic parametrization gives rational unit quaternions
    n = 1 + a * a + b * b + c * c
    return ((1 - a * a - b * b - c * c) / n, 2 * a / n, 2 * b / n, 2 * c / n)


def _rotate(q, v):
    """Rotate vector v by unit quaternion q (float oracle via matrix)."""
    w, x, y, z = (float(c) for c in q)
    r = np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])
    return r @ np.asarray(v, dtype=float)


def test_builtin_designs():
    d = Design.builtin("pars")
    assert (d.a1, d.a3, d.r0, d.r1) == (3, 5, 11, 7)
    d2 = Design.builtin("pars2")
    assert (d2.a1, d2.a3, d2.r0, d2.r1) == (5, 4, 11, 7)


def test_design_validation(tmp_path):
    with pytest.raises(DesignError):
        Design.from_mapping({"a1": 3, "a3": 5, "r0": 0, "r1": 7})
    with pytest.raises(DesignError):
        Design.from_mapping({"a1": 3, "a3": 5, "r0": 11})
    with pytest.raises(DesignError):
        Design.from_mapping({"a1": 3.5, "a3": 5, "r0": 11, "r1": 7})
    with pytest.raises(DesignError):
        Design.builtin("nope")
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    with pytest.raises(DesignError):
        Design.from_json(bad)


def test_design_json_round_trip(tmp_path):
    d = Design.from_mapping({"a1": "7/2", "a3": 5, "r0": 11, "r1": 7})
    path = tmp_path / "d.json"
    path.write_text(d.to_json())
    assert Design.from_json(path) == d
    assert resolve_design(str(path)) == d
    assert resolve_design("pars") == Design.builtin("pars")
    assert json.loads(d.to_json())["a1"] in ("7/2",)


@settings(max_examples=30)
@given(small, small, small, small, small, small)
def test_displacement_is_on_study_quadric_and_moves_points(a, b, c, d1, d2, d3):
    q = _unit_rational_quat(a, b, c)
    dq = displacement(q, (d1, d2, d3))
    assert dq.study_condition() == 0
    assert sum(v * v for v in dq.primal) == 1
    # translation recovered as -2 * dual * conj(primal)
    from ruukin.model import qconj, qmul
    tq = qmul(dq.dual, qconj(dq.primal))
    assert tuple(-2 * v for v in tq[1:]) == (d1, d2, d3)


@settings(max_examples=30)
@given(small, small, small, small, small, small, small, small, small)
def test_composition_associative_and_matches_matrices(a, b, c, d, e, f, g, h, i):
    A = displacement(_unit_rational_quat(a, b, c), (d, e, f))
    B = displacement(_unit_rational_quat(g, h, i), (f, d, e))
    C = displacement(_unit_rational_quat(c, a, b), (i, g, h))
    assert (A * B) * C == A * (B * C)
    # acting on a point: (A*B)(p) = A(B(p)), float oracle with rotation matrices
    p = np.array([0.3, -1.2, 2.0])

    def act(dq, v):
        from ruukin.model import qconj, qmul
        t = np.array([-2 * float(x) for x in qmul(dq.dual, qconj(dq.primal))[1:]])
        return _rotate(dq.primal, v) + t

    assert np.allclose(act(A * B, p), act(A, act(B, p)))


def test_rot_z_thirds():
    r = rot_z(1)
    v = _rotate([float(x) for x in r.primal], [1.0, 0.0, 0.0])
    assert np.allclose(v, [math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3), 0.0])
    assert (rot_z(1) * rot_z(2)).primal == rot_z(0).primal or \
        (rot_z(1) * rot_z(2)).primal == tuple(-x for x in rot_z(0).primal)


def test_anchor_places_joint_on_circle():
    a = anchor(Fraction(11), 1)
    from ruukin.model import qconj, qmul
    t = [-2 * float(x) for x in qmul(a.dual, qconj(a.primal))[1:]]
    assert np.allclose(t, [11 * math.cos(2 * math.pi / 3), 11 * math.sin(2 * math.pi / 3), 0])


def test_pose_helpers():
    p = Pose.translational(1, 2, 3)
    assert p.is_translational()
    assert p.translation_part() == (1, 2, 3)
    assert p.study_residual() == 0
    n = p.scaled(4).normalized()
    assert n.coords[0] == pytest.approx(1.0)
    with pytest.raises(ValueError):
        Pose((0,) * 8).normalized()
    with pytest.raises(ValueError):
        Pose((1, 2))


def test_general_system_structure():
    cs = general_constraints(None)
    assert cs.names == tuple(f"g{i}" for i in range(1, 9))
    x = [MPoly.var(n) for n in STUDY]
    assert cs["g7"] == sum((x[i] * x[i + 4] for i in range(4)), MPoly())
    assert cs["g8"] == sum((x[i] * x[i] for i in range(4)), MPoly()) - 1
    for k, var in enumerate(INPUTS):
        for name in (f"g{2 * k + 1}", f"g{2 * k + 2}"):
            used = set(cs[name].variables) & set(INPUTS)
            assert used == {var}


def test_generated_wt_matches_reference_symbolically():
    gen = translational_system(None)
    ref = reference_translational_system(None)
    for name in ("g2", "g4", "g6"):
        assert gen[name] == ref[name]


def test_specialized_wt_matches_reference(pars):
    gen = translational_system(pars)
    ref = reference_translational_system(pars)
    assert all(gen[n] == ref[n] for n in ("g2", "g4", "g6"))


def test_odd_constraints_vanish_on_translational_space():
    cs = general_constraints(None)
    cond = {"x0": MPoly.const(1), "x1": MPoly(), "x2": MPoly(), "x3": MPoly(), "y0": MPoly()}
    for name in ("g1", "g3", "g5", "g7"):
        assert cs[name].subs(cond).is_zero()


def test_constraints_hold_on_constructed_configuration(pars):
    """Build a limb-consistent pose from IK and check every g_k."""
    from ruukin.kinematics import ik

    rng = random.Random(3)
    cs = general_constraints(pars)
    for _ in range(5):
        y = (rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.5, 3))
        sol = ik(pars, y)
        if not sol.reachable:
            continue
        t = sol.combinations()[0]
        point = dict(zip(STUDY, (1.0, 0.0, 0.0, 0.0, 0.0, *y)))
        point.update(zip(INPUTS, t))
        for name, g in cs:
            scale = g.abs_scale(point) or 1.0
            assert abs(g.eval_float(point)) <= 1e-9 * scale, name
