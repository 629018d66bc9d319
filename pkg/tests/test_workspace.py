import math
from fractions import Fraction

import numpy as np
import pytest

from ruukin.algebra import MPoly
from ruukin.model import TRANSLATIONAL, TWISTED, Pose
from ruukin.workspace import (
    curve_h, eliminate_inputs, membership, mode_of, rotated_sibling, transition_curve_point,
)


@pytest.fixture(scope="module")
def ws_pars2(pars2, cache_dir):
    return eliminate_inputs(design=pars2, cache_dir=cache_dir)


def _cond(c):
    return {k: MPoly.const(v) for k, v in c.items()}


@pytest.mark.parametrize("name", ["pars", "pars2"])
def test_modes_vanish_identically(name, request, cache_dir):
    design = request.getfixturevalue(name)
    ws = eliminate_inputs(design=design, cache_dir=cache_dir)
    for cond in (TRANSLATIONAL, TWISTED):
        for eq in ws.equations().values():
            assert eq.subs(_cond(cond)).is_zero()


def test_workspace_degrees(ws_pars2):
    assert set(ws_pars2.degrees().values()) == {8}


def test_cache_round_trip(pars2, tmp_path):
    a = eliminate_inputs(design=pars2, cache_dir=tmp_path)
    assert list(tmp_path.glob("workspace-*.dump"))
    b = eliminate_inputs(design=pars2, cache_dir=tmp_path)
    assert a.equations() == b.equations()


def test_membership_projective_invariance(ws_pars2):
    p = transition_curve_point(0.3)
    r1 = membership(ws_pars2, p)
    r2 = membership(ws_pars2, p.scaled(-7.5))
    assert r1.in_workspace and r2.in_workspace
    for k in r1.relative():
        assert r1.relative()[k] == pytest.approx(r2.relative()[k], abs=1e-15)


def test_translational_poses_are_members(ws_pars2):
    assert membership(ws_pars2, Pose.translational(0.4, -1.1, 2.3)).in_workspace


def test_generic_pose_is_not_member(ws_pars2):
    from ruukin.model import displacement
    dq = displacement((Fraction(3, 5), Fraction(4, 5), 0, 0), (1, 2, 3))
    assert not membership(ws_pars2, dq.to_pose()).in_workspace


def test_curve_start_and_siblings(ws_pars2):
    c0 = transition_curve_point(0)
    assert c0.coords == (1, 0, 0, 0, 0, 0, 0, Fraction(7, 2))
    assert curve_h(0.0) == pytest.approx(14.0)
    for t in np.linspace(-1, 1, 9):
        for k in (0, 1, 2):
            assert membership(ws_pars2, transition_curve_point(float(t), k), tol=1e-6).in_workspace
    with pytest.raises(ValueError):
        transition_curve_point(1.5)


def test_mode_of():
    assert mode_of(Pose.translational(1, 2, 3)) == "O1"
    assert mode_of(Pose((0, 0, 0, 1, 1, 2, 3, 0))) == "O2"
    assert mode_of(transition_curve_point(0.2)) == "other"
    with pytest.raises(ValueError):
        mode_of(Pose((0,) * 8))


def test_rotated_sibling_keeps_study_quadric():
    p = transition_curve_point(0.7)
    for k in (1, 2):
        s = rotated_sibling(p, k)
        c = s.as_floats()
        assert abs(sum(c[i] * c[i + 4] for i in range(4))) < 1e-12
        assert math.isclose(sum(v * v for v in c[:4]), 1.0)
