import json
import math

import pytest

from ruukin.algebra.dump import read_sections
from ruukin.cli import fmt_number, main
from ruukin.reference import reference


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ik_prints_roots(capsys):
    code, out, _ = run(capsys, "ik", "--design", "pars.json", "--pose", "0,0,2")
    assert code == 0
    rep = json.loads(out)
    for limb in rep["limbs"]:
        assert limb["roots"] == pytest.approx([3 - math.sqrt(14), 3 + math.sqrt(14)], rel=1e-12)


def test_fk_self_motion_exit_code(capsys):
    code, out, _ = run(capsys, "fk", "--design", "pars2.json", "--inputs", "-0.5,-0.5,-0.5")
    assert code == 3
    rep = json.loads(out)
    assert rep["tag"] == "self-motion-circle"
    assert rep["circle"]["radius_sq"] == pytest.approx(1.75)


def test_classify_torus_configuration(capsys, pars):
    from ruukin.singularity import torus_configurations

    y, t = torus_configurations(pars, 1)[0]
    code, out, _ = run(capsys, "classify", "--pose", ",".join(map(repr, y)), "--inputs", ",".join(map(repr, t)))
    assert code == 0 and json.loads(out)["input_singular"] == [1]


def test_classify_off_workspace_is_usage_error(capsys):
    code, _, err = run(capsys, "classify", "--pose", "0,0,2", "--inputs", "1,1,1")
    assert code == 1 and "W_T" in err


def test_constraints_dump(capsys, tmp_path, pars):
    out = tmp_path / "c.dump"
    assert run(capsys, "constraints", "--design", "pars", "--out", str(out))[0] == 0
    with out.open() as fh:
        _, polys = read_sections(fh)
    assert polys["WT.g2"] == reference("g2").subs(pars.assignment())
    assert {f"g{i}" for i in range(1, 9)} <= set(polys)


def test_constraints_dump_parses_back_exactly(capsys, tmp_path):
    a, b = tmp_path / "a.dump", tmp_path / "b.dump"
    run(capsys, "constraints", "--design", "pars2", "--out", str(a))
    with a.open() as fh:
        header, polys = read_sections(fh)
    from ruukin.algebra.dump import write_sections
    with b.open("w") as fh:
        write_sections(fh, polys, header)
    assert a.read_bytes() == b.read_bytes()


def test_bad_design_exits_nonzero(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"a1": 3, "a3": 5, "r0": 0, "r1": 7}))
    code, _, err = run(capsys, "constraints", "--design", str(bad))
    assert code == 1 and "r0" in err


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "ik")[0] == 1
    assert run(capsys, "surface", "nope")[0] == 1
    assert run(capsys, "ik", "--pose", "1,2")[0] == 1
    assert run(capsys, "ik", "--pose", "0,0,1", "--tol", "-1")[0] == 1


def test_surface_csv(capsys, tmp_path):
    out = tmp_path / "s.csv"
    assert run(capsys, "surface", "joint-input", "--grid", "-3:3:3", "--out", str(out))[0] == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "# design=pars(3,5,11,7); surface=joint-input"
    assert lines[1] == "t1,t2,t3,residual,crossing"
    row = [r for r in lines[2:] if r.startswith("0,0,0,")]
    assert row and row[0].split(",")[3] == "32"
    assert len(lines) == 2 + 27


def test_surface_output_is_deterministic(capsys):
    a = run(capsys, "surface", "input-torus", "--grid", "-4:4:6,-4:4:6,0")[1]
    b = run(capsys, "surface", "input-torus", "--grid", "-4:4:6,-4:4:6,0")[1]
    assert a == b and a.count("\n") == 2 + 36


def test_selfmotion_and_curve(capsys):
    code, out, _ = run(capsys, "selfmotion", "--design", "pars2")
    rep = json.loads(out)
    assert code == 0 and rep["radius_sq"] == "7/4" and rep["fixed_inputs"] == ["-2", "-1/2"]
    code, out, _ = run(capsys, "curve", "--grid", "-1:1:5")
    samples = json.loads(out)["samples"]
    assert [s["mode"] for s in samples] == ["other", "other", "O1", "other", "other"]
    assert all(s["member"] for s in samples)


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert {c["name"] for c in rep["checks"]} >= {"wt-match", "input-minors", "output-det", "torus"}


def test_verify_perturbed_design_fails(capsys, tmp_path):
    d = tmp_path / "pert.json"
    d.write_text(json.dumps({"a1": "3001/1000", "a3": 5, "r0": 11, "r1": 7}))
    code, out, _ = run(capsys, "verify", "--design", str(d))
    assert code == 2
    failed = {line.split()[1].rstrip(":") for line in out.splitlines() if line.startswith("FAIL")}
    assert {"joint-input", "joint-output"} <= failed


def test_number_format():
    from fractions import Fraction
    assert fmt_number(Fraction(7, 2)) == "7/2"
    assert fmt_number(0.1) == "0.10000000000000001"
    assert fmt_number(-0.0) == "0"
