import numpy as np
import pytest

from ruukin.surface import Axis, parse_grid, sample_surface, zero_crossings


def test_axis_parsing():
    assert Axis.parse("-1:1:3").values().tolist() == [-1.0, 0.0, 1.0]
    assert Axis.parse("0.5").count == 1
    for bad in ("1:0:5", "0:1:1", "0:1"):
        with pytest.raises(ValueError):
            Axis.parse(bad)
    assert len(parse_grid("-1:1:4")) == 3
    with pytest.raises(ValueError):
        parse_grid("0:1:2,0:1:2")


def test_zero_crossings():
    v = np.array([[[1.0], [-1.0], [2.0]]])
    assert zero_crossings(v).ravel().tolist() == [True, True, True]
    assert not zero_crossings(np.ones((2, 2, 2))).any()


def test_input_torus_grid_contains_degenerate_cells(pars):
    g = sample_surface(pars, "input-torus", parse_grid("-10:10:50"))
    assert g.values.shape == (50, 50, 50) and g.crossing.any()
    a = g.axes[0]
    for y2 in (2.0, -2.0):
        i, j, k = (np.searchsorted(a, v) - 1 for v in (-2.0, y2, 0.0))
        assert g.crossing[i:i + 2, j:j + 2, k:k + 2].any()


def test_joint_surfaces_spot_values(pars):
    axes = parse_grid("0:3:4")
    assert sample_surface(pars, "joint-input", axes).values[0, 0, 0] == 32
    assert sample_surface(pars, "joint-output", axes).values[0, 0, 0] == 144


def test_unknown_surface(pars):
    with pytest.raises(ValueError):
        sample_surface(pars, "nope", parse_grid("0:1:2"))


def test_thread_count_does_not_change_output(pars, monkeypatch):
    axes = parse_grid("-3:3:9")
    monkeypatch.setenv("RUUKIN_THREADS", "1")
    a = sample_surface(pars, "joint-input", axes).values
    monkeypatch.setenv("RUUKIN_THREADS", "4")
    b = sample_surface(pars, "joint-input", axes).values
    assert np.array_equal(a, b)
