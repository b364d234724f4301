import pathlib

import pytest

import realideal

PROBLEMS = pathlib.Path(__file__).resolve().parents[2] / "problems"


def text(name):
    return (PROBLEMS / name).read_text()


def test_circle_is_not_real():
    v = realideal.is_real(text("circle.pop"))
    assert v["verdict"] == "NotReal"
    assert v["certificate"] == "complex-split"


def test_tangency_is_not_equal():
    assert realideal.check_equality(text("tangency.pop"))["verdict"] == "NotEqual"


def test_cylinder_augmentation():
    r = realideal.augment(text("cylinder.pop"))
    assert r["verdict"] == "Equal"
    assert r["generators"] == ["x", "z^2 - 2*z", "y*z - 2*y"]


def test_line_relaxation():
    src = text("line.pop")
    assert realideal.base_order(src) == 2
    s = realideal.solve(src, 2)
    assert s["status"] == "optimal"
    assert s["primal"] == pytest.approx(0.5, abs=1e-6)
    assert s["dual"] == pytest.approx(0.5, abs=1e-6)
    assert s["moments"][0] == 1.0


def test_sdpa_and_render():
    dat = realideal.sdpa(text("line.pop"), 2)
    assert dat.splitlines()[1:4] == ["5", "2", "3 -6"]
    canon = realideal.render(text("cylinder.pop"))
    assert realideal.render(canon) == canon


def test_errors():
    with pytest.raises(realideal.ParseError):
        realideal.render("vars x;\nx^^2 = 0;")
    with pytest.raises(ValueError):
        realideal.solve(text("circle.pop"), 2)
