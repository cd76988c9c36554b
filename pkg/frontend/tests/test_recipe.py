import pytest

from fwfig.recipe import FigureRecipe, RecipeError, load_recipe


def _write(tmp_path, text):
    p = tmp_path / "fig.ini"
    p.write_text(text)
    return p


GOOD = """\
[figure]
kind = profiles-overlay
output = out/fig.png

[inputs]
files =
    a.csv
    b.csv

[style]
title = demo
xlim = 0,1
legend = yes
"""


def test_load_good_recipe(tmp_path):
    r = load_recipe(_write(tmp_path, GOOD))
    assert r.kind == "profiles-overlay"
    assert [p.name for p in r.inputs] == ["a.csv", "b.csv"]
    # paths resolve relative to the recipe file
    assert r.inputs[0].parent == tmp_path
    assert r.output == tmp_path / "out" / "fig.png"
    assert r.style == {"title": "demo", "xlim": (0.0, 1.0), "legend": True}


def test_comma_separated_inputs(tmp_path):
    text = GOOD.replace("files =\n    a.csv\n    b.csv", "files = a.csv, b.csv")
    r = load_recipe(_write(tmp_path, text))
    assert [p.name for p in r.inputs] == ["a.csv", "b.csv"]


def test_missing_recipe_file(tmp_path):
    with pytest.raises(RecipeError, match="not found"):
        load_recipe(tmp_path / "nope.ini")


def test_missing_figure_section(tmp_path):
    with pytest.raises(RecipeError, match="figure"):
        load_recipe(_write(tmp_path, "[inputs]\nfiles = a.csv\n"))


def test_unknown_kind(tmp_path):
    with pytest.raises(RecipeError, match="unknown figure kind"):
        load_recipe(_write(tmp_path, GOOD.replace("profiles-overlay", "pie")))


def test_unknown_style_key(tmp_path):
    with pytest.raises(RecipeError, match="colr"):
        load_recipe(_write(tmp_path, GOOD + "colr = red\n"))


def test_bad_limit_pair(tmp_path):
    with pytest.raises(RecipeError, match="xlim"):
        load_recipe(_write(tmp_path, GOOD.replace("xlim = 0,1", "xlim = 0;1")))


def test_no_inputs(tmp_path):
    text = "[figure]\nkind = wave-family\noutput = f.png\n[inputs]\nfiles =\n"
    with pytest.raises(RecipeError, match="no input"):
        load_recipe(_write(tmp_path, text))


def test_direct_construction_validates():
    with pytest.raises(RecipeError):
        FigureRecipe(kind="nope", inputs=("a.csv",), output="f.png")
