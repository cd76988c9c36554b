from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from fwfig.cli import main
from fwfig.recipe import FigureRecipe
from fwfig.render import InputError, build_figure, load_csv, render


def _profile_csv(path, n=50, seed=0):
    rng = np.random.default_rng(seed)
    x = np.arange(n) / n
    u = rng.standard_normal(n)
    lines = ["x,u"] + [f"{xi:.10g},{ui:.10g}" for xi, ui in zip(x, u)]
    Path(path).write_text("\n".join(lines) + "\n")


def _orbit_csv(path, n=40, seed=1):
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((n, 2))
    lines = ["step,u_a,u_b"] + [
        f"{i},{a:.10g},{b:.10g}" for i, (a, b) in enumerate(pts)
    ]
    Path(path).write_text("\n".join(lines) + "\n")


def test_load_csv_checks_header(tmp_path):
    p = tmp_path / "a.csv"
    p.write_text("x,v\n0,1\n")
    with pytest.raises(InputError, match="a.csv"):
        load_csv(p, ("x", "u"))


def test_load_csv_checks_rows(tmp_path):
    p = tmp_path / "a.csv"
    p.write_text("x,u\n0,1\n0.5,oops\n")
    with pytest.raises(InputError, match="a.csv"):
        load_csv(p, ("x", "u"))


def test_load_csv_missing_file(tmp_path):
    with pytest.raises(InputError, match="nope.csv"):
        load_csv(tmp_path / "nope.csv", ("x", "u"))


def test_roundtrip_profiles(tmp_path):
    # plotted coordinates must equal the parsed CSV to the last bit
    for i in range(3):
        _profile_csv(tmp_path / f"s{i}.csv", seed=i)
    recipe = FigureRecipe(
        kind="profiles-overlay",
        inputs=tuple(tmp_path / f"s{i}.csv" for i in range(3)),
        output=tmp_path / "fig.png",
    )
    fig, ax = build_figure(recipe)
    try:
        lines = ax.get_lines()
        assert len(lines) == 3
        for i, line in enumerate(lines):
            ref = load_csv(tmp_path / f"s{i}.csv", ("x", "u"))
            assert np.array_equal(line.get_xydata(), ref)
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_roundtrip_orbit(tmp_path):
    _orbit_csv(tmp_path / "orbit.csv")
    recipe = FigureRecipe(
        kind="orbit-scatter",
        inputs=(tmp_path / "orbit.csv",),
        output=tmp_path / "fig.png",
    )
    fig, ax = build_figure(recipe)
    try:
        (line,) = ax.get_lines()
        ref = load_csv(tmp_path / "orbit.csv", ("step", "u_a", "u_b"))
        assert np.array_equal(line.get_xydata(), ref[:, 1:])
    finally:
        import matplotlib.pyplot as plt

        plt.close(fig)


def test_render_writes_image_deterministically(tmp_path):
    _profile_csv(tmp_path / "s.csv")
    out_a = tmp_path / "a.png"
    out_b = tmp_path / "b.png"
    for out in (out_a, out_b):
        recipe = FigureRecipe(
            kind="wave-family", inputs=(tmp_path / "s.csv",), output=out,
            style={"title": "t", "ylim": (-3.0, 3.0)},
        )
        render(recipe)
    assert out_a.stat().st_size > 0
    assert out_a.read_bytes() == out_b.read_bytes()


def _recipe_file(tmp_path, body):
    p = tmp_path / "fig.ini"
    p.write_text(body)
    return p


def test_cli_renders(tmp_path):
    _profile_csv(tmp_path / "s.csv")
    rp = _recipe_file(
        tmp_path,
        "[figure]\nkind = profiles-overlay\noutput = fig.png\n"
        "[inputs]\nfiles = s.csv\n",
    )
    res = CliRunner().invoke(main, ["render", str(rp)])
    assert res.exit_code == 0, res.output
    assert (tmp_path / "fig.png").exists()


def test_cli_missing_csv_exit_1(tmp_path):
    rp = _recipe_file(
        tmp_path,
        "[figure]\nkind = profiles-overlay\noutput = fig.png\n"
        "[inputs]\nfiles = ghost.csv\n",
    )
    res = CliRunner().invoke(main, ["render", str(rp)])
    assert res.exit_code == 1
    assert "ghost.csv" in res.output


def test_cli_bad_recipe_exit_2(tmp_path):
    rp = _recipe_file(
        tmp_path,
        "[figure]\nkind = pie\noutput = fig.png\n[inputs]\nfiles = s.csv\n",
    )
    res = CliRunner().invoke(main, ["render", str(rp)])
    assert res.exit_code == 2
