"""Figure recipes: a small INI file naming a figure kind, its input CSVs,
and styling.

    [figure]
    kind = profiles-overlay        ; or wave-family, orbit-scatter
    output = fig1.png

    [inputs]
    files =
        runs/out/snap_t0.csv
        runs/out/snap_t0.2.csv

    [style]                        ; all keys optional
    title = profiles
    xlabel = x
    ylabel = u
    xlim = 0,1
    ylim = -1,2.5
    legend = true

Input CSVs must follow the producer's column contract: `x,u` for the
profile kinds, `step,u_a,u_b` for orbit-scatter.
"""

import configparser
from dataclasses import dataclass, field
from pathlib import Path

KINDS = ("profiles-overlay", "wave-family", "orbit-scatter")

STYLE_KEYS = ("title", "xlabel", "ylabel", "xlim", "ylim", "legend")


class RecipeError(ValueError):
    """Malformed or incomplete recipe file."""


@dataclass(frozen=True)
class FigureRecipe:
    kind: str
    inputs: tuple
    output: Path
    style: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RecipeError(f"unknown figure kind {self.kind!r}")
        if not self.inputs:
            raise RecipeError("recipe lists no input files")


def _parse_pair(raw, key):
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) != 2:
        raise RecipeError(f"style key {key!r} needs two comma-separated numbers")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise RecipeError(f"style key {key!r}: cannot interpret {raw!r}")


def _parse_bool(raw, key):
    low = raw.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise RecipeError(f"style key {key!r}: cannot interpret {raw!r}")


def load_recipe(path):
    path = Path(path)
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except FileNotFoundError:
        raise RecipeError(f"recipe file not found: {path}")
    except configparser.Error as exc:
        raise RecipeError(f"recipe parse error: {exc}")

    if "figure" not in parser:
        raise RecipeError("recipe is missing the [figure] section")
    fig = parser["figure"]
    for key in fig:
        if key not in ("kind", "output"):
            raise RecipeError(f"unknown [figure] key {key!r}")
    if "kind" not in fig or "output" not in fig:
        raise RecipeError("[figure] needs both 'kind' and 'output'")

    if "inputs" not in parser or "files" not in parser["inputs"]:
        raise RecipeError("recipe is missing [inputs] files")
    base = path.parent
    inputs = tuple(
        base / line.strip()
        for line in parser["inputs"]["files"].replace(",", "\n").splitlines()
        if line.strip()
    )

    style = {}
    if "style" in parser:
        for key, raw in parser["style"].items():
            if key not in STYLE_KEYS:
                raise RecipeError(f"unknown [style] key {key!r}")
            if key in ("xlim", "ylim"):
                style[key] = _parse_pair(raw, key)
            elif key == "legend":
                style[key] = _parse_bool(raw, key)
            else:
                style[key] = raw.strip()

    return FigureRecipe(
        kind=fig["kind"].strip(),
        inputs=inputs,
        output=base / fig["output"].strip(),
        style=style,
    )
