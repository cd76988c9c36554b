"""Rendering: CSV columns go onto matplotlib axes unmodified, so plotted
point coordinates round-trip exactly to the parsed input."""

from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

PROFILE_COLUMNS = ("x", "u")
ORBIT_COLUMNS = ("step", "u_a", "u_b")


class InputError(ValueError):
    """Missing or malformed input CSV; the message names the file."""


def load_csv(path, columns):
    path = Path(path)
    try:
        with open(path) as fh:
            header = fh.readline().strip()
            if tuple(header.split(",")) != columns:
                raise InputError(
                    f"{path}: expected header {','.join(columns)!r}, "
                    f"got {header!r}"
                )
            try:
                data = np.loadtxt(fh, delimiter=",", ndmin=2)
            except ValueError as exc:
                raise InputError(f"{path}: malformed row ({exc})")
    except FileNotFoundError:
        raise InputError(f"{path}: no such file")
    if data.shape[0] == 0 or data.shape[1] != len(columns):
        raise InputError(f"{path}: expected {len(columns)} columns")
    return data


def _apply_style(ax, style, n_labels):
    ax.set_xlabel(style.get("xlabel", "x"))
    ax.set_ylabel(style.get("ylabel", "u"))
    if "title" in style:
        ax.set_title(style["title"])
    if "xlim" in style:
        ax.set_xlim(style["xlim"])
    if "ylim" in style:
        ax.set_ylim(style["ylim"])
    if style.get("legend", n_labels <= 8):
        ax.legend(loc="best", fontsize="small")


def build_figure(recipe):
    """Assemble the figure without saving; returns (figure, axes)."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=120)
    if recipe.kind in ("profiles-overlay", "wave-family"):
        for path in recipe.inputs:
            data = load_csv(path, PROFILE_COLUMNS)
            ax.plot(data[:, 0], data[:, 1], lw=1.0, label=Path(path).stem)
        _apply_style(ax, recipe.style, len(recipe.inputs))
    elif recipe.kind == "orbit-scatter":
        for path in recipe.inputs:
            data = load_csv(path, ORBIT_COLUMNS)
            ax.plot(data[:, 1], data[:, 2], ".", ms=1.5, label=Path(path).stem)
        style = {"xlabel": "u_a", "ylabel": "u_b", **recipe.style}
        _apply_style(ax, style, len(recipe.inputs))
    else:  # pragma: no cover - FigureRecipe already validates the kind
        raise InputError(f"unknown figure kind {recipe.kind!r}")
    return fig, ax


def render(recipe):
    """Build and save the figure; returns the output path."""
    fig, _ = build_figure(recipe)
    recipe.output.parent.mkdir(parents=True, exist_ok=True)
    try:
        fig.savefig(recipe.output)
    finally:
        plt.close(fig)
    return recipe.output
