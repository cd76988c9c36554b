"""Command-line entry point.

Exit codes: 0 rendered, 1 input CSV missing/malformed, 2 recipe error.
"""

import sys

import click

from fwfig.recipe import RecipeError, load_recipe
from fwfig.render import InputError, render


@click.group()
def main():
    """Figure rendering from simulation run directories."""


@main.command("render")
@click.argument("recipe_file", type=click.Path())
def render_cmd(recipe_file):
    """Render the figure described by RECIPE_FILE."""
    try:
        recipe = load_recipe(recipe_file)
    except RecipeError as exc:
        click.echo(f"recipe error: {exc}", err=True)
        sys.exit(2)
    try:
        out = render(recipe)
    except InputError as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
