"""Periodic grid on the unit torus, field container, initial-data presets,
and the closed-form Helmholtz kernel."""

from dataclasses import dataclass

import numpy as np

E = np.e


@dataclass(frozen=True)
class PeriodicGrid:
    """Uniform discretization of the torus [0,1) into n cells of width h=1/n."""

    n: int

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"grid needs n >= 4 cells, got {self.n}")

    @property
    def h(self):
        return 1.0 / self.n

    @property
    def x(self):
        """Cell sample points x_k = k h."""
        return np.arange(self.n) / self.n

    def neighbor(self, k, offset):
        return (k + offset) % self.n


@dataclass
class StateField:
    """Cell values of a scalar field on a PeriodicGrid at one time level."""

    grid: PeriodicGrid
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (self.grid.n,):
            raise ValueError(
                f"values length {self.values.shape} does not match grid n={self.grid.n}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("field contains non-finite entries")
        if self.time < 0.0:
            raise ValueError("time must be >= 0")

    def copy(self):
        return StateField(self.grid, self.values.copy(), self.time)


def make_grid(n):
    return PeriodicGrid(int(n))


def eval_kernel(x):
    """Green's function of (1 - d^2/dx^2) on the torus,
    K(x) = (e^x + e^(1-x)) / (2(e-1)) for x in [0, 1]."""
    x = np.asarray(x, dtype=np.float64)
    if np.any(x < 0.0) or np.any(x > 1.0):
        raise ValueError("kernel argument must lie in [0, 1]")
    out = (np.exp(x) + np.exp(1.0 - x)) / (2.0 * (E - 1.0))
    return float(out) if out.ndim == 0 else out


def _data1(x):
    return np.cos(2.0 * np.pi * x + 0.5) + 1.0


def _data2(x):
    return (
        0.2 * np.cos(2.0 * np.pi * x)
        + 0.1 * np.cos(4.0 * np.pi * x)
        - 0.3 * np.sin(6.0 * np.pi * x)
        + 0.5
    )


def initial_data(name, grid, q=1.0, coeffs=None):
    """Sample a named initial-data preset at the cell centers of *grid*.

    Presets: "data1", "data2", "cosine" (amplitude q), or "fourier" with
    coeffs = (a, b), two length-3 sequences giving
    sum_k a_k cos(2 k pi x) + b_k sin(2 k pi x).
    """
    x = grid.x
    if name == "data1":
        vals = _data1(x)
    elif name == "data2":
        vals = _data2(x)
    elif name == "cosine":
        vals = q * np.cos(2.0 * np.pi * x)
    elif name == "fourier":
        if coeffs is None:
            raise ValueError("fourier preset needs coeffs=(a, b)")
        a, b = coeffs
        if len(a) > 3 or len(b) > 3:
            raise ValueError("fourier preset supports modes k <= 3")
        vals = np.zeros_like(x)
        for k, ak in enumerate(a, start=1):
            vals += ak * np.cos(2.0 * k * np.pi * x)
        for k, bk in enumerate(b, start=1):
            vals += bk * np.sin(2.0 * k * np.pi * x)
    else:
        raise ValueError(f"unknown initial-data preset {name!r}")
    return StateField(grid, vals, 0.0)
