"""Nonlocal operator v = (1 - d^2/dx^2)^{-1} u_x on the periodic grid.

Production path: central differences + cyclic tridiagonal solve,
    (1 + 2/h^2) v_k - (1/h^2)(v_{k+1} + v_{k-1}) = (u_{k+1} - u_{k-1}) / (2h).
A spectral (trigonometric interpolation) version is provided as a test
oracle; it is not used by the solvers.
"""

import numpy as np

from fwlab.grid import StateField
from fwlab.kernels import CyclicTridiagonal


class HelmholtzSolver:
    """Precomputed cyclic tridiagonal factorization for one grid; O(n) per apply."""

    def __init__(self, grid):
        self.grid = grid
        h = grid.h
        self._tri = CyclicTridiagonal(1.0 / (h * h), grid.n)
        self._inv2h = 1.0 / (2.0 * h)

    def apply_nonlocal(self, u):
        if u.grid.n != self.grid.n:
            raise ValueError(
                f"field grid n={u.grid.n} does not match solver grid n={self.grid.n}"
            )
        w = u.values
        rhs = (np.roll(w, -1) - np.roll(w, 1)) * self._inv2h
        out = np.empty_like(rhs)
        self._tri.solve(rhs, out)
        return StateField(u.grid, out, u.time)

    def apply_inverse(self, u):
        """(1 - d^2/dx^2)^{-1} u without the derivative on the right-hand side."""
        if u.grid.n != self.grid.n:
            raise ValueError("grid mismatch")
        out = np.empty(self.grid.n)
        self._tri.solve(np.ascontiguousarray(u.values), out)
        return StateField(u.grid, out, u.time)


def apply_nonlocal(solver, u):
    return solver.apply_nonlocal(u)


def apply_nonlocal_spectral(u):
    """Fourier-multiplier oracle: mode m of the output is
    2 pi i m / (1 + (2 pi m)^2) times mode m of u."""
    n = u.grid.n
    if n % 2 != 0:
        raise ValueError("spectral oracle requires even n")
    uhat = np.fft.rfft(u.values)
    m = np.arange(uhat.size)
    mult = 2.0j * np.pi * m / (1.0 + (2.0 * np.pi * m) ** 2)
    # the Nyquist mode of a real field has no well-defined odd derivative
    mult[-1] = 0.0
    vals = np.fft.irfft(uhat * mult, n=n)
    return StateField(u.grid, vals, u.time)
