"""Pure numpy/scipy implementations of the hot kernels.

Used when the compiled extension is unavailable (or forced via the
FWLAB_PURE_PYTHON environment variable); semantics are identical.
"""

import numpy as np
from scipy.linalg import cho_solve_banded, cholesky_banded


def godunov_step(u, v, tau, h, out):
    ul = u
    ur = np.roll(u, -1)
    fl = 0.5 * ul * ul
    fr = 0.5 * ur * ur
    g = np.where(
        ul >= ur,
        np.maximum(fl, fr),
        np.where(ul >= 0.0, fl, np.where(ur <= 0.0, fr, 0.0)),
    )
    np.subtract(u, (tau / h) * (g - np.roll(g, 1)), out=out)
    out -= tau * v
    return out


class CyclicTridiagonal:
    """Solver for ((1+2a) I - a (S + S^T)) x = d with periodic wraparound.

    The corner entries are removed by a symmetric rank-one update
    A = T - a w w^T (w = e0 + e_{n-1}); T is SPD and banded-Cholesky
    factored once, the Sherman-Morrison correction is applied per solve.
    """

    def __init__(self, a, n):
        if n < 3:
            raise ValueError("cyclic tridiagonal solve needs n >= 3")
        self.a = a
        self.n = n
        b = 1.0 + 2.0 * a
        ab = np.zeros((2, n))
        ab[0, 1:] = -a
        ab[1, :] = b
        ab[1, 0] = b + a
        ab[1, -1] = b + a
        self._cb = cholesky_banded(ab)
        w = np.zeros(n)
        w[0] = 1.0
        w[-1] = 1.0
        self._q = cho_solve_banded((self._cb, False), w)
        self._denom = 1.0 - a * (self._q[0] + self._q[-1])

    def solve(self, d, out):
        y = cho_solve_banded((self._cb, False), np.asarray(d))
        corr = self.a * (y[0] + y[-1]) / self._denom
        np.add(y, corr * self._q, out=out)
        return out
