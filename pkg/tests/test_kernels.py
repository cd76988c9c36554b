"""Backend parity: the compiled kernels and the pure-Python fallback must
agree to rounding on the same inputs; the cyclic solve must match a dense
linear-algebra oracle."""

import numpy as np
import pytest

import fwlab.kernels as kernels
from fwlab.kernels import _fallback


def _random_state(n, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(n)


def test_backend_constant_is_valid():
    assert kernels.BACKEND in ("compiled", "python")


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_godunov_step_backend_parity(seed):
    n = 257
    h = 1.0 / n
    u = _random_state(n, seed)
    v = _random_state(n, seed + 100)
    tau = 0.2 * h / np.max(np.abs(u))
    out_a = np.empty(n)
    out_b = np.empty(n)
    kernels.godunov_step(u, v, tau, h, out_a)
    _fallback.godunov_step(u, v, tau, h, out_b)
    assert np.max(np.abs(out_a - out_b)) < 1e-14


@pytest.mark.parametrize("a", [1.0, 1e4, 1e6])
@pytest.mark.parametrize("n", [5, 64, 1000])
def test_cyclic_solve_matches_dense_oracle(a, n):
    rhs = _random_state(n, n)
    mat = np.diag(np.full(n, 1.0 + 2.0 * a))
    for k in range(n):
        mat[k, (k + 1) % n] -= a
        mat[k, (k - 1) % n] -= a
    ref = np.linalg.solve(mat, rhs)
    # condition number of the matrix is ~ 1 + 4a (eigenvalue range)
    tol = 100.0 * np.finfo(float).eps * (1.0 + 4.0 * a) * np.max(np.abs(ref))
    out = np.empty(n)
    kernels.CyclicTridiagonal(a, n).solve(rhs, out)
    assert np.max(np.abs(out - ref)) < tol
    out_fb = np.empty(n)
    _fallback.CyclicTridiagonal(a, n).solve(rhs, out_fb)
    assert np.max(np.abs(out_fb - ref)) < tol


def test_cyclic_solve_constant_invariant():
    # row sums are 1, so the constant vector is an eigenvector
    n = 100
    tri = kernels.CyclicTridiagonal(123.4, n)
    out = np.empty(n)
    tri.solve(np.full(n, 2.5), out)
    assert np.max(np.abs(out - 2.5)) < 1e-12
