# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Godunov update sweep and the periodic tridiagonal solve.

The periodic (cyclic) system ((1+2a) I - a S - a S^T) x = d, with S the
cyclic shift, is reduced to a plain tridiagonal system plus a rank-one
Sherman-Morrison correction.  The Thomas elimination coefficients depend
only on (a, n) and are precomputed once per solver.
"""

import numpy as np


def godunov_step(double[::1] u, double[::1] v, double tau, double h,
                 double[::1] out):
    """out_k = u_k - (tau/h) (g(u_k,u_{k+1}) - g(u_{k-1},u_k)) - tau v_k."""
    cdef Py_ssize_t n = u.shape[0]
    cdef Py_ssize_t k
    cdef double r = tau / h
    cdef double ul, ur, fl, fr, g, gprev, gfirst

    # flux through interface between cell n-1 and cell 0
    ul = u[n - 1]
    ur = u[0]
    fl = 0.5 * ul * ul
    fr = 0.5 * ur * ur
    if ul >= ur:
        gprev = fl if fl >= fr else fr
    elif ul >= 0.0:
        gprev = fl
    elif ur <= 0.0:
        gprev = fr
    else:
        gprev = 0.0
    gfirst = gprev

    for k in range(n):
        ul = u[k]
        ur = u[k + 1] if k + 1 < n else u[0]
        if k + 1 < n:
            fl = 0.5 * ul * ul
            fr = 0.5 * ur * ur
            if ul >= ur:
                g = fl if fl >= fr else fr
            elif ul >= 0.0:
                g = fl
            elif ur <= 0.0:
                g = fr
            else:
                g = 0.0
        else:
            g = gfirst
        out[k] = u[k] - r * (g - gprev) - tau * v[k]
        gprev = g


cdef class CyclicTridiagonal:
    """Solver for ((1+2a) I - a (S + S^T)) x = d with periodic wraparound."""

    cdef Py_ssize_t n
    cdef double a, denom
    cdef double[::1] cp        # Thomas elimination coefficients
    cdef double[::1] q         # T^{-1} w, w = e_0 + e_{n-1}
    cdef double[::1] scratch

    def __init__(self, double a, Py_ssize_t n):
        if n < 3:
            raise ValueError("cyclic tridiagonal solve needs n >= 3")
        self.n = n
        self.a = a
        self.cp = np.empty(n)
        self.q = np.empty(n)
        self.scratch = np.empty(n)
        self._factor()

    cdef void _factor(self):
        # T is the corner-free tridiagonal part: diag (b+a, b, ..., b, b+a),
        # off-diagonals -a, with b = 1 + 2a;  A = T - a w w^T, w = e0 + e_{n-1}.
        cdef Py_ssize_t k
        cdef double b = 1.0 + 2.0 * self.a
        cdef double a = self.a
        cdef double diag, rhs
        cdef double[::1] cp = self.cp
        cdef double[::1] q = self.q

        diag = b + a
        cp[0] = -a / diag
        q[0] = 1.0 / diag
        for k in range(1, self.n):
            diag = (b + a if k == self.n - 1 else b) + a * cp[k - 1]
            cp[k] = -a / diag
            rhs = 1.0 if k == self.n - 1 else 0.0
            q[k] = (rhs + a * q[k - 1]) / diag
        for k in range(self.n - 2, -1, -1):
            q[k] = q[k] - cp[k] * q[k + 1]
        self.denom = 1.0 - a * (q[0] + q[self.n - 1])

    def solve(self, double[::1] d, double[::1] out):
        cdef Py_ssize_t k, n = self.n
        cdef double a = self.a
        cdef double b = 1.0 + 2.0 * a
        cdef double diag, corr
        cdef double[::1] cp = self.cp
        cdef double[::1] q = self.q
        cdef double[::1] y = self.scratch

        diag = b + a
        y[0] = d[0] / diag
        for k in range(1, n):
            diag = (b + a if k == n - 1 else b) + a * cp[k - 1]
            y[k] = (d[k] + a * y[k - 1]) / diag
        for k in range(n - 2, -1, -1):
            y[k] = y[k] - cp[k] * y[k + 1]
        corr = a * (y[0] + y[n - 1]) / self.denom
        for k in range(n):
            out[k] = y[k] + corr * q[k]
