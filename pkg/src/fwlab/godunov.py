"""Godunov finite-volume scheme for u_t + u u_x + (1 - d^2/dx^2)^{-1} u_x = 0.

The hyperbolic part uses the exact-Riemann (Godunov) flux for f(u) = u^2/2;
the nonlocal term is an explicit forward-Euler source evaluated at the old
time level.  Time step tau = cfl_factor * h / q with q the typical size of
the data; a mid-run guard halves tau if max|u| outgrows it.
"""

from dataclasses import dataclass, field

import numpy as np

from fwlab.grid import StateField
from fwlab.helmholtz import HelmholtzSolver
from fwlab.kernels import godunov_step as _godunov_kernel


class NumericalFailure(RuntimeError):
    """Solver blow-up; carries the failing time."""

    def __init__(self, message, time):
        super().__init__(f"{message} (at t = {time:.6g})")
        self.time = time


@dataclass
class GodunovConfig:
    grid: object
    q: float
    t_end: float
    output_times: list = None
    cfl_factor: float = 0.4
    include_nonlocal: bool = True
    probe_cells: tuple = None  # (i, j): record (u_i, u_j) every step

    def __post_init__(self):
        if self.q <= 0.0:
            raise ValueError("q must be > 0")
        if self.t_end <= 0.0:
            raise ValueError("t_end must be > 0")
        if self.output_times is None:
            self.output_times = [self.t_end]
        self.output_times = sorted(float(t) for t in self.output_times)
        if self.output_times and (
            self.output_times[0] < 0.0 or self.output_times[-1] > self.t_end
        ):
            raise ValueError("output_times must lie in [0, t_end]")

    @property
    def tau(self):
        return self.cfl_factor * self.grid.h / self.q


@dataclass
class Trajectory:
    snapshots: list
    diagnostics: dict
    probe: np.ndarray = None  # (n_steps, 2) orbit-probe series, if requested

    @property
    def times(self):
        return [s.time for s in self.snapshots]

    def reversed(self):
        """Time-reversed copy (same snapshot times, states in reverse order);
        used to feed inadmissible data to the entropy checker."""
        times = self.times
        snaps = [
            StateField(s.grid, s.values.copy(), t)
            for s, t in zip(reversed(self.snapshots), times)
        ]
        return Trajectory(snaps, dict(self.diagnostics), self.probe)


def godunov_flux(u_left, u_right):
    """Exact-Riemann flux for f(u) = u^2/2."""
    fl = 0.5 * u_left * u_left
    fr = 0.5 * u_right * u_right
    if u_left >= u_right:
        return max(fl, fr)
    if u_left >= 0.0:
        return fl
    if u_right <= 0.0:
        return fr
    return 0.0


def step(u, solver, tau, include_nonlocal=True):
    """One forward step; returns a new StateField at time u.time + tau."""
    h = u.grid.h
    umax = float(np.max(np.abs(u.values)))
    if umax > 0.0 and tau > h / umax:
        raise NumericalFailure("CFL violation beyond recoverable rescaling", u.time)
    if include_nonlocal:
        v = solver.apply_nonlocal(u).values
    else:
        v = np.zeros(u.grid.n)
    out = np.empty(u.grid.n)
    _godunov_kernel(u.values, v, tau, h, out)
    if not np.all(np.isfinite(out)):
        raise NumericalFailure("non-finite values in Godunov update", u.time)
    return StateField(u.grid, out, u.time + tau)


def run(u0, cfg, solver=None):
    """Advance u0 to cfg.t_end recording snapshots and per-step diagnostics.

    Snapshots are taken at the first step time >= each requested output time
    (no interpolation).  Deterministic given inputs.
    """
    if u0.grid.n != cfg.grid.n:
        raise ValueError("initial data grid does not match config grid")
    if solver is None and cfg.include_nonlocal:
        solver = HelmholtzSolver(cfg.grid)

    h = cfg.grid.h
    tau = cfg.tau
    u = u0.values.copy()
    t = 0.0
    n = cfg.grid.n

    out_times = list(cfg.output_times)
    snapshots = []
    series = {k: [] for k in ("t", "max", "min", "l1", "l2", "mass")}
    probe = [] if cfg.probe_cells else None
    ia, ib = cfg.probe_cells if cfg.probe_cells else (0, 0)

    work = np.empty(n)
    zero = np.zeros(n)
    eps = 1e-12

    def record_diag():
        series["t"].append(t)
        series["max"].append(float(u.max()))
        series["min"].append(float(u.min()))
        series["l1"].append(float(np.abs(u).sum() * h))
        series["l2"].append(float(np.sqrt((u * u).sum() * h)))
        series["mass"].append(float(u.sum() * h))

    record_diag()
    while out_times and out_times[0] <= t + eps:
        snapshots.append(StateField(cfg.grid, u.copy(), t))
        out_times.pop(0)

    while t < cfg.t_end - eps:
        umax = float(np.max(np.abs(u)))
        while umax > 0.0 and tau > cfg.cfl_factor * h / umax:
            tau *= 0.5
        if cfg.include_nonlocal:
            rhs = (np.roll(u, -1) - np.roll(u, 1)) * (0.5 / h)
            v = work
            solver._tri.solve(rhs, v)
        else:
            v = zero
        unew = np.empty(n)
        _godunov_kernel(u, v, tau, h, unew)
        if not np.all(np.isfinite(unew)):
            raise NumericalFailure("non-finite values in Godunov update", t)
        u = unew
        t += tau
        record_diag()
        if probe is not None:
            probe.append((u[ia], u[ib]))
        while out_times and out_times[0] <= t + eps:
            snapshots.append(StateField(cfg.grid, u.copy(), t))
            out_times.pop(0)

    diagnostics = {k: np.asarray(v) for k, v in series.items()}
    return Trajectory(
        snapshots, diagnostics, np.asarray(probe) if probe is not None else None
    )
