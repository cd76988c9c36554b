"""Parabolic regularization u_t + u u_x + (1 - d^2/dx^2)^{-1} u_x = eps u_xx.

IMEX splitting: advection and the nonlocal term explicit, diffusion
implicit (one cyclic tridiagonal solve per step).  The advection term uses
the energy-conserving split form (D(u^2) + u Du)/3 built from centered
differences, so the discrete L2 energy can only decrease through the
implicit diffusion (up to the O(tau^2) explicit defect).
"""

from dataclasses import dataclass

import numpy as np

from fwlab.godunov import NumericalFailure, Trajectory
from fwlab.grid import StateField
from fwlab.helmholtz import HelmholtzSolver
from fwlab.kernels import CyclicTridiagonal


@dataclass
class ViscousConfig:
    grid: object
    epsilon: float
    t_end: float
    tau: float = None
    output_times: list = None
    include_advection: bool = True
    include_nonlocal: bool = True

    def __post_init__(self):
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be > 0")
        if self.t_end <= 0.0:
            raise ValueError("t_end must be > 0")
        if self.output_times is None:
            self.output_times = [self.t_end]
        self.output_times = sorted(float(t) for t in self.output_times)


def default_tau(cfg, u0):
    """Advective CFL combined with the explicit-defect bound
    tau <= eps / (2 max|u0|^2), which keeps the L2 ledger monotone."""
    umax = float(np.max(np.abs(u0.values)))
    tau = cfg.grid.h if umax == 0.0 else cfg.grid.h / umax
    if umax > 0.0:
        tau = min(tau, 0.25 * cfg.epsilon / (umax * umax))
    return tau


@dataclass
class EnergyLedger:
    times: np.ndarray
    l2_half: np.ndarray       # ||u||_L2^2 / 2 per step
    dissipation: np.ndarray   # eps ||D u||_L2^2 per step
    residual: np.ndarray      # |d/dt(l2_half) + dissipation|


def _centered(w, h):
    return (np.roll(w, -1) - np.roll(w, 1)) / (2.0 * h)


def _explicit_terms(u, h, helm, include_advection, include_nonlocal):
    rhs = np.zeros_like(u)
    if include_advection:
        rhs += (_centered(u * u, h) + u * _centered(u, h)) / 3.0
    if include_nonlocal:
        v = np.empty_like(u)
        helm._tri.solve(np.ascontiguousarray(_centered(u, h)), v)
        rhs += v
    return rhs


def viscous_step(u, solver, epsilon, tau, include_advection=True,
                 include_nonlocal=True, diffusion=None):
    """One IMEX step: (I - eps tau D2) u_new = u - tau (u u_x + nonlocal)."""
    h = u.grid.h
    if diffusion is None:
        diffusion = CyclicTridiagonal(epsilon * tau / (h * h), u.grid.n)
    w = u.values - tau * _explicit_terms(
        u.values, h, solver, include_advection, include_nonlocal
    )
    out = np.empty_like(w)
    diffusion.solve(np.ascontiguousarray(w), out)
    if not np.all(np.isfinite(out)):
        raise NumericalFailure("non-finite values in viscous update", u.time)
    return StateField(u.grid, out, u.time + tau)


def run_viscous(u0, cfg, solver=None):
    """Advance u0 to cfg.t_end; returns (Trajectory, EnergyLedger)."""
    if solver is None and cfg.include_nonlocal:
        solver = HelmholtzSolver(cfg.grid)
    h = cfg.grid.h
    tau = cfg.tau if cfg.tau is not None else default_tau(cfg, u0)
    diffusion = CyclicTridiagonal(cfg.epsilon * tau / (h * h), cfg.grid.n)

    u = u0.values.copy()
    t = 0.0
    eps_t = 1e-12
    out_times = list(cfg.output_times)
    snapshots = []
    series = {k: [] for k in ("t", "max", "min", "l1", "l2", "mass")}
    times, l2h, diss, resid = [], [], [], []

    def record_diag():
        series["t"].append(t)
        series["max"].append(float(u.max()))
        series["min"].append(float(u.min()))
        series["l1"].append(float(np.abs(u).sum() * h))
        series["l2"].append(float(np.sqrt((u * u).sum() * h)))
        series["mass"].append(float(u.sum() * h))

    record_diag()
    while out_times and out_times[0] <= t + eps_t:
        snapshots.append(StateField(cfg.grid, u.copy(), t))
        out_times.pop(0)

    while t < cfg.t_end - eps_t:
        step_tau = min(tau, cfg.t_end - t)
        e_old = 0.5 * float((u * u).sum() * h)
        w = u - step_tau * _explicit_terms(
            u, h, solver, cfg.include_advection, cfg.include_nonlocal
        )
        unew = np.empty_like(w)
        if step_tau == tau:
            diffusion.solve(w, unew)
        else:
            CyclicTridiagonal(cfg.epsilon * step_tau / (h * h), cfg.grid.n).solve(
                w, unew
            )
        if not np.all(np.isfinite(unew)):
            raise NumericalFailure("non-finite values in viscous update", t)
        u = unew
        t += step_tau
        e_new = 0.5 * float((u * u).sum() * h)
        du = _centered(u, h)
        d = cfg.epsilon * float((du * du).sum() * h)
        times.append(t)
        l2h.append(e_new)
        diss.append(d)
        resid.append(abs((e_new - e_old) / step_tau + d))
        record_diag()
        while out_times and out_times[0] <= t + eps_t:
            snapshots.append(StateField(cfg.grid, u.copy(), t))
            out_times.pop(0)

    traj = Trajectory(snapshots, {k: np.asarray(v) for k, v in series.items()})
    ledger = EnergyLedger(
        np.asarray(times), np.asarray(l2h), np.asarray(diss), np.asarray(resid)
    )
    return traj, ledger
