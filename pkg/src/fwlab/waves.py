"""Periodic traveling waves: Newton continuation on the profile equation

    V - V'' + c - sqrt(c^2 + 2V) = 0,      U = c - sqrt(c^2 + 2V),

bifurcation speeds c_n = 1/(1 + (2 pi n)^2), peakon-limit detection, wave
evolution under the Godunov solver with an orbit probe, and the
phase-plane shooting study for single-shock waves

    Y Y' = Z,   Z' = Y^2/2 + Y - beta,   Y(0) + Y(1) = 0, Z(0) = Z(1).
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.integrate import solve_ivp

from fwlab.godunov import GodunovConfig, run
from fwlab.grid import StateField

# discriminant fraction below which a profile counts as the peakon limit
PEAKON_DISCRIMINANT_FRACTION = 1e-4


class TrivialBranchError(RuntimeError):
    """Newton converged to the trivial solution V == 0."""


class NewtonError(RuntimeError):
    pass


@dataclass
class WaveProfile:
    c: float
    grid: object
    V: np.ndarray
    U: np.ndarray
    discriminant_min: float
    residual: float

    @property
    def amplitude(self):
        return float(self.U.max() - self.U.min())


def bifurcation_speed(n_mode):
    if n_mode < 1:
        raise ValueError("mode number must be >= 1")
    return 1.0 / (1.0 + (2.0 * np.pi * n_mode) ** 2)


def _second_difference(grid):
    n, h = grid.n, grid.h
    main = np.full(n, -2.0)
    off = np.ones(n - 1)
    d2 = sp.diags([off, main, off], [-1, 0, 1], format="lil")
    d2[0, -1] = 1.0
    d2[-1, 0] = 1.0
    return (d2 / (h * h)).tocsc()


def cosine_seed(grid, amplitude):
    return amplitude * np.cos(2.0 * np.pi * grid.x)


def _seed_values(seed, grid):
    if isinstance(seed, WaveProfile):
        return seed.V.copy()
    if isinstance(seed, StateField):
        return seed.values.copy()
    return np.asarray(seed, dtype=np.float64).copy()


def solve_wave(c, seed, grid, tol=1e-12, max_iter=100, trivial_tol=1e-10):
    """Damped Newton on the periodic central-difference profile equation.

    Raises TrivialBranchError if the iteration lands on V == 0, and
    NewtonError on divergence.  The square root is protected by step
    backtracking; sqrt of a negative argument is never evaluated.
    """
    n = grid.n
    V = _seed_values(seed, grid)
    if V.shape != (n,):
        raise ValueError("seed length does not match grid")
    d2 = _second_difference(grid)
    eye = sp.identity(n, format="csc")
    c2 = c * c

    disc = c2 + 2.0 * V
    if np.any(disc < 0.0):
        raise ValueError("seed violates discriminant positivity")

    def residual_vec(V, disc):
        return V - d2 @ V + c - np.sqrt(disc)

    F = residual_vec(V, disc)
    for _ in range(max_iter):
        res = float(np.max(np.abs(F)))
        if res < tol:
            break
        jac = eye - d2 - sp.diags(1.0 / np.sqrt(disc), format="csc")
        dV = spla.spsolve(jac, -F)
        s = 1.0
        for _ in range(60):
            Vn = V + s * dV
            discn = c2 + 2.0 * Vn
            if np.min(discn) >= 0.0:
                Fn = residual_vec(Vn, discn)
                if np.max(np.abs(Fn)) < max(res, tol):
                    break
            s *= 0.5
        else:
            raise NewtonError(f"Newton backtracking stalled at c = {c:.6g}")
        V, disc, F = Vn, discn, Fn
    else:
        raise NewtonError(f"Newton did not converge at c = {c:.6g}")

    if float(np.max(np.abs(V))) < trivial_tol:
        raise TrivialBranchError(f"converged to V == 0 at c = {c:.6g}")
    U = c - np.sqrt(disc)
    return WaveProfile(
        c=c,
        grid=grid,
        V=V,
        U=U,
        discriminant_min=float(np.min(disc)),
        residual=float(np.max(np.abs(F))),
    )


def continue_branch(c_start, c_stop, steps, grid, seed=None):
    """Natural parameter continuation, previous solution as next seed."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    cs = np.linspace(c_start, c_stop, steps)
    if seed is None:
        seed = cosine_seed(grid, 0.8 * c_start * c_start / 2.0)
    profiles = []
    current = seed
    for c in cs:
        prof = solve_wave(c, current, grid)
        profiles.append(prof)
        current = prof
    return profiles


def find_upper_endpoint(grid, c_from=0.0260, dc=2e-4, dc_min=1e-7):
    """March c upward until the discriminant minimum hits the peakon
    threshold; adaptive step halving near the corner limit."""
    prof = continue_branch(0.0255, c_from, 4, grid)[-1]
    c = prof.c
    while dc >= dc_min:
        try:
            cand = solve_wave(c + dc, prof, grid)
        except (NewtonError, TrivialBranchError, ValueError):
            dc *= 0.5
            continue
        if cand.discriminant_min < PEAKON_DISCRIMINANT_FRACTION * cand.c**2:
            return cand.c, cand
        prof, c = cand, cand.c
        if cand.discriminant_min < 0.05 * cand.c**2:
            dc = min(dc, 5e-5)
    return c, prof


PERTURBATIONS = ("cos2", "cos3", "cos4", "asym")


def perturbation_shape(name, grid):
    x = grid.x
    if name in ("cos2", "cos3", "cos4"):
        k = int(name[-1])
        return np.cos(2.0 * k * np.pi * x)
    if name == "asym":
        return np.where(x < 0.5, 1.0 - np.cos(4.0 * np.pi * x), 0.0)
    raise ValueError(f"unknown perturbation preset {name!r}")


def evolve_wave_as_initial_data(profile, t_end, perturbation=None,
                                output_times=None, cfl_factor=0.4):
    """Run the Godunov solver from the wave profile (optionally perturbed),
    recording the (u_a, u_b) orbit probe at cells round(0.3 n), round(0.6 n)."""
    grid = profile.grid
    u0 = profile.U.copy()
    delta = 0.0
    if perturbation is not None:
        delta, name = perturbation
        u0 = u0 + delta * perturbation_shape(name, grid)
    q = float(np.max(np.abs(u0)))
    if q == 0.0:
        raise ValueError("profile is identically zero")
    ia = round(0.3 * grid.n) % grid.n
    ib = round(0.6 * grid.n) % grid.n
    cfg = GodunovConfig(
        grid=grid,
        q=q,
        t_end=t_end,
        output_times=output_times,
        cfl_factor=cfl_factor,
        probe_cells=(ia, ib),
    )
    return run(StateField(grid, u0), cfg)


def default_delta(profile, pct=5.0):
    return 0.01 * pct * profile.amplitude


def translate_profile(profile, shift):
    """U(x - shift) by periodic linear interpolation at the grid points."""
    x = profile.grid.x
    xs = (x - shift) % 1.0
    xp = np.concatenate([x, [1.0]])
    up = np.concatenate([profile.U, [profile.U[0]]])
    return np.interp(xs, xp, up)


# ---------------------------------------------------------------------------
# phase-plane shooting for single-shock traveling waves


@dataclass
class PhaseTrajectory:
    beta: float
    samples: np.ndarray            # rows (x, Y, Z)
    events: list = field(default_factory=list)   # x locations of Y = 0
    status: str = "ok"             # ok | no-return | y-zero | degenerate


def phase_shoot(beta, y0, z0, y_max=50.0, rtol=1e-9, atol=1e-12):
    """Integrate the shooting problem over x in [0, 1].

    Works in the regular variables (W, Z), W = Y^2/2, with the sign of Y
    carried alongside; a C^1 trajectory can only cross Y = 0 through the
    origin of the (Y, Z)-plane, so hitting W = 0 with Z != 0 terminates the
    shot.  Returns (PhaseTrajectory, residual) where residual is the pair
    (Y(1) + Y(0), Z(1) - Z(0)) or None if x = 1 was not reached.
    """
    if y0 == 0.0:
        raise ValueError("shooting start requires y0 != 0")
    sigma = 1.0 if y0 > 0.0 else -1.0
    state = np.array([0.5 * y0 * y0, z0])
    x = 0.0
    xs, ys, zs, events = [], [], [], []
    status = "ok"
    origin_tol = 1e-8

    def rhs(x, s):
        w, z = s
        return [z, w + sigma * np.sqrt(max(2.0 * w, 0.0)) - beta]

    def hit_zero(x, s):
        return s[0]

    hit_zero.terminal = True
    hit_zero.direction = -1.0

    def escape(x, s):
        return s[0] - 0.5 * y_max * y_max

    escape.terminal = True
    escape.direction = 1.0

    while x < 1.0:
        sol = solve_ivp(
            rhs,
            (x, 1.0),
            state,
            events=[hit_zero, escape],
            rtol=rtol,
            atol=atol,
            dense_output=True,
            max_step=0.05,
        )
        xs.extend(sol.t)
        w = np.maximum(sol.y[0], 0.0)
        ys.extend(sigma * np.sqrt(2.0 * w))
        zs.extend(sol.y[1])
        if sol.status == 1:  # an event fired
            if sol.t_events[1].size:
                status = "no-return"
                break
            xe = float(sol.t_events[0][0])
            ze = float(sol.y_events[0][0][1])
            events.append(xe)
            if abs(ze) > origin_tol:
                status = "y-zero"
                break
            # passes through the (Y,Z) origin: degenerate point, the
            # continuation is not unique
            status = "degenerate"
            break
        if sol.status != 0:
            status = "no-return"
            break
        x = 1.0
        state = sol.y[:, -1]

    samples = np.column_stack([xs, ys, zs])
    traj = PhaseTrajectory(beta=beta, samples=samples, events=events, status=status)
    if status != "ok":
        return traj, None
    y_end = sigma * np.sqrt(max(2.0 * state[0], 0.0))
    residual = np.array([y_end + y0, state[1] - z0])
    return traj, residual


def phase_scan(betas, n_y=20, n_z=11, y_range=(0.05, 2.0), z_range=(-2.0, 2.0)):
    """Residual scan over shooting initial conditions; returns per-beta
    minimum residual norms and the number of completed shots."""
    ys = np.concatenate([
        -np.linspace(y_range[0], y_range[1], n_y // 2),
        np.linspace(y_range[0], y_range[1], n_y - n_y // 2),
    ])
    zs = np.linspace(z_range[0], z_range[1], n_z)
    results = {}
    for beta in betas:
        best = np.inf
        completed = 0
        total = 0
        for y0 in ys:
            for z0 in zs:
                total += 1
                _, res = phase_shoot(beta, y0, z0)
                if res is not None:
                    completed += 1
                    best = min(best, float(np.hypot(*res)))
        results[beta] = {"min_residual": best, "completed": completed,
                         "total": total}
    return results
