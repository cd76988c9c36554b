"""Shock detection/tracking, jump-height monotonicity, entropy-inequality
residuals, L1 stability ratios, and extrema/peak-count series."""

from dataclasses import dataclass, field

import numpy as np

from fwlab.godunov import run
from fwlab.helmholtz import HelmholtzSolver

SIDE_OFFSET = 3  # cells away from the interface for one-sided values


@dataclass
class ShockRecord:
    t: float
    position: float            # interface coordinate in [0, 1)
    u_minus: float
    u_plus: float
    jump: float
    side_offset: int = SIDE_OFFSET
    speed_fit: float = None

    @property
    def rh_speed(self):
        return 0.5 * (self.u_minus + self.u_plus)


def oscillation(u):
    return float(np.max(u.values) - np.min(u.values))


def detect_shocks(u, threshold=None):
    """Scan adjacent-cell drops u_k - u_{k+1}; a shock is a local maximum of
    the drop exceeding the threshold, localized to the steepest interface of
    each above-threshold cluster."""
    if threshold is None:
        threshold = 0.25 * oscillation(u)
    if threshold <= 0.0:
        raise ValueError("threshold must be > 0")
    w = u.values
    n = u.grid.n
    h = u.grid.h
    drop = w - np.roll(w, -1)          # drop at interface k+1/2
    above = drop > threshold
    if not np.any(above):
        return []
    records = []
    # group cyclically contiguous above-threshold interfaces
    idx = np.flatnonzero(above)
    breaks = np.flatnonzero(np.diff(idx) > 1)
    groups = np.split(idx, breaks + 1)
    if len(groups) > 1 and groups[0][0] == 0 and groups[-1][-1] == n - 1:
        groups[0] = np.concatenate([groups[-1], groups[0] + n])
        groups.pop()
    for grp in groups:
        k = int(grp[np.argmax(drop[grp % n])]) % n
        um = float(w[(k - SIDE_OFFSET) % n])
        up = float(w[(k + 1 + SIDE_OFFSET) % n])
        records.append(
            ShockRecord(
                t=u.time,
                position=((k + 0.5) * h) % 1.0,
                u_minus=um,
                u_plus=up,
                jump=um - up,
            )
        )
    records.sort(key=lambda r: r.position)
    return records


@dataclass
class ShockTrack:
    records: list = field(default_factory=list)
    open: bool = True

    @property
    def positions(self):
        return np.array([r.position for r in self.records])

    @property
    def times(self):
        return np.array([r.t for r in self.records])


def _circ_dist(a, b):
    d = abs(a - b) % 1.0
    return min(d, 1.0 - d)


def track_shock(trajectory, threshold=None, window=5):
    """Match shock records across snapshots by nearest (wraparound) position
    and attach least-squares speed fits over a trailing window.

    Returns (tracks, merge_events); tracks no longer matched are closed.
    """
    snaps = trajectory.snapshots
    if threshold is None:
        threshold = 0.25 * oscillation(snaps[0])
    tracks = []
    merge_events = 0
    prev_t = snaps[0].time
    for snap in snaps:
        recs = detect_shocks(snap, threshold)
        dt = max(snap.time - prev_t, 0.0)
        umax = float(np.max(np.abs(snap.values)))
        radius = max(10.0 * snap.grid.h, 2.0 * umax * dt)
        open_tracks = [tr for tr in tracks if tr.open]
        # greedy nearest matching, one record per track
        claims = {}
        for rec in recs:
            best, best_d = None, radius
            for tr in open_tracks:
                d = _circ_dist(rec.position, tr.records[-1].position)
                if d < best_d:
                    best, best_d = tr, d
            claims.setdefault(id(best) if best else None, []).append((rec, best))
        matched_tracks = set()
        matched_recs = []
        for key, pairs in claims.items():
            if key is None:
                for rec, _ in pairs:
                    tracks.append(ShockTrack(records=[rec]))
                continue
            # if several records land on one track, the strongest continues it
            pairs.sort(key=lambda p: -p[0].jump)
            rec, tr = pairs[0]
            tr.records.append(rec)
            matched_tracks.add(id(tr))
            matched_recs.append(rec)
            for rec, _ in pairs[1:]:
                tracks.append(ShockTrack(records=[rec]))
        for tr in open_tracks:
            if id(tr) not in matched_tracks:
                tr.open = False
                # closed because its shock was absorbed by a nearby survivor
                last = tr.records[-1].position
                if any(
                    _circ_dist(last, rec.position) < radius for rec in matched_recs
                ):
                    merge_events += 1
        prev_t = snap.time
    for tr in tracks:
        _fit_speeds(tr, window)
    return tracks, merge_events


def _fit_speeds(track, window):
    if len(track.records) < window:
        return
    pos = track.positions.copy()
    # unwrap mod-1 positions into a monotone-ish real sequence
    for i in range(1, pos.size):
        d = (pos[i] - pos[i - 1] + 0.5) % 1.0 - 0.5
        pos[i] = pos[i - 1] + d
    t = track.times
    for i in range(window - 1, pos.size):
        sl = slice(i - window + 1, i + 1)
        a, _ = np.polyfit(t[sl], pos[sl], 1)
        track.records[i].speed_fit = float(a)


@dataclass
class MonotonicityReport:
    fraction_decreasing: float
    n_pairs: int
    passed: bool


def jump_monotonicity(records, skip_fraction=0.1, pass_fraction=0.95):
    """Fraction of consecutive record pairs with decreasing jump height,
    excluding the formation transient (first 10% of the track)."""
    if len(records) < 10:
        raise ValueError("track too short for a monotonicity verdict")
    start = int(np.ceil(skip_fraction * len(records)))
    jumps = np.array([r.jump for r in records[start:]])
    dec = np.diff(jumps) < 0.0
    frac = float(np.mean(dec))
    return MonotonicityReport(frac, int(dec.size), frac >= pass_fraction)


# ---------------------------------------------------------------------------
# entropy inequality


@dataclass
class EntropyReport:
    lambdas: np.ndarray
    test_functions: list
    integrals: np.ndarray      # shape (len(lambdas), len(test_functions))
    min_integral: float


def _bump(s):
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    si = s[inside]
    out[inside] = np.exp(-1.0 / (1.0 - si * si))
    return out


def _bump_deriv(s):
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    si = s[inside]
    d = 1.0 - si * si
    out[inside] = np.exp(-1.0 / d) * (-2.0 * si / (d * d))
    return out


def default_test_functions(t_end, n_x=4, n_t=3, radius=None):
    """A deterministic grid of n_x * n_t bump centers inside (0, t_end) x T."""
    if radius is None:
        radius = min(0.15, 0.45 * t_end / (n_t + 1))
    xs = (np.arange(n_x) + 0.5) / n_x
    ts = np.linspace(radius * 1.1, t_end - radius * 1.1, n_t)
    return [(float(x0), float(t0), float(radius)) for t0 in ts for x0 in xs]


def entropy_residual(trajectory, lambdas, test_functions, solver=None):
    """Discretized Kruzhkov-type inequality over the trajectory.

    For each (lambda, phi) evaluates the space-time trapezoid quadrature of
        |u - l| phi_t + sgn(u - l) (u^2 - l^2)/2 phi_x - sgn(u - l) (K'*u) phi
    (the constant l drops out of the convolution since K' has zero mean);
    nonnegative up to O(h + tau) for an admissible solution.
    """
    snaps = trajectory.snapshots
    grid = snaps[0].grid
    if solver is None:
        solver = HelmholtzSolver(grid)
    times = np.array([s.time for s in snaps])
    U = np.stack([s.values for s in snaps])            # (m, n)
    Vc = np.stack([solver.apply_nonlocal(s).values for s in snaps])
    x = grid.x
    h = grid.h
    t_end = times[-1]

    for x0, t0, r in test_functions:
        if t0 - r <= 0.0 or t0 + r >= t_end:
            raise ValueError(
                f"test function at (x0={x0}, t0={t0}, r={r}) leaks outside (0, t_end)"
            )

    # trapezoid weights in time (snapshots may be unevenly spaced)
    wt = np.zeros_like(times)
    wt[1:] += 0.5 * np.diff(times)
    wt[:-1] += 0.5 * np.diff(times)

    lambdas = np.asarray(lambdas, dtype=np.float64)
    integrals = np.empty((lambdas.size, len(test_functions)))
    phis = []
    for x0, t0, r in test_functions:
        dx = (x[None, :] - x0 + 0.5) % 1.0 - 0.5
        dt = times[:, None] - t0
        bx, bt = _bump(dx / r), _bump(dt / r)
        phi = bx * bt
        phi_x = _bump_deriv(dx / r) / r * bt
        phi_t = bx * _bump_deriv(dt / r) / r
        phis.append((phi, phi_x, phi_t))

    for i, lam in enumerate(lambdas):
        A = np.abs(U - lam)
        S = np.sign(U - lam)
        Q = S * (U * U - lam * lam) * 0.5
        R = S * Vc
        for j, (phi, phi_x, phi_t) in enumerate(phis):
            cell = A * phi_t + Q * phi_x - R * phi
            integrals[i, j] = float(h * (wt @ cell.sum(axis=1)))
    return EntropyReport(
        lambdas=lambdas,
        test_functions=list(test_functions),
        integrals=integrals,
        min_integral=float(integrals.min()),
    )


# ---------------------------------------------------------------------------
# L1 stability


@dataclass
class StabilityReport:
    times: np.ndarray
    distances: np.ndarray
    bounds: np.ndarray
    max_ratio: float
    passed: bool


def l1_stability(u0, v0, cfg, slack=0.2):
    """Run both initial data through the Godunov solver and compare
    ||u(t) - v(t)||_L1 against e^{t/2} ||u0 - v0||_L1 (exponent 0 when the
    nonlocal term is off)."""
    if u0.grid.n != v0.grid.n:
        raise ValueError("fields live on different grids")
    h = u0.grid.h
    d0 = float(np.abs(u0.values - v0.values).sum() * h)
    if d0 == 0.0:
        raise ValueError("initial data coincide; stability ratio undefined")
    rate = 0.5 if cfg.include_nonlocal else 0.0
    tru = run(u0, cfg)
    trv = run(v0, cfg)
    times, dists, bounds = [], [], []
    for su, sv in zip(tru.snapshots, trv.snapshots):
        t = su.time
        times.append(t)
        dists.append(float(np.abs(su.values - sv.values).sum() * h))
        bounds.append(np.exp(rate * t) * d0)
    times = np.asarray(times)
    dists = np.asarray(dists)
    bounds = np.asarray(bounds)
    ratio = float(np.max(dists / bounds))
    return StabilityReport(times, dists, bounds, ratio, ratio <= 1.0 + slack)


# ---------------------------------------------------------------------------
# extrema and peak counts


def count_peaks(values, noise_floor=1e-8):
    """Strict local maxima on the circle, with plateau coalescing."""
    # compress runs of (near-)equal values
    comp = [values[0]]
    for v in values[1:]:
        if abs(v - comp[-1]) > noise_floor:
            comp.append(v)
    if len(comp) > 1 and abs(comp[0] - comp[-1]) <= noise_floor:
        comp.pop()
    m = len(comp)
    if m < 2:
        return 0
    comp = np.asarray(comp)
    prev = np.roll(comp, 1)
    nxt = np.roll(comp, -1)
    return int(np.sum((comp > prev) & (comp > nxt)))


def extrema_series(trajectory, noise_floor=1e-8):
    maxs = np.array([float(s.values.max()) for s in trajectory.snapshots])
    mins = np.array([float(s.values.min()) for s in trajectory.snapshots])
    peaks = np.array(
        [count_peaks(s.values, noise_floor) for s in trajectory.snapshots]
    )
    return maxs, mins, peaks
