"""Command-line front end: experiment presets, config files, CSV/manifest
emission.

Exit codes: 0 pass, 1 embedded check failed, 2 usage error, 3 numerical
failure.
"""

import configparser
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click
import numpy as np
from click.core import ParameterSource

from fwlab import diagnostics as diag
from fwlab import waves
from fwlab.godunov import GodunovConfig, NumericalFailure, run
from fwlab.grid import initial_data, make_grid
from fwlab.viscous import ViscousConfig, run_viscous

# frozen entropy-tolerance constant, calibrated once on Burgers-only runs
# against exact solutions (measured ~0.035, kept with a 3x margin)
C_ENT = 0.1

DATA_DEFAULT_Q = {"data1": 2.0, "data2": 0.5}


# ---------------------------------------------------------------------------
# config resolution

class SchemaError(click.ClickException):
    exit_code = 2


def validate_config(path, schema):
    """Parse an INI-style config (key = value lines under section headers);
    unknown keys are rejected, values are cast per the scenario schema."""
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except FileNotFoundError:
        raise SchemaError(f"config file not found: {path}")
    except configparser.Error as exc:
        raise SchemaError(f"config parse error: {exc}")
    out = {}
    for section in parser.sections():
        for key, raw in parser.items(section):
            norm = key.replace("-", "_")
            if norm not in schema:
                raise SchemaError(f"unknown config key {key!r}")
            caster = schema[norm][0]
            try:
                out[norm] = caster(raw)
            except ValueError:
                raise SchemaError(
                    f"config key {key!r}: cannot interpret value {raw!r}"
                )
    return out


def resolve_params(ctx, schema):
    """defaults < config file < explicit command-line flags."""
    vals = {k: default for k, (_, default) in schema.items()}
    config = ctx.params.get("config")
    if config:
        vals.update(validate_config(config, schema))
    for key in schema:
        if ctx.get_parameter_source(key) == ParameterSource.COMMANDLINE:
            vals[key] = ctx.params[key]
    return vals


def _bool(raw):
    if isinstance(raw, bool):
        return raw
    low = str(raw).strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(raw)


def _floats(raw):
    if isinstance(raw, (list, tuple)):
        return [float(v) for v in raw]
    return [float(v) for v in str(raw).split(",") if v.strip()]


# ---------------------------------------------------------------------------
# output helpers

def fmt(v):
    if isinstance(v, float):
        return f"{v:.10g}"
    if isinstance(v, (list, tuple)):
        return ",".join(fmt(x) for x in v)
    return str(v)


def write_snapshot(path, field):
    lines = ["x,u"]
    x = field.grid.x
    for xi, ui in zip(x, field.values):
        lines.append(f"{xi:.10g},{ui:.10g}")
    path.write_text("\n".join(lines) + "\n")


def write_orbit(path, probe):
    lines = ["step,u_a,u_b"]
    for i, (a, b) in enumerate(probe):
        lines.append(f"{i},{a:.10g},{b:.10g}")
    path.write_text("\n".join(lines) + "\n")


def write_profile(path, profile):
    lines = ["x,u"]
    for xi, ui in zip(profile.grid.x, profile.U):
        lines.append(f"{xi:.10g},{ui:.10g}")
    path.write_text("\n".join(lines) + "\n")


class Manifest:
    """[params] / [diagnostics] / [shocks] / [checks] structured text."""

    def __init__(self):
        self.params = {}
        self.diagnostics = {}
        self.shocks = []
        self.checks = {}

    def check(self, name, passed, detail=""):
        self.checks[name] = (bool(passed), detail)

    @property
    def all_passed(self):
        return all(p for p, _ in self.checks.values())

    def write(self, path):
        lines = ["[params]"]
        for k in sorted(self.params):
            lines.append(f"{k} = {fmt(self.params[k])}")
        lines.append("")
        lines.append("[diagnostics]")
        for k in sorted(self.diagnostics):
            lines.append(f"{k} = {fmt(self.diagnostics[k])}")
        lines.append("")
        lines.append("[shocks]")
        for i, r in enumerate(self.shocks):
            speed = "nan" if r.speed_fit is None else f"{r.speed_fit:.10g}"
            lines.append(
                f"shock_{i} = t={r.t:.10g} pos={r.position:.10g} "
                f"u_minus={r.u_minus:.10g} u_plus={r.u_plus:.10g} "
                f"jump={r.jump:.10g} speed_fit={speed} offset={r.side_offset}"
            )
        lines.append("")
        lines.append("[checks]")
        for k in sorted(self.checks):
            passed, detail = self.checks[k]
            status = "pass" if passed else "FAIL"
            lines.append(f"{k} = {status}" + (f" ({detail})" if detail else ""))
        path.write_text("\n".join(lines) + "\n")


def add_series_summary(man, traj):
    d = traj.diagnostics
    man.diagnostics["steps"] = int(d["t"].size - 1)
    for key in ("max", "min", "l1", "l2", "mass"):
        man.diagnostics[f"{key}_initial"] = float(d[key][0])
        man.diagnostics[f"{key}_final"] = float(d[key][-1])
    man.diagnostics["mass_drift"] = float(np.ptp(d["mass"]))


def finish(man, out_dir, extra_status=0):
    man.write(out_dir / "manifest.txt")
    status = 0 if man.all_passed else 1
    sys.exit(max(status, extra_status))


def _outdir(path):
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _load_data(params, grid):
    name = params["data"]
    if name in ("data1", "data2"):
        u0 = initial_data(name, grid)
    elif name == "cosine":
        u0 = initial_data("cosine", grid, q=params.get("amplitude", 1.0))
    else:
        raise SchemaError(f"unknown data preset {name!r} (key 'data')")
    q = params.get("q")
    if q is None or q <= 0:
        q = DATA_DEFAULT_Q.get(name)
    if q is None:
        q = max(float(np.max(np.abs(u0.values))), 1e-12)
    return u0, float(q)


def _output_times(t_end, cadence):
    # clamp against float overshoot from the arange endpoint
    times = sorted({min(float(t), t_end)
                    for t in np.arange(0.0, t_end + 1e-12, cadence)})
    if not times or times[-1] < t_end - 1e-9:
        times.append(t_end)
    return times


# ---------------------------------------------------------------------------
# CLI


@click.group()
def main():
    """Fornberg-Whitham equation simulation laboratory."""


def common_options(fn):
    fn = click.option("--config", type=click.Path(), default=None,
                      help="INI config file; flags override it.")(fn)
    fn = click.option("--out", "out_dir", type=click.Path(), default="runs/out",
                      help="output directory")(fn)
    return fn


SIMULATE_SCHEMA = {
    "data": (str, "data1"),
    "amplitude": (float, 1.0),
    "q": (float, 0.0),
    "n": (int, 1000),
    "t_end": (float, 0.65),
    "cadence": (float, 0.05),
    "cfl": (float, 0.4),
    "threshold": (float, 0.0),
    "burgers_only": (_bool, False),
}


@main.command()
@common_options
@click.option("--data", default="data1")
@click.option("--amplitude", type=float, default=1.0)
@click.option("--q", type=float, default=0.0, help="typical data size (0 = auto)")
@click.option("--n", type=int, default=1000)
@click.option("--t-end", type=float, default=0.65)
@click.option("--cadence", type=float, default=0.05)
@click.option("--cfl", type=float, default=0.4)
@click.option("--threshold", type=float, default=0.0,
              help="shock detection threshold (0 = 0.25*oscillation)")
@click.option("--burgers-only", is_flag=True, default=False)
@click.pass_context
def simulate(ctx, **_kw):
    """Godunov run with snapshots and shock tracking."""
    p = resolve_params(ctx, SIMULATE_SCHEMA)
    out = _outdir(ctx.params["out_dir"])
    grid = make_grid(p["n"])
    u0, q = _load_data(p, grid)
    cfg = GodunovConfig(
        grid=grid, q=q, t_end=p["t_end"],
        output_times=_output_times(p["t_end"], p["cadence"]),
        cfl_factor=p["cfl"], include_nonlocal=not p["burgers_only"],
    )
    try:
        traj = run(u0, cfg)
    except NumericalFailure as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(3)
    man = Manifest()
    man.params.update(p, q=q, scenario="simulate", tau=cfg.tau)
    for t_req, snap in zip(cfg.output_times, traj.snapshots):
        write_snapshot(out / f"snap_t{t_req:g}.csv", snap)
    add_series_summary(man, traj)
    thr = p["threshold"] or 0.25 * diag.oscillation(u0)
    tracks, merges = diag.track_shock(traj, thr)
    man.diagnostics["shock_tracks"] = len(tracks)
    man.diagnostics["shock_merges"] = merges
    for tr in tracks:
        man.shocks.extend(tr.records)
    man.check("mass_conserved", np.ptp(traj.diagnostics["mass"]) < 1e-10,
              f"drift={np.ptp(traj.diagnostics['mass']):.3g}")
    finish(man, out)


VISCOUS_SCHEMA = {
    "data": (str, "data1"),
    "amplitude": (float, 1.0),
    "q": (float, 0.0),
    "n": (int, 1000),
    "epsilon": (float, 1e-2),
    "t_end": (float, 0.5),
    "cadence": (float, 0.05),
    "tau": (float, 0.0),
}


@main.command()
@common_options
@click.option("--data", default="data1")
@click.option("--amplitude", type=float, default=1.0)
@click.option("--q", type=float, default=0.0)
@click.option("--n", type=int, default=1000)
@click.option("--epsilon", type=float, default=1e-2)
@click.option("--t-end", type=float, default=0.5)
@click.option("--cadence", type=float, default=0.05)
@click.option("--tau", type=float, default=0.0, help="time step (0 = auto)")
@click.pass_context
def viscous(ctx, **_kw):
    """Parabolic-regularization run with the energy ledger."""
    p = resolve_params(ctx, VISCOUS_SCHEMA)
    out = _outdir(ctx.params["out_dir"])
    grid = make_grid(p["n"])
    u0, _ = _load_data(p, grid)
    cfg = ViscousConfig(
        grid=grid, epsilon=p["epsilon"], t_end=p["t_end"],
        tau=p["tau"] or None,
        output_times=_output_times(p["t_end"], p["cadence"]),
    )
    try:
        traj, ledger = run_viscous(u0, cfg)
    except NumericalFailure as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(3)
    man = Manifest()
    man.params.update(p, scenario="viscous")
    for t_req, snap in zip(cfg.output_times, traj.snapshots):
        write_snapshot(out / f"snap_t{t_req:g}.csv", snap)
    add_series_summary(man, traj)
    increase = float(np.max(np.diff(ledger.l2_half), initial=0.0))
    rel = increase / ledger.l2_half[0]
    man.diagnostics["l2_half_max_step_increase_rel"] = rel
    man.diagnostics["max_energy_residual"] = float(np.max(ledger.residual))
    man.check("l2_nonincreasing", rel <= 1e-8, f"rel_increase={rel:.3g}")
    finish(man, out)


WAVE_BRANCH_SCHEMA = {
    "n": (int, 1000),
    "c_start": (float, 0.0250),
    "c_stop": (float, 0.0269),
    "steps": (int, 20),
    "find_endpoint": (_bool, True),
}


@main.command("wave-branch")
@common_options
@click.option("--n", type=int, default=1000)
@click.option("--c-start", type=float, default=0.0250)
@click.option("--c-stop", type=float, default=0.0269)
@click.option("--steps", type=int, default=20)
@click.option("--find-endpoint/--no-find-endpoint", default=True)
@click.pass_context
def wave_branch(ctx, **_kw):
    """Traveling-wave continuation; writes one profile CSV per speed."""
    p = resolve_params(ctx, WAVE_BRANCH_SCHEMA)
    out = _outdir(ctx.params["out_dir"])
    grid = make_grid(p["n"])
    man = Manifest()
    man.params.update(p, scenario="wave-branch")
    try:
        profiles = waves.continue_branch(p["c_start"], p["c_stop"], p["steps"], grid)
    except (waves.NewtonError, waves.TrivialBranchError) as exc:
        click.echo(f"continuation failed: {exc}", err=True)
        sys.exit(3)
    for prof in profiles:
        write_profile(out / f"wave_c{prof.c:.6f}.csv", prof)
    man.diagnostics["n_profiles"] = len(profiles)
    man.diagnostics["max_residual"] = max(pr.residual for pr in profiles)
    man.diagnostics["min_discriminant"] = min(
        pr.discriminant_min for pr in profiles
    )
    if p["find_endpoint"]:
        c_end, _ = waves.find_upper_endpoint(grid)
        man.diagnostics["upper_endpoint"] = c_end
        man.check("endpoint_in_range", 0.0267 <= c_end <= 0.0271,
                  f"c={c_end:.5f}")
    man.check("residuals_converged",
              all(pr.residual < 1e-12 for pr in profiles))
    finish(man, out)


WAVE_EVOLVE_SCHEMA = {
    "n": (int, 1000),
    "c": (float, 0.0255),
    "t_end": (float, 30.0),
    "cadence": (float, 1.0),
    "perturb": (str, "none"),
    "delta_pct": (float, 5.0),
}


def _wave_evolve_impl(ctx, schema):
    p = resolve_params(ctx, schema)
    out = _outdir(ctx.params["out_dir"])
    grid = make_grid(p["n"])
    man = Manifest()
    try:
        prof = waves.continue_branch(0.0250, p["c"], 5, grid)[-1]
        perturbation = None
        if p["perturb"] != "none":
            if p["perturb"] not in waves.PERTURBATIONS:
                raise SchemaError(
                    f"unknown perturbation {p['perturb']!r} (key 'perturb')"
                )
            delta = waves.default_delta(prof, p["delta_pct"])
            perturbation = (delta, p["perturb"])
            man.params["delta"] = delta
        traj = waves.evolve_wave_as_initial_data(
            prof, p["t_end"], perturbation=perturbation,
            output_times=_output_times(p["t_end"], p["cadence"]),
        )
    except NumericalFailure as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(3)
    except (waves.NewtonError, waves.TrivialBranchError) as exc:
        click.echo(f"wave solve failed: {exc}", err=True)
        sys.exit(3)
    man.params.update(p, scenario="wave-evolve")
    for t_req, snap in zip(_output_times(p["t_end"], p["cadence"]),
                           traj.snapshots):
        write_snapshot(out / f"snap_t{t_req:g}.csv", snap)
    write_orbit(out / "orbit.csv", traj.probe)
    write_profile(out / "wave_profile.csv", prof)
    add_series_summary(man, traj)
    s = traj.snapshots[-1]
    ref = waves.translate_profile(prof, prof.c * s.time)
    l1 = float(np.abs(s.values - ref).sum() * grid.h)
    l1u = float(np.abs(prof.U).sum() * grid.h)
    man.diagnostics["translate_l1_error_rel"] = l1 / l1u
    if p["perturb"] == "none":
        man.check("travels_as_translate", l1 <= 0.05 * l1u,
                  f"rel_err={l1 / l1u:.3g}")
    finish(man, out)


@main.command("wave-evolve")
@common_options
@click.option("--n", type=int, default=1000)
@click.option("--c", type=float, default=0.0255)
@click.option("--t-end", type=float, default=30.0)
@click.option("--cadence", type=float, default=1.0)
@click.option("--perturb", default="none",
              type=click.Choice(["none", *waves.PERTURBATIONS]))
@click.option("--delta-pct", type=float, default=5.0)
@click.pass_context
def wave_evolve(ctx, **_kw):
    """Evolve a traveling wave as initial data; orbit probe to orbit.csv."""
    _wave_evolve_impl(ctx, WAVE_EVOLVE_SCHEMA)


PERTURB_SCHEMA = dict(WAVE_EVOLVE_SCHEMA)
PERTURB_SCHEMA["perturb"] = (str, "asym")
PERTURB_SCHEMA["t_end"] = (float, 300.0)


@main.command()
@common_options
@click.option("--n", type=int, default=1000)
@click.option("--c", type=float, default=0.0255)
@click.option("--t-end", type=float, default=300.0)
@click.option("--cadence", type=float, default=50.0)
@click.option("--perturb", default="asym",
              type=click.Choice(["none", *waves.PERTURBATIONS]))
@click.option("--delta-pct", type=float, default=5.0)
@click.pass_context
def perturb(ctx, **_kw):
    """Perturbed traveling-wave stability run (long horizon)."""
    _wave_evolve_impl(ctx, PERTURB_SCHEMA)


THRESHOLD_SCHEMA = {
    "amplitudes": (_floats, [0.005, 0.0075, 0.01, 0.0125, 0.015, 0.02]),
    "t_max": (float, 50.0),
    "n": (int, 1000),
    "jobs": (int, 1),
}


def _threshold_one(args):
    q, n, t_max = args
    grid = make_grid(n)
    u0 = initial_data("cosine", grid, q=q)
    cfg = GodunovConfig(
        grid=grid, q=max(q, 1e-12), t_end=t_max,
        output_times=_output_times(t_max, min(1.0, t_max / 10)),
    )
    traj = run(u0, cfg)
    thr = 0.25 * diag.oscillation(u0)
    for snap in traj.snapshots:
        if diag.detect_shocks(snap, thr):
            return q, True, snap.time
    return q, False, None


@main.command("threshold-scan")
@common_options
@click.option("--amplitudes", default="0.005,0.0075,0.01,0.0125,0.015,0.02")
@click.option("--t-max", type=float, default=50.0)
@click.option("--n", type=int, default=1000)
@click.option("--jobs", type=int, default=1)
@click.pass_context
def threshold_scan(ctx, **_kw):
    """Shock-formation scan over cosine amplitudes q."""
    p = resolve_params(ctx, THRESHOLD_SCHEMA)
    amplitudes = _floats(p["amplitudes"])
    out = _outdir(ctx.params["out_dir"])
    tasks = [(q, p["n"], p["t_max"]) for q in amplitudes]
    if p["jobs"] > 1:
        with ProcessPoolExecutor(max_workers=p["jobs"]) as pool:
            rows = list(pool.map(_threshold_one, tasks))
    else:
        rows = [_threshold_one(t) for t in tasks]
    lines = ["q,shock_detected,detection_time"]
    for q, found, t in rows:
        lines.append(f"{q:.10g},{int(found)},{'' if t is None else f'{t:.10g}'}")
    (out / "threshold_scan.csv").write_text("\n".join(lines) + "\n")
    man = Manifest()
    man.params.update(p, scenario="threshold-scan", amplitudes=amplitudes)
    for q, found, t in rows:
        key = f"shock_q{q:g}"
        man.diagnostics[key] = (
            f"detected at t={t:.6g}" if found
            else f"none up to t={p['t_max']:g} (no claim beyond)"
        )
    # the 0.01 < q < 0.015 band is reported, never asserted
    for q, found, _ in rows:
        if q >= 0.02:
            man.check(f"shock_forms_q{q:g}", found)
        elif q <= 0.005:
            man.check(f"no_shock_q{q:g}", not found)
    finish(man, out)


ENTROPY_SCHEMA = {
    "data": (str, "data1"),
    "amplitude": (float, 1.0),
    "q": (float, 0.0),
    "n": (int, 1000),
    "t_end": (float, 0.65),
    "n_lambdas": (int, 9),
    "n_bumps": (int, 12),
    "c_ent": (float, C_ENT),
    "time_reversed": (_bool, False),
}


@main.command("entropy-check")
@common_options
@click.option("--data", default="data1")
@click.option("--amplitude", type=float, default=1.0)
@click.option("--q", type=float, default=0.0)
@click.option("--n", type=int, default=1000)
@click.option("--t-end", type=float, default=0.65)
@click.option("--n-lambdas", type=int, default=9)
@click.option("--n-bumps", type=int, default=12)
@click.option("--c-ent", type=float, default=C_ENT)
@click.option("--time-reversed", is_flag=True, default=False,
              help="check the time-reversed trajectory (must fail)")
@click.pass_context
def entropy_check(ctx, **_kw):
    """Entropy-inequality residual over a dense trajectory."""
    p = resolve_params(ctx, ENTROPY_SCHEMA)
    out = _outdir(ctx.params["out_dir"])
    grid = make_grid(p["n"])
    u0, q = _load_data(p, grid)
    cfg = GodunovConfig(grid=grid, q=q, t_end=p["t_end"],
                        output_times=_output_times(p["t_end"], 0.002))
    try:
        traj = run(u0, cfg)
    except NumericalFailure as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(3)
    if p["time_reversed"]:
        traj = traj.reversed()
    umin = min(float(s.values.min()) for s in traj.snapshots)
    umax = max(float(s.values.max()) for s in traj.snapshots)
    lams = np.linspace(umin - 0.5, umax + 0.5, p["n_lambdas"])
    n_x = max(1, p["n_bumps"] // 3)
    tfs = diag.default_test_functions(p["t_end"], n_x=n_x, n_t=3)
    rep = diag.entropy_residual(traj, lams, tfs)
    tol = p["c_ent"] * (grid.h + cfg.tau)
    man = Manifest()
    man.params.update(p, scenario="entropy-check", q=q)
    man.diagnostics["min_integral"] = rep.min_integral
    man.diagnostics["tolerance"] = tol
    if p["time_reversed"]:
        man.check("entropy_violation_detected", rep.min_integral < -10.0 * tol,
                  f"min={rep.min_integral:.3g} vs -10*tol={-10 * tol:.3g}")
    else:
        man.check("entropy_admissible", rep.min_integral >= -tol,
                  f"min={rep.min_integral:.3g} tol={tol:.3g}")
    finish(man, out)


L1_SCHEMA = {
    "data": (str, "data1"),
    "amplitude": (float, 1.0),
    "q": (float, 0.0),
    "n": (int, 1000),
    "t_end": (float, 0.5),
    "slack": (float, 0.2),
}


@main.command("l1-check")
@common_options
@click.option("--data", default="data1")
@click.option("--amplitude", type=float, default=1.0)
@click.option("--q", type=float, default=0.0)
@click.option("--n", type=int, default=1000)
@click.option("--t-end", type=float, default=0.5)
@click.option("--slack", type=float, default=0.2)
@click.pass_context
def l1_check(ctx, **_kw):
    """Gronwall-type L1 stability of perturbed pairs."""
    p = resolve_params(ctx, L1_SCHEMA)
    out = _outdir(ctx.params["out_dir"])
    grid = make_grid(p["n"])
    u0, q = _load_data(p, grid)
    cfg = GodunovConfig(grid=grid, q=q, t_end=p["t_end"],
                        output_times=_output_times(p["t_end"], 0.05))
    man = Manifest()
    man.params.update(p, scenario="l1-check", q=q)
    from fwlab.grid import StateField
    shapes = {
        "cos4pi": 0.01 * np.cos(4 * np.pi * grid.x),
        "sin2pi": 0.01 * np.sin(2 * np.pi * grid.x),
        "bump": 0.01 * np.where(grid.x < 0.5, 1.0 - np.cos(4 * np.pi * grid.x), 0.0),
    }
    try:
        for name, d in shapes.items():
            v0 = StateField(grid, u0.values + d)
            rep = diag.l1_stability(u0, v0, cfg, slack=p["slack"])
            man.diagnostics[f"ratio_{name}"] = rep.max_ratio
            man.check(f"l1_stable_{name}", rep.passed,
                      f"max_ratio={rep.max_ratio:.4f}")
    except NumericalFailure as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(3)
    finish(man, out)


PHASE_SCHEMA = {
    "betas": (_floats, [-1.0, -0.4, 0.0, 0.5, 1.0]),
    "n_y": (int, 20),
    "n_z": (int, 11),
    "jobs": (int, 1),
}


def _phase_one(args):
    beta, n_y, n_z = args
    return beta, waves.phase_scan([beta], n_y=n_y, n_z=n_z)[beta]


@main.command("phase-scan")
@common_options
@click.option("--betas", default="-1,-0.4,0,0.5,1")
@click.option("--n-y", type=int, default=20)
@click.option("--n-z", type=int, default=11)
@click.option("--jobs", type=int, default=1)
@click.pass_context
def phase_scan_cmd(ctx, **_kw):
    """Shooting-residual scan for single-shock traveling waves."""
    p = resolve_params(ctx, PHASE_SCHEMA)
    betas = _floats(p["betas"])
    out = _outdir(ctx.params["out_dir"])
    tasks = [(b, p["n_y"], p["n_z"]) for b in betas]
    if p["jobs"] > 1:
        with ProcessPoolExecutor(max_workers=p["jobs"]) as pool:
            rows = list(pool.map(_phase_one, tasks))
    else:
        rows = [_phase_one(t) for t in tasks]
    man = Manifest()
    man.params.update(p, scenario="phase-scan", betas=betas)
    overall = np.inf
    for beta, res in rows:
        man.diagnostics[f"min_residual_beta{beta:g}"] = res["min_residual"]
        man.diagnostics[f"completed_beta{beta:g}"] = (
            f"{res['completed']}/{res['total']}"
        )
        overall = min(overall, res["min_residual"])
    man.diagnostics["min_residual_overall"] = overall
    man.check("no_single_shock_wave", overall > 1e-2,
              f"min_residual={overall:.4g}")
    finish(man, out)


if __name__ == "__main__":
    main()
