#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py [--n 1000] [--steps 2000]
"""

import argparse
import time

import numpy as np

import fwlab.kernels as kernels
from fwlab.kernels import _fallback


def bench(fn, repeats=5):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--steps", type=int, default=2000)
    args = ap.parse_args()
    n, steps = args.n, args.steps

    rng = np.random.default_rng(0)
    u = rng.standard_normal(n)
    v = rng.standard_normal(n)
    h = 1.0 / n
    tau = 0.2 * h / np.max(np.abs(u))
    out = np.empty(n)
    rhs = rng.standard_normal(n)

    backends = {"fallback": _fallback}
    if kernels.BACKEND == "compiled":
        backends["compiled"] = kernels
    else:
        print("compiled backend unavailable; timing fallback only")

    print(f"n={n}, {steps} repetitions per kernel; best of 5 runs\n")
    print(f"{'kernel':<24}{'backend':<12}{'time':>10}{'per call':>14}")
    times = {}
    for name, mod in backends.items():
        def run_godunov(mod=mod):
            for _ in range(steps):
                mod.godunov_step(u, v, tau, h, out)

        tri = mod.CyclicTridiagonal(1.0 / (h * h), n)

        def run_solve(tri=tri):
            for _ in range(steps):
                tri.solve(rhs, out)

        for kernel, fn in (("godunov_step", run_godunov),
                           ("cyclic_solve", run_solve)):
            t = bench(fn)
            times[(kernel, name)] = t
            print(f"{kernel:<24}{name:<12}{t:>9.4f}s{t / steps * 1e6:>12.2f}us")

    if "compiled" in backends:
        for kernel in ("godunov_step", "cyclic_solve"):
            ratio = times[(kernel, "fallback")] / times[(kernel, "compiled")]
            print(f"\n{kernel}: compiled is {ratio:.1f}x faster")


if __name__ == "__main__":
    main()
