"""Timing comparison of the pure-Python and compiled iteration kernels.

Runs the full default sweep grid for each benchmark polynomial through
both backends and reports wall time and speedup. The two backends are
bit-identical on every trajectory, so this is purely a speed check.

Usage: python3 benchmarks/bench_kernels.py [repeats]
"""

import sys
import time

from fracnewton import _kernels_py
from fracnewton.poly import FractionalDerivative, Polynomial
from fracnewton.sweep import alpha_grid

try:
    from fracnewton import _kernels
except ImportError:
    _kernels = None

BENCHES = (
    ("degree 10", [-36.92, 60.95, -77.63, -45.05, 85.24, 21.48, -56.83,
                   -40.64, 12.71, -1.82, 52.85], 5.0),
    ("degree 11", [-57.91, -45.02, -87.72, 12.72, -61.47, -18.59, 42.54,
                   -47.7, 9.97, 56.42, -58.41, -63.77], 6.0),
    ("degree 12", [-69.66, -91.51, 40.76, 14.24, 19.02, -75.32, 11.18,
                   30.84, -6.1, -13.82, -79.07, -44.9, 11.59], 7.0),
)


def sweep_once(kernel, p, derivs, x0):
    converged = 0
    for alpha, fd in derivs:
        _, _, _, code = kernel.run_newton(
            p._carr, fd._warr, alpha, x0, 0.0,
            1e-10, 1e-12, 200, 1e-14, 1, fd.r_lo, fd.r_hi)
        converged += code == 0
    return converged


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    grid = alpha_grid(0.7, 1.3, 0.0005)
    print(f"grid: {len(grid)} orders, best of {repeats}\n")
    header = f"{'polynomial':<12} {'pure':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, coeffs, x0 in BENCHES:
        p = Polynomial(coeffs)
        derivs = [(a, FractionalDerivative(p, a)) for a in grid]
        times = {}
        for label, kernel in (("pure", _kernels_py), ("compiled", _kernels)):
            if kernel is None:
                times[label] = None
                continue
            best = float("inf")
            for _ in range(repeats):
                t0 = time.perf_counter()
                sweep_once(kernel, p, derivs, x0)
                best = min(best, time.perf_counter() - t0)
            times[label] = best
        pure_s = f"{times['pure'] * 1e3:8.1f} ms"
        if times["compiled"] is None:
            print(f"{name:<12} {pure_s:>10} {'n/a':>10} {'n/a':>9}")
        else:
            comp_s = f"{times['compiled'] * 1e3:8.1f} ms"
            ratio = times["pure"] / times["compiled"]
            print(f"{name:<12} {pure_s:>10} {comp_s:>10} {ratio:>8.1f}x")
    if _kernels is None:
        print("\ncompiled kernels not built; install with a C toolchain "
              "to compare")


if __name__ == "__main__":
    main()
