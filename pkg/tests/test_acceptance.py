"""Acceptance gate: one test per shipping criterion.

Each test registers a PASS/FAIL verdict that conftest prints in a
summary block at the end of the run. Criteria are asserted at their
stated tolerances; a failing criterion fails its test, there is no
downgrading to warnings.
"""

import functools
import json
import math
import random
import subprocess
import sys
import time

from conftest import record_criterion

import fracnewton as fn
from fracnewton.cli import main as cli_main

from reference_data import (
    BENCH1,
    BENCH2,
    BENCH3,
    LANDINGS1,
    ROOTS1,
    ROOTS2,
    ROOTS3,
    SPOT1,
    SPOT2,
    SPOT3,
    START1,
    START2,
    START3,
)

BENCH_SET = {
    "bench1": (BENCH1, START1, ROOTS1),
    "bench2": (BENCH2, START2, ROOTS2),
    "bench3": (BENCH3, START3, ROOTS3),
}


@functools.lru_cache(maxsize=None)
def polynomial(name):
    return fn.Polynomial(BENCH_SET[name][0])


@functools.lru_cache(maxsize=None)
def sweep_report(name):
    _, start, _ = BENCH_SET[name]
    t0 = time.perf_counter()
    rep = fn.run_sweep(polynomial(name), fn.SweepConfig(x0=start))
    return rep, time.perf_counter() - t0


@functools.lru_cache(maxsize=None)
def oracle_result(name):
    return fn.durand_kerner(polynomial(name))


def matched_and_missing(name, tol=1e-3):
    rep, _ = sweep_report(name)
    found, missing = [], []
    for expect in BENCH_SET[name][2]:
        hit = any(abs(d.root.real - expect.real) <= tol
                  and abs(d.root.imag - expect.imag) <= tol
                  for d in rep.distinct_roots)
        (found if hit else missing).append(expect)
    return found, missing


def fmt_root(z):
    return f"{z.real:.6f}{z.imag:+.6f}i"


def test_criterion_1_classical_baseline():
    ok = True
    notes = []
    p = fn.Polynomial([-2.0, 0.0, 1.0])
    cfg = fn.SolverConfig(alpha=1.0, x0=1.5, tol_res=1e-12,
                          accelerate=False)
    rec, trace = fn.solve(p, cfg)
    if rec.termination is not fn.Termination.CONVERGED:
        ok, _ = False, notes.append("did not converge")
    if abs(rec.root - math.sqrt(2.0)) > 1e-12:
        ok, _ = False, notes.append(f"root {rec.root}")
    if rec.residual_norm > 1e-12:
        ok, _ = False, notes.append(f"residual {rec.residual_norm:.2e}")
    if rec.iterations > 6:
        ok, _ = False, notes.append(f"{rec.iterations} iterations")
    try:
        q = fn.estimate_order(trace, rec.root)
        if not 1.8 <= q <= 2.2:
            ok, _ = False, notes.append(f"order {q:.3f}")
        else:
            notes.append(f"order {q:.2f}")
    except fn.InsufficientData:
        ok, _ = False, notes.append("order not estimable")
    fn.solve(p, cfg)        # warm the caches before timing
    best = math.inf
    for _ in range(5):
        t0 = time.perf_counter()
        fn.solve(p, cfg)
        best = min(best, time.perf_counter() - t0)
    if best >= 1e-3:
        ok, _ = False, notes.append(f"runtime {best * 1e3:.2f} ms")
    else:
        notes.append(f"{rec.iterations} iters, {best * 1e6:.0f} us")
    record_criterion(1, ok, "; ".join(notes))
    assert ok, notes


def test_criterion_2_first_benchmark_full_coverage():
    ok = True
    notes = []
    found, missing = matched_and_missing("bench1")
    rep, elapsed = sweep_report("bench1")
    if missing:
        ok = False
        notes.append("missing " + ", ".join(fmt_root(z) for z in missing))
    else:
        notes.append(f"10/10 roots, {len(rep.records)} converged runs")
    bad = [d for d in rep.distinct_roots if d.best_residual > 1e-9]
    if bad:
        ok, _ = False, notes.append(f"{len(bad)} roots above residual bound")
    if elapsed >= 30.0:
        ok, _ = False, notes.append(f"sweep took {elapsed:.1f} s")
    record_criterion(2, ok, "; ".join(notes))
    assert ok, notes


def test_criterion_3_remaining_benchmarks_coverage():
    ok = True
    notes = []
    for name, minimum in (("bench2", 10), ("bench3", 10)):
        found, missing = matched_and_missing(name)
        rep, _ = sweep_report(name)
        total = len(BENCH_SET[name][2])
        notes.append(f"{name} {len(found)}/{total}")
        if missing:
            notes.append("not recovered: "
                         + ", ".join(fmt_root(z) for z in missing))
        if len(found) < minimum:
            ok = False
        if any(d.best_residual > 1e-9 for d in rep.distinct_roots):
            ok, _ = False, notes.append(f"{name} residual bound violated")
    record_criterion(3, ok, "; ".join(notes))
    assert ok, notes


def test_criterion_4_per_order_spot_checks():
    reproduced = 0
    rows = []
    total = 0
    for name, start, spots in (("bench1", START1, SPOT1),
                               ("bench2", START2, SPOT2),
                               ("bench3", START3, SPOT3)):
        p = polynomial(name)
        for alpha, re, im in spots:
            total += 1
            rec, _ = fn.solve(p, fn.SolverConfig(alpha=alpha, x0=start))
            good = (rec.termination is fn.Termination.CONVERGED
                    and rec.iterations <= 200
                    and abs(rec.root.real - re) <= 1e-3
                    and abs(rec.root.imag - im) <= 1e-3)
            if good:
                reproduced += 1
            else:
                rows.append(f"{name} a={alpha} -> {fmt_root(rec.root)} "
                            f"(recorded {fmt_root(complex(re, im))})")
    ok = reproduced == total
    detail = f"{reproduced} of {total} recorded landings reproduced"
    if rows:
        detail += "; the in-loop extrapolation schedule is trajectory-"
        detail += "sensitive and the recorded runs' schedule is unknown"
    record_criterion(4, ok, detail)
    assert ok, [detail] + rows


def test_criterion_5_oracle_equivalence():
    ok = True
    notes = []
    for name in ("bench1", "bench2", "bench3"):
        rep, _ = sweep_report(name)
        ora = oracle_result(name)
        worst = 0.0
        for d in rep.distinct_roots:
            worst = max(worst, min(abs(d.root - z) for z in ora.roots))
        if worst > 1e-6:
            ok, _ = False, notes.append(f"{name} root gap {worst:.2e}")
        coeffs = BENCH_SET[name][0]
        lead = coeffs[-1]
        monic = [c / lead for c in coeffs]
        rebuilt = [1.0 + 0j]
        for r in ora.roots:
            nxt = [0j] * (len(rebuilt) + 1)
            for i, c in enumerate(rebuilt):
                nxt[i] += -r * c
                nxt[i + 1] += c
            rebuilt = nxt
        gap = max(abs(a - b) for a, b in zip(monic, rebuilt))
        if gap > 1e-6:
            ok, _ = False, notes.append(f"{name} coeff gap {gap:.2e}")
    if ok:
        notes.append("all sweep roots within 1e-6 of oracle; "
                     "monic coefficients rebuilt within 1e-6")
    record_criterion(5, ok, "; ".join(notes))
    assert ok, notes


def test_criterion_6_derivative_properties():
    ok = True
    notes = []
    p = fn.Polynomial(BENCH1)
    dp = p.derivative()

    def horner(coeffs, z):
        acc = 0j
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    # classical recovery at the alpha = 1 anchor
    fd1 = fn.FractionalDerivative(p, 1.0)
    for z in (0.8 + 0j, -1.5 + 0.6j, 2.0 - 1.2j):
        ref = horner(dp.coeffs, z)
        if abs(fd1.eval(z) - ref) > 1e-10 * max(1.0, abs(ref)):
            ok, _ = False, notes.append(f"alpha=1 recovery at {z}")

    # linearity
    rng = random.Random(23)
    f = fn.Polynomial([rng.uniform(-3, 3) for _ in range(7)])
    g = fn.Polynomial([rng.uniform(-3, 3) for _ in range(6)] + [1.25])
    a, b = 1.75, -2.5
    combo = fn.Polynomial([a * cf + b * cg for cf, cg
                           in zip(f.coeffs, g.coeffs)])
    alpha, z = 0.7, 1.4 - 0.9j
    lhs = fn.frac_derivative_eval(combo, alpha, z)
    rhs = (a * fn.frac_derivative_eval(f, alpha, z)
           + b * fn.frac_derivative_eval(g, alpha, z))
    if abs(lhs - rhs) > 1e-10 * max(1.0, abs(rhs)):
        ok, _ = False, notes.append("linearity")

    # conjugate symmetry
    fd = fn.FractionalDerivative(p, 0.85)
    for z in (1.2 + 0.8j, -0.9 + 1.5j):
        if abs(fd.eval(z.conjugate()) - fd.eval(z).conjugate()) > 1e-12 * abs(fd.eval(z)):
            ok, _ = False, notes.append(f"conjugate symmetry at {z}")

    # real and positive along the positive axis for positive coefficients
    pos = fn.Polynomial([1.0, 1.0, 1.0, 1.0])
    fdp = fn.FractionalDerivative(pos, 0.6)
    for x in (0.2, 1.0, 2.5):
        v = fdp.eval(complex(x, 0.0))
        if v.imag != 0.0 or v.real <= 0.0:
            ok, _ = False, notes.append(f"positivity at x={x}")

    # closed forms for the half derivative
    half_x = fn.frac_derivative_eval(fn.Polynomial([0.0, 1.0]), 0.5, 4.0 + 0j)
    expect = 4.0 / math.sqrt(math.pi)
    if abs(half_x - expect) > 1e-12 * expect:
        ok, _ = False, notes.append("half derivative of x at 4")
    half_c = fn.frac_derivative_eval(fn.Polynomial([1.0]), 0.5, 1.0 + 0j)
    expect = 1.0 / math.sqrt(math.pi)
    if abs(half_c - expect) > 1e-12 * expect:
        ok, _ = False, notes.append("half derivative of 1 at 1")

    if ok:
        notes.append("recovery, linearity, symmetry, positivity, "
                     "closed forms all within bounds")
    record_criterion(6, ok, "; ".join(notes))
    assert ok, notes


def test_criterion_7_extrapolation_exactness():
    rng = random.Random(101)
    worst = 0.0
    for _ in range(1000):
        limit = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        c = complex(rng.uniform(0.5, 2.5), rng.uniform(-1.5, 1.5))
        r = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.4, 0.4))
        xs = [limit + c * r ** n for n in range(3)]
        got = fn.aitken(*xs)
        worst = max(worst, abs(got - limit) / max(1.0, abs(limit)))
    ok = worst <= 1e-11
    record_criterion(7, ok, f"worst relative error {worst:.2e} "
                            "over 1000 geometric sequences")
    assert ok, worst


def test_criterion_8_order_dichotomy():
    ok = True
    notes = []
    circle = fn.Polynomial([1.0, 0.0, 1.0])
    for alpha in (0.85, 0.9, 1.1):
        cfg = fn.SolverConfig(alpha=alpha, x0=1.0, tol_res=1e-12,
                              accelerate=False)
        rec, trace = fn.solve(circle, cfg)
        try:
            q = fn.estimate_order(trace, rec.root)
        except fn.InsufficientData:
            ok, _ = False, notes.append(f"a={alpha}: not estimable")
            continue
        notes.append(f"a={alpha}: q={q:.2f}")
        if not 0.7 <= q <= 1.4:
            ok = False
    sq = fn.Polynomial([-2.0, 0.0, 1.0])
    cfg = fn.SolverConfig(alpha=1.0, x0=1.5, tol_res=1e-12,
                          accelerate=False)
    rec, trace = fn.solve(sq, cfg)
    q = fn.estimate_order(trace, rec.root)
    notes.append(f"a=1: q={q:.2f}")
    if not 1.8 <= q <= 2.2:
        ok = False
    record_criterion(8, ok, "; ".join(notes))
    assert ok, notes


def test_criterion_9_determinism(capsys, tmp_path):
    ok = True
    notes = []
    coeffs1 = ",".join(str(c) for c in BENCH1)
    commands = [
        ["solve", "--coeffs", coeffs1, "--alpha", "0.9", "--x0", "5",
         "--trace"],
        ["solve", "--coeffs", coeffs1, "--alpha", "0.9", "--x0", "5",
         "--format", "json"],
        ["sweep", "--coeffs", coeffs1, "--x0", "5", "--alpha-min", "0.83",
         "--alpha-max", "0.86", "--alpha-step", "0.002"],
        ["dtable", "--coeffs", coeffs1],
        ["oracle", "--coeffs", coeffs1, "--format", "json"],
    ]
    for argv in commands:
        outs = []
        for _ in range(2):
            code = cli_main(argv)
            captured = capsys.readouterr()
            if code != 0:
                ok, _ = False, notes.append(f"{argv[0]} exited {code}")
            outs.append(captured.out)
        if outs[0] != outs[1]:
            ok, _ = False, notes.append(f"{argv[0]} output drifted")
        if not outs[0]:
            ok, _ = False, notes.append(f"{argv[0]} produced no output")
    sub = [sys.executable, "-m", "fracnewton", "sweep", "--coeffs", coeffs1,
           "--x0", "5", "--alpha-min", "0.9", "--alpha-max", "0.92",
           "--alpha-step", "0.005"]
    a = subprocess.run(sub, capture_output=True)
    b = subprocess.run(sub, capture_output=True)
    if a.returncode != 0 or a.stdout != b.stdout:
        ok, _ = False, notes.append("subprocess runs differ")
    if ok:
        notes.append("5 in-process command pairs and a subprocess pair "
                     "byte-identical")
    record_criterion(9, ok, "; ".join(notes))
    assert ok, notes
