"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]`` / ``[FAIL]`` line (visible without -s),
then asserts. Run just these with ``pytest tests/test_acceptance.py -v``.
"""
import math
import random
import time

import numpy as np
import pytest

from conftest import EPS_LEVELS, fuzz_case, random_pair
from polysimp import (
    Criterion,
    DistanceMeasure,
    brute_force_optimal,
    douglas_peucker,
    frechet_decision,
    frechet_value,
    hausdorff_directed_decision,
    hausdorff_undirected_value,
    imai_iri,
    optimal_frechet,
    optimal_hausdorff_qp,
)
from polysimp.instances import (
    gen_dpf_zigzag,
    gen_fig1_hausdorff_gap,
    gen_iif_gadget,
    gen_notsuf,
    gen_triangle_zigzag,
)
from polysimp.random_polylines import PROFILES, gen_random

PQ = DistanceMeasure.HAUSDORFF_PQ


@pytest.fixture
def report(capsys):
    def emit(num, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
        return ok
    return emit


def test_c01_fig1(report):
    t0 = time.perf_counter()
    inst = gen_fig1_hausdorff_gap()
    P, eps = inst.polyline, inst.eps
    iih = len(imai_iri(P, eps, Criterion.HAUSDORFF))
    dph = len(douglas_peucker(P, eps, Criterion.HAUSDORFF))
    opt = brute_force_optimal(P, eps, PQ).indices
    dt = time.perf_counter() - t0
    ok = iih == 7 and dph == 7 and opt == (0, 4, 5, 6) and dt < 1
    # indices are 0-based here; (0,4,5,6) is p1,p5,p6,p7
    assert report(1, ok, f"IIH={iih} DPH={dph} OPTH={[i + 1 for i in opt]} (1-based) in {dt:.2f}s")


def _triangle_row(c, m):
    t0 = time.perf_counter()
    inst = gen_triangle_zigzag(c, m)
    P, eps = inst.polyline, inst.eps
    iih = len(imai_iri(P, c * eps, Criterion.HAUSDORFF))
    opt = len(brute_force_optimal(P, eps, PQ))
    return iih, opt, time.perf_counter() - t0


@pytest.mark.xfail(strict=True, raises=ValueError,
                   reason="m=9 is unattainable with the A,B,C,B walk: a 3-vertex optimum needs m = 3 (mod 4)")
def test_c02_triangle_m9(report):
    for c in (2.0, 4.0):
        try:
            iih, opt, dt = _triangle_row(c, 9)
        except ValueError as exc:
            report(2, False, f"c={c:g} m=9: no instance, {exc}")
            raise
        assert report(2, iih == 9 and opt == 3 and dt < 10, f"c={c:g} m=9: IIH(c eps)={iih} OPTH={opt} in {dt:.2f}s")


@pytest.mark.parametrize("c", [2.0, 4.0])
def test_c02_triangle_nearest_attainable(report, c):
    iih, opt, dt = _triangle_row(c, 11)
    ok = iih == 11 and opt == 3 and dt < 10
    assert report("2 (m=11 stand-in)", ok, f"c={c:g}: IIH(c eps)={iih} OPTH={opt} in {dt:.2f}s")


def test_c03_dpf_zigzag(report):
    t0 = time.perf_counter()
    inst = gen_dpf_zigzag(2.0, 10)
    P, eps = inst.polyline, inst.eps
    dpf = len(douglas_peucker(P, 2 * eps, Criterion.FRECHET))
    optf = len(optimal_frechet(P, eps))
    brute = len(brute_force_optimal(P, eps, DistanceMeasure.FRECHET))
    dt = time.perf_counter() - t0
    ok = dpf == 10 and optf == 4 and brute == 4 and dt < 30
    assert report(3, ok, f"DPF(2 eps)={dpf} OPTF={optf} brute={brute} in {dt:.2f}s")


def test_c04_iif_gadget(report):
    t0 = time.perf_counter()
    inst = gen_iif_gadget(1)
    P, eps = inst.polyline, inst.eps
    iif = len(imai_iri(P, eps, Criterion.FRECHET))
    optf = len(optimal_frechet(P, eps))
    dt = time.perf_counter() - t0
    # exact (10, 8), no fallback claim anywhere in the instance
    ok = iif == 10 and optf == 8 and dt < 10
    assert report(4, ok, f"IIF={iif} OPTF={optf} in {dt:.2f}s (exact, no fallback)")


def test_c05_notsuf(report):
    t0 = time.perf_counter()
    inst = gen_notsuf()
    P, eps = inst.polyline, inst.eps
    opt = optimal_frechet(P, eps)
    greedy = optimal_frechet(P, eps, greedy=True)
    dt = time.perf_counter() - t0
    ok = len(opt) == 5 and opt.k_links == 4 and greedy.k_links > 4 and dt < 30
    assert report(5, ok, f"OPTF links={opt.k_links} greedy links={greedy.k_links} in {dt:.2f}s")


def test_c06_frechet_oracle(report):
    t0 = time.perf_counter()
    agree = certified = 0
    for seed in range(300):
        P, eps = fuzz_case(seed)
        opt = optimal_frechet(P, eps)
        agree += len(opt) == len(brute_force_optimal(P, eps, DistanceMeasure.FRECHET))
        certified += frechet_decision(P, opt.polyline(P), eps + 1e-9)
    dt = time.perf_counter() - t0
    ok = agree == 300 and certified == 300 and dt < 300
    assert report(6, ok, f"agree {agree}/300, certified {certified}/300 in {dt:.1f}s")


def test_c07_qp_oracle(report):
    t0 = time.perf_counter()
    agree = 0
    for seed in range(300):
        P, eps = fuzz_case(1000 + seed, 3, 10)
        agree += len(optimal_hausdorff_qp(P, eps)) == len(
            brute_force_optimal(P, eps, DistanceMeasure.HAUSDORFF_QP))
    dt = time.perf_counter() - t0
    assert report(7, agree == 300 and dt < 300, f"agree {agree}/300 in {dt:.1f}s")


def test_c08_metric_properties(report):
    levels = (0.02, 0.05, 0.1, 0.2, 0.4)
    bad = []
    for seed in range(200):
        A, B = random_pair(seed)
        if hausdorff_undirected_value(A, B) > frechet_value(A, B) + 1e-8:
            bad.append((seed, "H>F"))
        for dec in (frechet_decision, hausdorff_directed_decision):
            seq = [dec(A, B, e) for e in levels]
            if seq != sorted(seq):
                bad.append((seed, "monotone"))
        if any(frechet_decision(A, B, e) != frechet_decision(B, A, e) for e in levels):
            bad.append((seed, "symmetry"))
    assert report(8, not bad, f"200 pairs, {len(bad)} violations {bad[:3]}")


def test_c09_heuristic_ordering(report):
    bad = []
    for seed in range(500):
        rnd = random.Random(50_000 + seed)
        P = gen_random(rnd.randint(3, 30), 50_000 + seed, PROFILES[seed % 3])
        e1 = rnd.choice(EPS_LEVELS)
        e2 = e1 * rnd.uniform(1.1, 3.0)
        for crit in (Criterion.HAUSDORFF, Criterion.FRECHET):
            ii, dp = imai_iri(P, e1, crit), douglas_peucker(P, e1, crit)
            if len(ii) > len(dp):
                bad.append((seed, crit.value, "order"))
            if not set(douglas_peucker(P, e2, crit).indices) <= set(dp.indices):
                bad.append((seed, crit.value, "nested"))
            for res in (ii, dp):
                Q = res.polyline(P)
                ok = (hausdorff_directed_decision(P, Q, e1) if crit is Criterion.HAUSDORFF
                      else frechet_decision(P, Q, e1))
                if not ok:
                    bad.append((seed, res.algorithm, "certify"))
    assert report(9, not bad, f"500 instances, {len(bad)} violations {bad[:3]}")


def test_c10_iif_at_4eps_bound(report):
    bad = []
    for reps in range(1, 6):
        inst = gen_iif_gadget(reps)
        a = len(imai_iri(inst.polyline, 4 * inst.eps, Criterion.FRECHET))
        b = len(optimal_frechet(inst.polyline, inst.eps))
        if a > b:
            bad.append(("gadget", reps, a, b))
    for seed in range(100):
        P, eps = fuzz_case(70_000 + seed, 4, 12)
        a = len(imai_iri(P, 4 * eps, Criterion.FRECHET))
        b = len(optimal_frechet(P, eps))
        if a > b:
            bad.append((seed, a, b))
    assert report(10, not bad, f"gadget reps 1-5 + 100 random, {len(bad)} violations {bad[:3]}")


def test_c11_scaling(report):
    t0 = time.perf_counter()
    sizes = (20, 40, 80)
    times = []
    for n in sizes:
        runs = []
        for seed in range(3):
            P = gen_random(n, seed, "smooth")
            s = time.perf_counter()
            optimal_frechet(P, 0.05)
            runs.append(time.perf_counter() - s)
        times.append(float(np.median(runs)))
    slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
    dt = time.perf_counter() - t0
    ok = slope <= 5.5 and dt < 600
    detail = ", ".join(f"n={n}: {t * 1e3:.0f}ms" for n, t in zip(sizes, times))
    assert report(11, ok, f"{detail}; log-log slope {slope:.2f} (informational bound 5.5)")
