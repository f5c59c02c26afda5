"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the report lines.
"""

import math
import random
import time
from collections import Counter
from fractions import Fraction
from itertools import combinations

from pmcubic import constants
from pmcubic.asymptotics import constants_report, growth_checks, theta_partial_sums
from pmcubic.bijections import (
    canonical_matched,
    contract_matching,
    fiber,
    flip_edge,
    flip_set,
    normalize_and_recover,
    truncate_map,
)
from pmcubic.graph_series import PRINTED, SQUARED, first_disagreement, labeled_counts_table
from pmcubic.graphs import disconnected_gap, labeled_census_all
from pmcubic.ising import coloring_from_matching, matching_from_coloring, minimal_colorings
from pmcubic.map_series import (
    CountKind,
    closed_form_count,
    matched_3connected_series,
    matched_map_series,
    solve_matched_bridgeless_system,
    table1,
    tutte_triangulation_series,
    verify_minimal_polynomial,
)
from pmcubic.maps import (
    bridges,
    dual_triangulation,
    enumerate_rooted_cubic_maps,
    enumerate_rooted_maps,
    list_perfect_matchings,
    matched_census_all,
)
from pmcubic.verify import load_golden


def report(number, ok, detail):
    print(f"[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def test_criterion_01_table1_reproduction():
    t = time.perf_counter()
    rows = table1(30)
    dt = time.perf_counter() - t
    golden = load_golden()["table1"]["rows"]
    got = [list(r) for r in rows[:10]]
    values_ok = got == golden
    ok = report(1, values_ok and dt < 60,
                f"{sum(len(r) - 1 for r in golden)} values, exact match={values_ok}, order 30 in {dt:.2f}s (< 60s)")
    assert ok


def test_criterion_02_closed_formulas():
    order = 30
    M = matched_map_series(order).integers()
    B = solve_matched_bridgeless_system(*matched_3connected_series(order), order).integers()
    bad = [n for n in range(1, order + 1)
           if M[n] != closed_form_count(CountKind.MATCHED_CUBIC, n)
           or B[n] != closed_form_count(CountKind.MATCHED_BRIDGELESS, n)]
    assert report(2, not bad, f"M_n and B_n equal the closed formulas for n <= {order}; mismatches: {bad}")


def test_criterion_03_minimal_polynomial_residuals():
    order = 30
    T0, T1 = matched_3connected_series(order)
    B = solve_matched_bridgeless_system(T0, T1, order)
    res = (
        verify_minimal_polynomial(matched_map_series(order), constants.MATCHED_MAP_POLY),
        verify_minimal_polynomial(T1, constants.T1_POLY),
        verify_minimal_polynomial(B, constants.BRIDGELESS_MAP_POLY),
    )
    assert report(3, res == ("clean",) * 3, f"residuals through z^{order} (quadratic, sextic, quartic): {res}")


def test_criterion_04_map_oracle():
    expected = [(6, 3, 0), (54, 18, 3), (648, 156, 12), (9072, 1632, 69)]
    t = time.perf_counter()
    got = []
    for n in range(1, 5):
        c = matched_census_all(n)
        got.append((c["all"], c["bridgeless"], c["three_connected"]))
    dt = time.perf_counter() - t
    ok = got == expected and dt <= 600
    assert report(4, ok, f"census 2n=2..8 {got} in {dt:.1f}s (<= 600s)")


def test_criterion_05_ising_correspondence():
    failures = checked = 0
    for n in (1, 2, 3):
        for m in enumerate_rooted_cubic_maps(n):
            T = dual_triangulation(m)
            ms = list_perfect_matchings(m)
            cs = minimal_colorings(T)
            failures += len(ms) != len(cs)
            failures += sum(matching_from_coloring(T, coloring_from_matching(m, a)) != a for a in ms)
            failures += sum(coloring_from_matching(m, matching_from_coloring(T, c)) != c for c in cs)
            checked += len(ms)
    assert report(5, failures == 0, f"{checked} (map, matching) pairs with 2n <= 6, failures: {failures}")


def test_criterion_06_contraction_bijection():
    lines = []
    ok = True
    for n in (1, 2, 3):
        fibers = Counter()
        for m in enumerate_rooted_cubic_maps(n):
            for a in list_perfect_matchings(m):
                if m.root // 2 in a:
                    fibers[contract_matching(m, a)] += 1
        R = closed_form_count(CountKind.ROOTED_PLANAR_R, n)
        sizes = set(fibers.values())
        total = sum(fibers.values())
        ok &= sizes == {2 ** (n - 1)} and len(fibers) == R and R == (2, 9, 54)[n - 1]
        ok &= total == 2 ** (n - 1) * R == closed_form_count(CountKind.MATCHED_CUBIC, n) // 3
        lines.append(f"n={n}: {len(fibers)} images, fiber sizes {sorted(sizes)}, total {total}")
    assert report(6, ok, "; ".join(lines))


def test_criterion_07_flip_bijection():
    rng = random.Random(2024)
    failures = 0
    totals = []
    for n in (1, 2, 3):
        bases = [B for B in enumerate_rooted_maps(n) if not bridges(B)]
        union = set()
        for B in bases:
            M0, red = truncate_map(B)
            others = sorted(e for e in red if e != M0.root // 2)
            for code in range(2 ** len(others)):
                M = flip_set(M0, red, [e for i, e in enumerate(others) if (code >> i) & 1])
                for e in others:
                    failures += flip_edge(flip_edge(M, red, e), red, e).canonical() != M.canonical()
                for e, f in combinations(others, 2):
                    failures += (flip_edge(flip_edge(M, red, e), red, f).canonical()
                                 != flip_edge(flip_edge(M, red, f), red, e).canonical())
            imgs = fiber(B)
            failures += len(set(imgs)) != 2 ** (n - 1)
            failures += bool(union & set(imgs))
            union |= set(imgs)
            for Mi, ri in imgs:
                results = {normalize_and_recover(Mi, ri, random.Random(rng.random())) for _ in range(10)}
                failures += results != {B.canonical()}
        target = {
            canonical_matched(m, a)
            for m in enumerate_rooted_cubic_maps(n) if not bridges(m)
            for a in list_perfect_matchings(m) if m.root // 2 in a
        }
        failures += union != target
        L = len(bases)
        failures += L != (1, 3, 13)[n - 1]
        failures += len(union) * 3 != closed_form_count(CountKind.MATCHED_BRIDGELESS, n)
        totals.append(f"2^{n - 1}*{L}={len(union)}")
    assert report(7, failures == 0, f"fiber totals {', '.join(totals)}; failures: {failures}")


def test_criterion_08_table2_reproduction():
    t = time.perf_counter()
    rows = labeled_counts_table(20, 20, SQUARED)
    dt = time.perf_counter() - t
    golden = load_golden()["table2"]["rows"]
    got = [list(r) for r in rows[1:]]
    diverge = first_disagreement(20)
    printed_rows = labeled_counts_table(20, 20, PRINTED)
    ok = got == golden and dt < 60 and diverge is not None and printed_rows != rows
    assert report(8, ok, f"27 values exact={got == golden} in {dt:.2f}s; "
                         f"(1+D0^2) reading first diverges at {diverge}")


def test_criterion_09_graph_oracle():
    golden = {r[0]: r[1:] for r in load_golden()["table2"]["rows"]}
    t = time.perf_counter()
    got = {}
    for n in (4, 6, 8):
        c = labeled_census_all(n)
        got[n] = [c["all"], c["connected"], c["bridgeless"]]
    dt = time.perf_counter() - t
    gap = got[8][0] - got[8][1]
    ok = all(got[n] == golden[n] for n in got) and gap == disconnected_gap() == 315 and dt <= 900
    assert report(9, ok, f"census {got}, gap {gap}, {dt:.1f}s (<= 900s)")


def test_criterion_10_constants():
    t = time.perf_counter()
    balls = constants_report()
    dt = time.perf_counter() - t
    tol = Fraction(1, 10**5)
    errs = {k: float(abs(balls[k].mid - Fraction(constants.PRINTED[k])))
            for k in ("gamma", "delta", "sigma", "rho", "sigma_b", "rho_b")}
    ok = all(e < tol for e in errs.values())
    ok &= balls["alpha_b/sigma_b"].lo >= Fraction("1.119")
    ok &= balls["alpha/sigma"].lo >= Fraction("1.109")
    worst = max(errs, key=errs.get)
    assert report(10, ok, f"largest deviation {worst}: {errs[worst]:.1e} (< 1e-5); "
                          f"ratios {float(balls['alpha_b/sigma_b'].lo):.5f} >= 1.119, "
                          f"{float(balls['alpha/sigma'].lo):.5f} >= 1.109; {dt:.2f}s")


def test_criterion_11_growth():
    fits = growth_checks(500)
    expected = {"M": 24, "B": 512 / 27, "M/cubic": 2 * math.sqrt(3) / 3, "B/bridgeless": 1024 / 729}
    ok = True
    parts = []
    for name, (g, beta, _) in fits.items():
        ok &= abs(g / expected[name] - 1) < 0.01
        if name in ("M", "B"):
            ok &= abs(beta + 2.5) < 0.05
        parts.append(f"{name}: {g:.5f} (n^{beta:.3f})")
    assert report(11, ok, "; ".join(parts))


def test_criterion_12_theta():
    _, theta, _ = tutte_triangulation_series(5)
    coeffs = [int(c) for c in list(theta)[1:6]]
    sums = theta_partial_sums(200)
    mono = all(a <= b for a, b in zip(sums, sums[1:]))
    ok = coeffs == [1, 1, 3, 13, 68] and mono and abs(sums[-1] - 0.125) < 1e-3
    assert report(12, ok, f"coefficients {coeffs}; partial sum at order 200 = {sums[-1]:.8f}, "
                          f"monotone={mono}, |diff| < 1e-3")
