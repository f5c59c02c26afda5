"""The reproduction checks behind ``pmcubic verify``.

Each check returns :class:`Check` records; the golden values come from the
checked-in ``data/golden.json`` and are never recomputed here.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from importlib import resources

PASS, FAIL, SKIP = "pass", "FAIL", "skipped"


@dataclass
class Check:
    name: str
    reference: str
    expected: object
    got: object
    status: str
    seconds: float = 0.0

    def as_dict(self) -> dict:
        d = asdict(self)
        for k in ("expected", "got"):
            if not isinstance(d[k], (int, float, str, type(None), list, dict)):
                d[k] = str(d[k])
        return d


def load_golden() -> dict:
    with resources.files("pmcubic").joinpath("data/golden.json").open() as fh:
        return json.load(fh)


def _check(name, reference, expected, got, ok=None):
    if ok is None:
        ok = expected == got
    return Check(name, reference, expected, got, PASS if ok else FAIL)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t = time.perf_counter()
        out = fn(*args, **kwargs)
        dt = time.perf_counter() - t
        for c in out:
            c.seconds = dt / max(len(out), 1)
        return out

    wrapper.__name__ = fn.__name__
    return wrapper


@_timed
def check_table1(order: int) -> list[Check]:
    from .map_series import table1

    golden = load_golden()["table1"]["rows"]
    have = {r[0]: list(r) for r in table1(min(order, 30))} if order >= 1 else {}
    out = []
    for row in golden:
        name = f"table1 {row[0]} vertices"
        if row[0] // 2 > order:
            out.append(Check(name, "cubic map table", row[1:], None, SKIP))
        else:
            out.append(_check(name, "cubic map table", row[1:], have[row[0]][1:]))
    return out


@_timed
def check_closed_forms(order: int) -> list[Check]:
    from .map_series import (
        CountKind,
        closed_form_count,
        matched_3connected_series,
        matched_map_series,
        solve_matched_bridgeless_system,
    )

    M = matched_map_series(order).integers()
    B = solve_matched_bridgeless_system(*matched_3connected_series(order), order).integers()
    badM = [n for n in range(1, order + 1) if M[n] != closed_form_count(CountKind.MATCHED_CUBIC, n)]
    badB = [n for n in range(1, order + 1) if B[n] != closed_form_count(CountKind.MATCHED_BRIDGELESS, n)]
    return [
        _check(f"closed form M_n, n<={order}", "matched cubic formula", [], badM),
        _check(f"closed form B_n, n<={order}", "matched bridgeless formula", [], badB),
    ]


@_timed
def check_residuals(order: int) -> list[Check]:
    from . import constants
    from .map_series import (
        matched_3connected_series,
        matched_map_series,
        solve_matched_bridgeless_system,
        verify_minimal_polynomial,
    )

    T0, T1 = matched_3connected_series(order)
    B = solve_matched_bridgeless_system(T0, T1, order)
    return [
        _check("residual quadratic (M)", "M equation", "clean",
               verify_minimal_polynomial(matched_map_series(order), constants.MATCHED_MAP_POLY)),
        _check("residual sextic (T1)", "T1 equation", "clean",
               verify_minimal_polynomial(T1, constants.T1_POLY)),
        _check("residual quartic (B)", "B equation", "clean",
               verify_minimal_polynomial(B, constants.BRIDGELESS_MAP_POLY)),
    ]


@_timed
def check_map_oracle(max_n: int, workers: int = 1) -> list[Check]:
    from .maps import MAX_CUBIC_SIZE, matched_census_all

    golden = load_golden()["table1"]["rows"]
    out = []
    for n in range(1, MAX_CUBIC_SIZE + 1):
        row = golden[n - 1]
        name = f"map oracle {2 * n} vertices"
        if n > max_n:
            out.append(Check(name, "cubic map table", row[1:], None, SKIP))
            continue
        c = matched_census_all(n, workers)
        out.append(_check(name, "cubic map table", row[1:],
                          [c["all"], c["bridgeless"], c["three_connected"]]))
    return out


@_timed
def check_ising(max_n: int) -> list[Check]:
    from .ising import coloring_from_matching, matching_from_coloring, minimal_colorings
    from .maps import dual_triangulation, enumerate_rooted_cubic_maps, list_perfect_matchings

    out = []
    for n in range(1, min(max_n, 3) + 1):
        failures = 0
        for m in enumerate_rooted_cubic_maps(n):
            T = dual_triangulation(m)
            ms = list_perfect_matchings(m)
            cs = minimal_colorings(T)
            if len(ms) != len(cs):
                failures += 1
            failures += sum(matching_from_coloring(T, coloring_from_matching(m, A)) != A for A in ms)
            failures += sum(coloring_from_matching(m, matching_from_coloring(T, c)) != c for c in cs)
        out.append(_check(f"ising correspondence n={n}", "Ising minimal slice", 0, failures))
    return out


@_timed
def check_bijection_a(max_n: int) -> list[Check]:
    from .bijections import contract_matching
    from .map_series import CountKind, closed_form_count
    from .maps import enumerate_rooted_cubic_maps, list_perfect_matchings

    out = []
    for n in range(1, min(max_n, 3) + 1):
        fibers = Counter()
        for m in enumerate_rooted_cubic_maps(n):
            for A in list_perfect_matchings(m):
                if m.root // 2 in A:
                    fibers[contract_matching(m, A)] += 1
        got = (len(fibers), sorted(set(fibers.values())), sum(fibers.values()))
        exp = (closed_form_count(CountKind.ROOTED_PLANAR_R, n), [2 ** (n - 1)],
               closed_form_count(CountKind.MATCHED_CUBIC, n) // 3)
        out.append(_check(f"contraction fibers n={n}", "4-regular bijection", list(exp), list(got)))
    return out


@_timed
def check_bijection_b(max_n: int, seed: int = 0) -> list[Check]:
    from .bijections import fiber, flip_edge, normalize_and_recover, truncate_map
    from .map_series import CountKind, closed_form_count
    from .maps import bridges, enumerate_rooted_maps

    rng = random.Random(seed)
    out = []
    for n in range(1, min(max_n, 3) + 1):
        bases = [B for B in enumerate_rooted_maps(n) if not bridges(B)]
        failures = 0
        seen = set()
        for B in bases:
            M, red = truncate_map(B)
            others = sorted(e for e in red if e != M.root // 2)
            base = M.canonical()
            for e in others:
                failures += flip_edge(flip_edge(M, red, e), red, e).canonical() != base
                for f in others:
                    failures += (flip_edge(flip_edge(M, red, e), red, f).canonical()
                                 != flip_edge(flip_edge(M, red, f), red, e).canonical())
            imgs = fiber(B)
            failures += len(set(imgs)) != 2 ** (n - 1)
            failures += bool(seen & set(imgs))
            seen |= set(imgs)
            for Mi, red_i in imgs:
                target = B.canonical()
                for _ in range(10):
                    r = random.Random(rng.random())
                    failures += normalize_and_recover(Mi, red_i, r) != target
        out.append(_check(f"flip bijection n={n} failures", "bridgeless bijection", 0, failures))
        out.append(_check(
            f"flip bijection n={n} totals", "bridgeless bijection",
            [closed_form_count(CountKind.LOOPLESS_L, n), closed_form_count(CountKind.MATCHED_BRIDGELESS, n) // 3],
            [len(bases), len(seen)],
        ))
    return out


@_timed
def check_table2(order: int, h_substitution: str = "squared") -> list[Check]:
    from .graph_series import SQUARED, first_disagreement, labeled_counts_table

    golden = load_golden()["table2"]["rows"]
    top = min(order - order % 2, 20)
    have = {r[0]: list(r) for r in labeled_counts_table(top, top, h_substitution)} if top >= 2 else {}
    out = []
    for row in golden:
        name = f"table2 n={row[0]} ({h_substitution})"
        if row[0] > top:
            out.append(Check(name, "cubic graph table", row[1:], None, SKIP))
        else:
            out.append(_check(name, "cubic graph table", row[1:], have[row[0]][1:]))
    if h_substitution != SQUARED:
        d = first_disagreement(max(top, 10))
        out.append(Check("first disagreement of the two readings", "substitution reading",
                         None, None if d is None else list(d), "info"))
    return out


@_timed
def check_graph_oracle(max_vertices: int, workers: int = 1) -> list[Check]:
    from .graphs import MAX_N, disconnected_gap, labeled_census_all

    golden = {r[0]: r[1:] for r in load_golden()["table2"]["rows"]}
    out = []
    census = {}
    for n in range(4, MAX_N + 1, 2):
        name = f"graph oracle n={n}"
        if n > max_vertices:
            out.append(Check(name, "cubic graph table", golden[n], None, SKIP))
            continue
        c = labeled_census_all(n, workers)
        census[n] = c
        out.append(_check(name, "cubic graph table", golden[n], [c["all"], c["connected"], c["bridgeless"]]))
    if 8 in census:
        gap = census[8]["all"] - census[8]["connected"]
        out.append(_check("disconnected gap n=8", "cubic graph table", disconnected_gap(census[4]["connected"]), gap))
    return out


@_timed
def check_constants() -> list[Check]:
    from .asymptotics import constants_report

    balls = constants_report()
    golden = load_golden()["constants"]
    out = []
    for k in ("sigma", "rho", "sigma_b", "rho_b", "gamma", "delta"):
        val = float(balls[k].mid)
        out.append(_check(k, "singularity constants", golden[k], round(val, 7),
                          abs(val - float(golden[k])) < 1e-5 and balls[k].rad < 1e-9))
    for k in ("alpha_b/sigma_b", "alpha/sigma"):
        out.append(_check(k, "unlabeled lower bound", f">= {golden[k]}", float(balls[k].lo),
                          balls[k].lo >= Fraction(golden[k])))
    return out


@_timed
def check_growth(nmax: int = 500) -> list[Check]:
    from .asymptotics import growth_checks

    out = []
    for name, (g, beta, exact) in growth_checks(nmax).items():
        out.append(_check(f"growth {name}", "exponential growth", exact, g, abs(g / exact - 1) < 0.01))
        if name in ("M", "B"):
            out.append(_check(f"exponent {name}", "n^(-5/2) law", -2.5, beta, abs(beta + 2.5) < 0.05))
    return out


@_timed
def check_theta(order: int = 200) -> list[Check]:
    from .asymptotics import theta_partial_sums
    from .map_series import tutte_triangulation_series

    _, theta, _ = tutte_triangulation_series(6)
    sums = theta_partial_sums(order)
    mono = all(a <= b for a, b in zip(sums, sums[1:]))
    return [
        _check("theta coefficients", "simple triangulations", [1, 1, 3, 13, 68], [int(c) for c in list(theta)[1:6]]),
        _check(f"theta(tau) partial sums, order {order}", "Theta(27/256) = 1/8", 0.125, sums[-1],
               mono and abs(sums[-1] - 0.125) < 1e-3),
    ]


def run_all(order: int = 30, max_n: int = 4, workers: int = 1, seed: int = 0,
            h_substitution: str = "squared") -> list[Check]:
    checks = []
    checks += check_table1(order)
    checks += check_closed_forms(order)
    checks += check_residuals(order)
    checks += check_map_oracle(max_n, workers)
    checks += check_ising(max_n)
    checks += check_bijection_a(max_n)
    checks += check_bijection_b(max_n, seed)
    checks += check_table2(order, h_substitution)
    checks += check_graph_oracle(2 * max_n, workers)
    checks += check_constants()
    checks += check_growth()
    checks += check_theta()
    return checks


def exit_status(checks) -> int:
    return 1 if any(c.status == FAIL for c in checks) else 0
