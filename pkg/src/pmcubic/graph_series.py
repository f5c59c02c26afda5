"""Labeled cubic planar graphs with a distinguished perfect matching.

The network systems are solved in the exponential variable ``x`` (marking
vertices), with the matched 3-connected map series substituted at ``x^2``
times the network corrections.  ``C`` counts connected graphs, ``A``
bridgeless ones and ``G = exp(C)`` all of them.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    compose,
    divide,
    exp_series,
    integrate_pointed,
    solve_fixed_point,
)

GENERAL = "general"
BRIDGELESS = "bridgeless"

# How the polyhedral substitution argument is read.  "squared" uses
# x^2 (1 + D1)(1 + D0)^2 as in the map system; "printed" uses the literal
# x^2 (1 + D1)(1 + D0^2) of the graph systems.  Only "squared" reproduces
# the labeled counts.
SQUARED = "squared"
PRINTED = "printed"

HALF = Fraction(1, 2)


class TranscriptionAlarm(ArithmeticError):
    """A solved network series came out with a negative or odd-index coefficient."""


@dataclass(frozen=True)
class NetworkSystemResult:
    variant: str
    D0: TruncatedSeries
    D1: TruncatedSeries
    L: TruncatedSeries
    I: TruncatedSeries
    S0: TruncatedSeries
    S1: TruncatedSeries
    P0: TruncatedSeries
    P1: TruncatedSeries
    H0: TruncatedSeries
    H1: TruncatedSeries
    pointed: TruncatedSeries  # C-bullet (general) or A-bullet (bridgeless)

    def series(self) -> dict[str, TruncatedSeries]:
        names = ("D0", "D1", "L", "I", "S0", "S1", "P0", "P1", "H0", "H1", "pointed")
        return {k: getattr(self, k) for k in names}


def _network_step(T0, T1, x2, bridgeless, h_substitution):
    def step(ys):
        D0, D1, L, S0, S1, P0, P1, H0, H1 = ys
        one0, one1 = 1 + D0, 1 + D1
        if h_substitution == SQUARED:
            sub = x2 * one1 * one0 * one0
        else:
            sub = x2 * one1 * (1 + D0 * D0)
        rest0 = S0 + P0 + H0
        return [
            L + rest0,
            S1 + P1 + H1,
            # L = x^2/2 (D0 - L)
            L.scale(0) if bridgeless else (x2 * rest0).scale(HALF),
            D0 * (L + P0 + H0),
            D1 * (P1 + H1),
            x2 * (D0 + D1) + x2 * D0 * D1,
            x2 * D0 + (x2 * D0 * D0).scale(HALF),
            divide(compose(T0, sub), 2 * one0),
            divide(compose(T1, sub), 2 * one1),
        ]

    return step


def solve_network_system(
    T0: TruncatedSeries,
    T1: TruncatedSeries,
    order: int = DEFAULT_ORDER,
    variant: str = GENERAL,
    h_substitution: str = SQUARED,
) -> NetworkSystemResult:
    """Solve the network system and assemble the vertex-rooted series.

    ``variant`` is ``"general"`` (connected graphs, yields 3C-bullet) or
    ``"bridgeless"`` (yields 3A-bullet).  ``order`` counts powers of ``x``
    and should be even.
    """
    if variant not in (GENERAL, BRIDGELESS):
        raise ValueError(f"unknown variant {variant!r}")
    if h_substitution not in (SQUARED, PRINTED):
        raise ValueError(f"unknown substitution reading {h_substitution!r}")
    if order % 2:
        raise ValueError("order must be even")
    T0, T1 = T0.with_order(order), T1.with_order(order)
    x2 = TruncatedSeries.monomial(2, order)
    bridgeless = variant == BRIDGELESS
    ys = solve_fixed_point(
        _network_step(T0, T1, x2, bridgeless, h_substitution), 9, order,
        check_nonnegative=False,
    )
    D0, D1, L, S0, S1, P0, P1, H0, H1 = ys
    if bridgeless:
        I = TruncatedSeries.zero(order)
        pointed3 = D0 + D1 - 2 * x2 * D0 - x2 * D1
    else:
        # I = L^2 / x^2 = L (D0 - L) / 2, avoiding the order loss of dividing by x^2
        I = L * (D0 - L) / 2
        pointed3 = I + D0 + D1 - L - L * L - 2 * x2 * D0 - x2 * D1
    result = NetworkSystemResult(
        variant, D0, D1, L, I, S0, S1, P0, P1, H0, H1, pointed3 / 3
    )
    for name, s in result.series().items():
        for k, c in enumerate(s):
            if c < 0 or (k % 2 and c):
                raise TranscriptionAlarm(f"{name}[{k}] = {c}")
    return result


def connected_series(result: NetworkSystemResult) -> TruncatedSeries:
    """C (or A) from the vertex-rooted series."""
    return integrate_pointed(result.pointed)


def all_graphs_series(C: TruncatedSeries) -> TruncatedSeries:
    """G = exp(C): arbitrary graphs are sets of connected ones."""
    return exp_series(C)


def labeled(series: TruncatedSeries) -> list[int]:
    """``n! [x^n]`` for every n up to the order."""
    out = []
    for n, c in enumerate(series):
        v = c * math.factorial(n)
        if v.denominator != 1:
            raise ArithmeticError(f"n! [x^{n}] = {v} is not an integer")
        out.append(v.numerator)
    return out


@dataclass(frozen=True)
class LabeledSeries:
    G: TruncatedSeries
    C: TruncatedSeries
    A: TruncatedSeries


def labeled_series(
    order: int = DEFAULT_ORDER, h_substitution: str = SQUARED, t1_poly=None
) -> LabeledSeries:
    from .map_series import matched_3connected_series

    kwargs = {} if t1_poly is None else {"poly": t1_poly}
    T0, T1 = matched_3connected_series(order, **kwargs)
    C = connected_series(solve_network_system(T0, T1, order, GENERAL, h_substitution))
    A = connected_series(solve_network_system(T0, T1, order, BRIDGELESS, h_substitution))
    return LabeledSeries(all_graphs_series(C), C, A)


def labeled_counts_table(
    maxN: int = 20, order: int | None = None, h_substitution: str = SQUARED
) -> list[tuple[int, int, int, int]]:
    """Rows ``(n, G_n, C_n, A_n)`` for even ``n`` from 2 to ``maxN``."""
    if maxN % 2:
        raise ValueError("maxN must be even")
    if order is None:
        order = maxN
    if maxN > order:
        raise ValueError("maxN exceeds the series order")
    s = labeled_series(order, h_substitution)
    G, C, A = labeled(s.G), labeled(s.C), labeled(s.A)
    return [(n, G[n], C[n], A[n]) for n in range(2, maxN + 1, 2)]


def first_disagreement(order: int = 20) -> tuple[int, str, int, int] | None:
    """Compare both substitution readings; first ``(n, column, squared, printed)`` that differs."""
    a = labeled_counts_table(order, order, SQUARED)
    b = labeled_counts_table(order, order, PRINTED)
    for ra, rb in zip(a, b):
        for col, va, vb in zip("GCA", ra[1:], rb[1:]):
            if va != vb:
                return ra[0], col, va, vb
    return None


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "G", "C", "A"])
    w.writerows(rows)
    return buf.getvalue()


def table_json(rows) -> str:
    return json.dumps([{"n": n, "G": g, "C": c, "A": a} for n, g, c, a in rows])
