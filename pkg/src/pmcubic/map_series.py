"""Counting series for rooted cubic planar maps with a distinguished matching.

Three independent routes lead to the same numbers and are cross-checked in
the tests: closed formulas, branches of the printed polynomial equations,
and the decomposition systems (loop / isthmus / series / parallel /
polyhedral) fed with the 3-connected series.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, fields

from . import constants
from .series import (
    DEFAULT_ORDER,
    BivariatePoly,
    TruncatedSeries,
    divide,
    compose,
    residual_valuation,
    solve_algebraic,
    solve_fixed_point,
)


class CountKind(enum.Enum):
    MATCHED_CUBIC = "matched_cubic"
    CUBIC = "cubic"
    MATCHED_BRIDGELESS = "matched_bridgeless"
    BRIDGELESS = "bridgeless"
    ROOTED_PLANAR_R = "rooted_planar_R"
    LOOPLESS_L = "loopless_L"


def double_factorial(n: int) -> int:
    """n (n-2) (n-4) ... down to 1 or 2; 1 for n <= 0."""
    return math.prod(range(n, 0, -2))


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def closed_form_count(kind: CountKind | str, n: int) -> int:
    """Exact value of one of the six closed formulas at size ``n >= 1``.

    Size is faces minus two for cubic maps (so ``2n`` vertices), vertices
    for 4-regular maps and edges for general planar maps.
    """
    kind = CountKind(kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    b = math.comb
    if kind is CountKind.MATCHED_CUBIC:
        return _exact(3 * 6**n * b(2 * n, n), (n + 2) * (n + 1))
    if kind is CountKind.CUBIC:
        return _exact(
            2 ** (2 * n + 1) * double_factorial(3 * n),
            math.factorial(n + 2) * double_factorial(n),
        )
    if kind is CountKind.MATCHED_BRIDGELESS:
        return _exact(3 * 2 ** (n - 1) * b(4 * n + 2, n), (2 * n + 1) * (n + 1))
    if kind is CountKind.BRIDGELESS:
        return _exact(2 ** (n + 1) * b(3 * n, n), (2 * n + 2) * (2 * n + 1))
    if kind is CountKind.ROOTED_PLANAR_R:
        return _exact(2 * 3**n * b(2 * n, n), (n + 2) * (n + 1))
    if kind is CountKind.LOOPLESS_L:
        return _exact(b(4 * n + 2, n), (2 * n + 1) * (n + 1))
    raise AssertionError(kind)


def matched_map_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """M(z) from its quadratic equation."""
    if order == 0:
        return TruncatedSeries.zero(0)
    return solve_algebraic(constants.MATCHED_MAP_POLY, constants.MATCHED_MAP_SEED, order)


def matched_3connected_series(
    order: int = DEFAULT_ORDER, poly: BivariatePoly = constants.T1_POLY
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``(T0, T1)``: 3-connected matched maps, root edge outside / inside the matching.

    Rerooting gives ``T0 = 2 T1``.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    t1 = solve_algebraic(poly, constants.T1_SEED, order)
    return 2 * t1, t1


@dataclass(frozen=True)
class MapSystem:
    M0: TruncatedSeries
    M1: TruncatedSeries
    D0: TruncatedSeries
    D1: TruncatedSeries
    I: TruncatedSeries
    L: TruncatedSeries
    S0: TruncatedSeries
    S1: TruncatedSeries
    P0: TruncatedSeries
    P1: TruncatedSeries
    H0: TruncatedSeries
    H1: TruncatedSeries

    @property
    def M(self) -> TruncatedSeries:
        return self.M0 + self.M1

    def as_dict(self) -> dict[str, TruncatedSeries]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _check_inputs(T0, T1, order):
    if T0.order < order or T1.order < order:
        raise ValueError(f"3-connected series must have order >= {order}")
    return T0.truncate(order), T1.truncate(order)


def _map_step(T0, T1, z, bridgeless):
    # unknowns: D0, D1, S0, S1, P0, P1, H0, H1.  D_i - S_i is replaced by the
    # sum of the other parts so every right-hand side has nonnegative
    # coefficients.
    def step(ys):
        D0, D1, S0, S1, P0, P1, H0, H1 = ys
        one0, one1 = 1 + D0, 1 + D1
        L = z.scale(0) if bridgeless else 2 * z * one0
        sub = z * one1 * one0 * one0
        return [
            L + S0 + P0 + H0,
            S1 + P1 + H1,
            D0 * (L + P0 + H0),
            D1 * (P1 + H1),
            2 * z * one0 * one1,
            z * one0 * one0,
            divide(compose(T0, sub), one0),
            divide(compose(T1, sub), one1),
        ]

    return step


def solve_matched_map_system(
    T0: TruncatedSeries, T1: TruncatedSeries, order: int = DEFAULT_ORDER
) -> MapSystem:
    """Solve the full map decomposition system for all twelve series."""
    T0, T1 = _check_inputs(T0, T1, order)
    z = TruncatedSeries.variable(order)
    D0, D1, S0, S1, P0, P1, H0, H1 = solve_fixed_point(_map_step(T0, T1, z, False), 8, order)
    L = 2 * z * (1 + D0)
    # I = L^2 / (4z), written so no order is lost to the division
    I = z * (1 + D0) * (1 + D0)
    return MapSystem(
        M0=D0, M1=D1 + I, D0=D0, D1=D1, I=I, L=L,
        S0=S0, S1=S1, P0=P0, P1=P1, H0=H0, H1=H1,
    )


@dataclass(frozen=True)
class BridgelessMapSystem:
    D0: TruncatedSeries
    D1: TruncatedSeries
    S0: TruncatedSeries
    S1: TruncatedSeries
    P0: TruncatedSeries
    P1: TruncatedSeries
    H0: TruncatedSeries
    H1: TruncatedSeries

    @property
    def B(self) -> TruncatedSeries:
        return self.D0 + self.D1


def solve_bridgeless_map_system(
    T0: TruncatedSeries, T1: TruncatedSeries, order: int = DEFAULT_ORDER
) -> BridgelessMapSystem:
    T0, T1 = _check_inputs(T0, T1, order)
    z = TruncatedSeries.variable(order)
    ys = solve_fixed_point(_map_step(T0, T1, z, True), 8, order)
    return BridgelessMapSystem(*ys)


def solve_matched_bridgeless_system(
    T0: TruncatedSeries, T1: TruncatedSeries, order: int = DEFAULT_ORDER
) -> TruncatedSeries:
    """B(z) = D0 + D1 of the system without loop and isthmus maps."""
    return solve_bridgeless_map_system(T0, T1, order).B


def tutte_triangulation_series(
    order: int = DEFAULT_ORDER,
) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """``(U, Theta, M3)`` with ``z = U (1 - U)^3``, ``Theta = U (1 - 2U)``, ``M3 = Theta - z``.

    ``Theta`` counts simple triangulations by vertices minus two and ``M3``
    the 3-connected cubic maps by faces minus two.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    z = TruncatedSeries.variable(order)

    def step(ys):
        (U,) = ys
        U2 = U * U
        return [z + 3 * U2 - 3 * U2 * U + U2 * U2]

    (U,) = solve_fixed_point(step, 1, order)
    theta = U * (1 - 2 * U)
    return U, theta, theta - z


def verify_minimal_polynomial(y: TruncatedSeries, p: BivariatePoly) -> str | int:
    """``"clean"`` if ``p(y, z)`` vanishes through ``z^order``, else the first bad index."""
    v = residual_valuation(y, p)
    return "clean" if v is None else v


def table1(order: int = DEFAULT_ORDER) -> list[tuple[int, int, int, int]]:
    """Rows ``(vertices, M, B, T)`` computed by the series pipeline, sizes 1..order."""
    M = matched_map_series(order)
    T0, T1 = matched_3connected_series(order)
    B = solve_matched_bridgeless_system(T0, T1, order)
    T = T0 + T1
    Mi, Bi, Ti = M.integers(), B.integers(), T.integers()
    return [(2 * n, Mi[n], Bi[n], Ti[n]) for n in range(1, order + 1)]


def count_rows(kinds, nmax: int) -> list[tuple[int, str, int]]:
    return [
        (n, CountKind(k).value, closed_form_count(k, n))
        for k in kinds
        for n in range(1, nmax + 1)
    ]


def counts_csv(kinds, nmax: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "kind", "value"])
    for row in count_rows(kinds, nmax):
        w.writerow(row)
    return buf.getvalue()


def counts_json(kinds, nmax: int) -> str:
    return json.dumps(
        [{"n": n, "kind": k, "value": v} for n, k, v in count_rows(kinds, nmax)]
    )
