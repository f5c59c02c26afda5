"""Certified dominant singularities, growth constants and coefficient asymptotics.

Polynomials are integer coefficient sequences in ascending order.  Roots are
isolated exactly with Sturm sequences over :class:`fractions.Fraction` and
refined by bisection, so every reported :class:`RealBall` is a rigorous
enclosure.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import constants
from .map_series import CountKind, closed_form_count, tutte_triangulation_series

DEFAULT_RAD = Fraction(1, 10**12)


class RootDomainError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Exact polynomial arithmetic (ascending Fraction lists)
# ---------------------------------------------------------------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p: Sequence, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Sequence) -> list[Fraction]:
    return [Fraction(i * c) for i, c in enumerate(p)][1:]


def poly_rem(a: Sequence, b: Sequence) -> list[Fraction]:
    a = [Fraction(c) for c in _trim(a)]
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    while len(a) >= len(b):
        q = a[-1] / lead
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a = _trim(a)
    return a


def poly_gcd(a: Sequence, b: Sequence) -> list[Fraction]:
    a, b = _trim(map(Fraction, a)), _trim(map(Fraction, b))
    while b:
        a, b = b, poly_rem(a, b)
    return [c / a[-1] for c in a]


def sturm_sequence(p: Sequence) -> list[list[Fraction]]:
    seq = [_trim(map(Fraction, p))]
    seq.append(poly_derivative(seq[0]))
    while True:
        r = poly_rem(seq[-2], seq[-1])
        if not r:
            return seq
        seq.append([-c for c in r])


def _sign_changes(seq, x: Fraction) -> int:
    signs = [s for s in (poly_eval(q, x) for q in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(seq, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in ``(lo, hi]``."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def cauchy_bound(p: Sequence) -> Fraction:
    p = _trim(p)
    return 1 + max(abs(Fraction(c, 1) / p[-1]) for c in p[:-1])


# ---------------------------------------------------------------------------
# Balls
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RealBall:
    """The closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty ball")

    @classmethod
    def from_mid_rad(cls, mid, rad) -> "RealBall":
        mid, rad = Fraction(mid), Fraction(rad)
        return cls(mid - rad, mid + rad)

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def rad(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def __float__(self):
        return float(self.mid)

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def __truediv__(self, other: "RealBall") -> "RealBall":
        if other.lo <= 0 or self.lo < 0:
            raise ValueError("division implemented for positive balls only")
        return RealBall(self.lo / other.hi, self.hi / other.lo)

    def __lt__(self, other) -> bool:
        other = other if isinstance(other, RealBall) else RealBall(Fraction(other), Fraction(other))
        if self.hi < other.lo:
            return True
        if self.lo > other.hi:
            return False
        raise ValueError("balls overlap; comparison undecided")

    def __gt__(self, other) -> bool:
        other = other if isinstance(other, RealBall) else RealBall(Fraction(other), Fraction(other))
        return other < self

    def __repr__(self):
        return f"RealBall({float(self.mid):.12g} +/- {float(self.rad):.2g})"


def smallest_positive_root(p: Sequence[int], rad: Fraction = DEFAULT_RAD) -> RealBall:
    """Enclose the least positive real root of ``p`` to within ``rad``."""
    p = _trim(p)
    if len(p) < 2:
        raise RootDomainError("constant polynomial")
    seq = sturm_sequence(p)
    lo, hi = Fraction(0), cauchy_bound(p)
    if count_roots(seq, lo, hi) == 0:
        raise RootDomainError("no positive root")
    # invariant: no root in (0, lo], at least one in (lo, hi]
    while (hi - lo) / 2 > rad:
        mid = (lo + hi) / 2
        if count_roots(seq, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return RealBall(lo, hi)


def is_simple_root(p: Sequence[int], ball: RealBall) -> bool:
    """True if ``gcd(p, p')`` has no root in the ball, so the enclosed root is simple."""
    g = poly_gcd(p, poly_derivative(p))
    if len(g) == 1:
        return True
    return count_roots(sturm_sequence(g), ball.lo, ball.hi) == 0 and poly_eval(g, ball.lo) != 0


def brackets_sign_change(p: Sequence[int], ball: RealBall) -> bool:
    a, b = poly_eval(p, ball.lo), poly_eval(p, ball.hi)
    return a == 0 or b == 0 or (a > 0) != (b > 0)


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

POLYNOMIALS = {
    "sigma": constants.SIGMA_POLY,
    "rho": constants.RHO_POLY,
    "sigma_b": constants.SIGMA_B_POLY,
    "rho_b": constants.RHO_B_POLY,
    "alpha_b": constants.ALPHA_B_POLY,
}


def constants_report(rad: Fraction = DEFAULT_RAD) -> dict[str, RealBall]:
    """Named balls: the four singularities, the growth ratios and the unlabeled bounds."""
    balls = {name: smallest_positive_root(p, rad) for name, p in POLYNOMIALS.items()}
    balls["alpha"] = RealBall.from_mid_rad(constants.ALPHA_MID, constants.ALPHA_RAD)
    balls["delta"] = balls["rho"] / balls["sigma"]
    balls["gamma"] = balls["rho_b"] / balls["sigma_b"]
    balls["alpha/sigma"] = balls["alpha"] / balls["sigma"]
    balls["alpha_b/sigma_b"] = balls["alpha_b"] / balls["sigma_b"]
    return balls


def alpha_b_closed_form() -> float:
    return math.sqrt((3 * math.sqrt(3) - 5) / 2)


def report_json(balls: dict[str, RealBall]) -> str:
    return json.dumps(
        {
            k: {"mid": float(b.mid), "rad": float(b.rad), "paper_value": constants.PRINTED.get(k)}
            for k, b in balls.items()
        },
        indent=2,
    )


def report_text(balls: dict[str, RealBall]) -> str:
    lines = [f"{'name':16} {'value':>16} {'radius':>10} {'printed':>10}"]
    for k, b in balls.items():
        printed = constants.PRINTED.get(k)
        lines.append(
            f"{k:16} {float(b.mid):16.10f} {float(b.rad):10.1e} {'' if printed is None else printed:>10}"
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Coefficient asymptotics
# ---------------------------------------------------------------------------


def log_transfer_estimate(a3: float, rho: float, n: int) -> float:
    if a3 <= 0 or rho <= 0 or n < 1:
        raise ValueError("need a3 > 0, rho > 0, n >= 1")
    return math.log(3 * a3 / (2 * math.sqrt(math.pi))) - 2.5 * math.log(n) - n * math.log(rho)


def transfer_estimate(a3: float, rho: float, n: int) -> float:
    """``3 a3 / (2 sqrt(pi)) n^(-5/2) rho^(-n)``; raises OverflowError when too large for a float."""
    return math.exp(log_transfer_estimate(a3, rho, n))


def _log(x) -> float:
    x = Fraction(x)
    if x <= 0:
        raise RootDomainError("counts must be positive")
    return math.log(x.numerator) - math.log(x.denominator)


def growth_fit(counts: Sequence, start: int = 1, tail: float = 0.5) -> tuple[float, float]:
    """Least-squares fit ``log c_n ~ a + n log g + beta log n + e / n`` on the tail.

    ``counts[i]`` is the term of index ``start + i``; exact integers or
    fractions.  Returns ``(g, beta)``.
    """
    if len(counts) < 50:
        raise RootDomainError("need at least 50 terms")
    k0 = int(len(counts) * (1 - tail))
    ns = np.arange(start + k0, start + len(counts), dtype=float)
    ys = np.array([_log(c) for c in counts[k0:]])
    X = np.column_stack([np.ones_like(ns), ns, np.log(ns), 1 / ns])
    coef, *_ = np.linalg.lstsq(X, ys, rcond=None)
    return math.exp(coef[1]), float(coef[2])


def closed_form_sequence(kind, nmax: int) -> list[int]:
    return [closed_form_count(kind, n) for n in range(1, nmax + 1)]


def expectation_ratios(matched_kind, plain_kind, nmax: int) -> list[Fraction]:
    """Average number of perfect matchings: matched count over plain count."""
    return [
        Fraction(closed_form_count(matched_kind, n), closed_form_count(plain_kind, n))
        for n in range(1, nmax + 1)
    ]


def growth_checks(nmax: int = 500) -> dict[str, tuple[float, float, float]]:
    """``name -> (fitted growth, fitted exponent, exact growth)``."""
    M = closed_form_sequence(CountKind.MATCHED_CUBIC, nmax)
    B = closed_form_sequence(CountKind.MATCHED_BRIDGELESS, nmax)
    em = expectation_ratios(CountKind.MATCHED_CUBIC, CountKind.CUBIC, nmax)
    eb = expectation_ratios(CountKind.MATCHED_BRIDGELESS, CountKind.BRIDGELESS, nmax)
    out = {}
    for name, seq, exact in (
        ("M", M, 24.0),
        ("B", B, 512 / 27),
        ("M/cubic", em, 2 * math.sqrt(3) / 3),
        ("B/bridgeless", eb, 1024 / 729),
    ):
        g, beta = growth_fit(seq)
        out[name] = (g, beta, exact)
    return out


def theta_partial_sums(order: int = 200, at: Fraction = constants.TAU) -> list[float]:
    """Partial sums of the simple-triangulation series at ``at``."""
    _, theta, _ = tutte_triangulation_series(order)
    out, acc, p = [], Fraction(0), Fraction(1)
    for c in theta:
        acc += c * p
        p *= at
        out.append(float(acc))
    return out
