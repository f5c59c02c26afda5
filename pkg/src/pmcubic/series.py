"""Truncated formal power series over the rationals.

Everything here is exact: coefficients are :class:`fractions.Fraction` and no
floating point is ever involved.  Products are computed on integer numerators
over a common denominator, which keeps order-200 work fast enough.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

DEFAULT_ORDER = 30


class SeriesError(ValueError):
    """Base class for series-engine failures."""


class OrderMismatchError(SeriesError):
    pass


class SeriesDomainError(SeriesError):
    pass


class DivergenceError(SeriesError):
    pass


class BranchError(SeriesError):
    pass


class NeedsLongerSeedError(BranchError):
    pass


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


def _int_convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai or i >= n:
            continue
        lim = n - i
        for j, bj in enumerate(b[:lim]):
            if bj:
                out[i + j] += ai * bj
    return out


def _common(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class TruncatedSeries:
    """Power series ``c[0] + c[1] z + ... + c[N] z^N`` modulo ``z^(N+1)``.

    Instances are immutable.  Binary operations require equal orders and raise
    :class:`OrderMismatchError` otherwise.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [_as_fraction(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesError("order must be >= 0")
            c = (c + [Fraction(0)] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise SeriesError("a series needs at least one coefficient")
        self._c = tuple(c)

    # -- construction helpers ------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "TruncatedSeries":
        return cls([0] * k + [coeff], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(1, order)

    # -- basic protocol --------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k):
        return self._c[k]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self._c[:8])
        more = ", ..." if len(self._c) > 8 else ""
        return f"TruncatedSeries([{terms}{more}], order={self.order})"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    def integers(self) -> list[int]:
        """Coefficients as Python ints; raises if any is not integral."""
        out = []
        for c in self._c:
            if c.denominator != 1:
                raise SeriesError(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return out

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatchError("cannot raise the order of a truncated series")
        return TruncatedSeries(self._c[: order + 1])

    def with_order(self, order: int) -> "TruncatedSeries":
        """Pad with zeros or truncate.  Padding is only sound for polynomials."""
        return TruncatedSeries(self._c, order)

    def scale(self, k) -> "TruncatedSeries":
        k = _as_fraction(k)
        return TruncatedSeries([k * c for c in self._c])

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by z^k, keeping the order."""
        return TruncatedSeries([0] * k + list(self._c[: len(self._c) - k]), self.order)

    def evaluate(self, x) -> Fraction:
        """Exact value of the truncated polynomial at a rational point."""
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- arithmetic ------------------------------------------------------------
    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(f"order {self.order} != order {other.order}")

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries([a + b for a, b in zip(self._c, other._c)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries([a - b for a, b in zip(self._c, other._c)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = len(self._c)
        a, da = _common(self._c)
        b, db = _common(other._c)
        prod = _int_convolve(a, b, n)
        den = da * db
        return TruncatedSeries([Fraction(p, den) for p in prod])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / _as_fraction(other))
        return divide(self, other)

    # -- serialisation ---------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self._c],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TruncatedSeries":
        coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
        s = cls(coeffs)
        if s.order != data["order"]:
            raise SeriesError("declared order does not match coefficient count")
        return s

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "TruncatedSeries":
        return cls.from_json(json.loads(text))


Series = TruncatedSeries


def combine(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Apply ``op`` in {"add", "sub", "mul"} to two series of equal order."""
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(z))`` by Horner's rule; ``g`` must have zero constant term."""
    f._check(g)
    if g[0] != 0:
        raise SeriesDomainError("inner series must have zero constant term")
    # coefficients of f beyond order can't contribute, but g's valuation
    # tells us how many are actually needed
    v = g.valuation()
    if v is None:
        return TruncatedSeries([f[0]], f.order)
    top = min(f.order, f.order // v)
    acc = TruncatedSeries([f[top]], f.order)
    for k in range(top - 1, -1, -1):
        acc = acc * g
        acc = TruncatedSeries([acc[0] + f[k]] + list(acc.coeffs[1:]))
    return acc


def inverse(b: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    if b[0] == 0:
        raise SeriesDomainError("series with zero constant term is not invertible")
    n = len(b)
    inv0 = 1 / b[0]
    out = [inv0]
    for k in range(1, n):
        s = sum((b[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(-s * inv0)
    return TruncatedSeries(out)


def divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact quotient ``a / b``.

    When ``b`` has valuation ``k > 0`` both operands are first divided by
    ``z^k``; ``a`` must vanish below ``z^k``.  The result then has order
    ``a.order - k``.
    """
    a._check(b)
    k = b.valuation()
    if k is None:
        raise SeriesDomainError("division by the zero series")
    if k:
        if any(a[i] for i in range(k)):
            raise SeriesDomainError(f"numerator is not divisible by z^{k}")
        a = TruncatedSeries(a.coeffs[k:])
        b = TruncatedSeries(b.coeffs[k:])
    return a * inverse(b)


def exp_series(f: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with zero constant term.

    Uses the recurrence from ``E' = f' E`` so only one pass over the
    coefficients is needed.
    """
    if f[0] != 0:
        raise SeriesDomainError("exp needs a series with zero constant term")
    n = len(f)
    e = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for k in range(1, n):
        s = Fraction(0)
        for j in range(1, k + 1):
            if f[j]:
                s += j * f[j] * e[k - j]
        e[k] = s / k
    return TruncatedSeries(e)


def integrate_pointed(fbullet: TruncatedSeries) -> TruncatedSeries:
    """Undo the pointing operator ``f -> z f'``: divide coefficient n by n."""
    if fbullet[0] != 0:
        raise SeriesDomainError("a pointed series has zero constant term")
    return TruncatedSeries([Fraction(0)] + [c / k for k, c in enumerate(fbullet.coeffs) if k])


def point(f: TruncatedSeries) -> TruncatedSeries:
    """``z f'(z)``."""
    return TruncatedSeries([k * c for k, c in enumerate(f.coeffs)])


def solve_fixed_point(
    system: Callable[[list[TruncatedSeries]], Sequence[TruncatedSeries]],
    size: int,
    order: int = DEFAULT_ORDER,
    max_iterations: int | None = None,
    check_nonnegative: bool = True,
) -> list[TruncatedSeries]:
    """Iterate ``y <- F(y)`` from ``y = 0`` until two consecutive iterates agree.

    ``system`` receives the current tuple of ``size`` series (all of the given
    order) and returns the next one.  Convergence is only guaranteed when each
    right-hand side gains at least one order of ``z`` per step, which is what
    the nonnegative rewriting of the combinatorial systems provides.
    """
    if max_iterations is None:
        max_iterations = 4 * (order + 1)
    ys = [TruncatedSeries.zero(order) for _ in range(size)]
    for _ in range(max_iterations):
        nxt = list(system(ys))
        if len(nxt) != size:
            raise SeriesError(f"system returned {len(nxt)} series, expected {size}")
        for s in nxt:
            if s.order != order:
                raise OrderMismatchError("system changed the truncation order")
        if nxt == ys:
            break
        ys = nxt
    else:
        raise DivergenceError(
            f"no stabilisation after {max_iterations} iterations at order {order}"
        )
    if check_nonnegative:
        for i, s in enumerate(ys):
            for k, c in enumerate(s):
                if c < 0:
                    raise DivergenceError(
                        f"component {i} has negative coefficient {c} at index {k}"
                    )
    return ys


class BivariatePoly:
    """Integer polynomial ``sum c[i, j] y^i z^j`` stored sparsely."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def from_y_coeffs(cls, rows: Sequence[Sequence[int]]) -> "BivariatePoly":
        """Build from ``rows[i]`` = coefficients (in z, ascending) of ``y^i``."""
        return cls({(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row)})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def degree_y(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    def __eq__(self, other):
        return isinstance(other, BivariatePoly) and self._terms == other._terms

    def __repr__(self):
        return f"BivariatePoly({self._terms})"

    def coefficient_rows(self) -> list[list[int]]:
        d = self.degree_y()
        dz = max((j for _, j in self._terms), default=0)
        rows = [[0] * (dz + 1) for _ in range(d + 1)]
        for (i, j), c in self._terms.items():
            rows[i][j] = c
        return rows

    def derivative_y(self) -> "BivariatePoly":
        return BivariatePoly({(i - 1, j): i * c for (i, j), c in self._terms.items() if i})

    def evaluate(self, y: TruncatedSeries) -> TruncatedSeries:
        """``p(y(z), z)`` truncated at ``y``'s order (Horner in y)."""
        order = y.order
        rows = self.coefficient_rows()
        zpolys = [TruncatedSeries(row, order) for row in rows]
        acc = zpolys[-1]
        for zp in reversed(zpolys[:-1]):
            acc = acc * y + zp
        return acc


def solve_algebraic(
    p: BivariatePoly, seed: Sequence, order: int = DEFAULT_ORDER
) -> TruncatedSeries:
    """Power-series root ``y(z)`` of ``p(y, z) = 0`` extending ``seed``.

    ``seed`` holds the first coefficients of the wanted branch.  It must be
    long enough that ``dp/dy`` evaluated at the seed has a nonzero
    coefficient below ``len(seed)``; that coefficient's index ``v`` decides
    the lifting scheme (Newton for ``v == 0``, coefficient by coefficient
    otherwise).
    """
    k = len(seed)
    if k == 0:
        raise NeedsLongerSeedError("empty seed")
    dp = p.derivative_y()
    work = order + k  # headroom so the valuation shift never truncates us
    y = TruncatedSeries(list(seed), work)
    dv = dp.evaluate(y).truncate(k - 1).valuation()
    if dv is None:
        raise NeedsLongerSeedError(
            f"dp/dy vanishes to order {k} on the seed; give more coefficients"
        )
    res = p.evaluate(y)
    rv = res.valuation()
    if rv is not None and rv < k + dv:
        raise BranchError(f"seed is inconsistent: residual starts at z^{rv}")

    if dv == 0:
        y = _newton_lift(p, dp, y.truncate(order), k, order)
    else:
        y = _linear_lift(p, dp, y, k, dv, order)
    return y


def _newton_lift(p, dp, y, k, order):
    prec = k
    while prec <= order:
        y = y - divide(p.evaluate(y), dp.evaluate(y))
        prec *= 2
        # zero out everything beyond the precision we've actually certified
        y = TruncatedSeries(y.coeffs[: min(prec, order + 1)], order)
    return y


def _linear_lift(p, dp, y, k, dv, order):
    lc = dp.evaluate(y)[dv]
    coeffs = list(y.coeffs)
    for m in range(k, order + 1):
        res = p.evaluate(TruncatedSeries(coeffs))
        coeffs[m] = -res[m + dv] / lc
    return TruncatedSeries(coeffs[: order + 1])


def residual_valuation(y: TruncatedSeries, p: BivariatePoly) -> int | None:
    """First index where ``p(y, z)`` is nonzero, or None when it vanishes."""
    return p.evaluate(y).valuation()
