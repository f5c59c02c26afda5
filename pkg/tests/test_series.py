from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmcubic.series import (
    BivariatePoly,
    BranchError,
    DivergenceError,
    NeedsLongerSeedError,
    OrderMismatchError,
    SeriesDomainError,
    TruncatedSeries,
    combine,
    compose,
    divide,
    exp_series,
    integrate_pointed,
    inverse,
    point,
    residual_valuation,
    solve_algebraic,
    solve_fixed_point,
)

S = TruncatedSeries
z = S.variable


def coeffs(s):
    return [int(c) if c.denominator == 1 else c for c in s]


def test_difference_of_squares():
    assert coeffs((1 + z(2)) * (1 - z(2))) == [1, 0, -1]


def test_hand_expansion():
    a = S([0, 1, 3], 4)
    assert coeffs(combine(a, a, "mul")) == [0, 0, 1, 6, 9]


def test_add_zero_is_identity():
    a = S([1, 2, 3])
    assert a + S.zero(2) == a


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        S([1, 2]) + S([1, 2, 3])


def test_compose_examples():
    assert coeffs(compose(S([0, 0, 1], 4), 2 * z(4))) == [0, 0, 4, 0, 0]
    f = S([3, 1, 4, 1, 5])
    assert compose(f, z(4)) == f
    with pytest.raises(SeriesDomainError):
        compose(f, 1 + z(4))


def test_divide_examples():
    assert coeffs(divide(S([0, 0, 1, 1]), z(3))) == [0, 1, 1]
    assert coeffs(divide(S.one(3), 1 - z(3))) == [1, 1, 1, 1]
    with pytest.raises(SeriesDomainError):
        divide(S([1, 1, 0]), z(2))
    with pytest.raises(SeriesDomainError):
        divide(S.one(2), S.zero(2))


def test_exp_examples():
    assert exp_series(S.zero(3)) == S.one(3)
    assert list(exp_series(z(3))) == [1, 1, Fraction(1, 2), Fraction(1, 6)]
    with pytest.raises(SeriesDomainError):
        exp_series(S.one(3))


def test_integrate_pointed_examples():
    assert list(integrate_pointed(S([0, 0, 1]))) == [0, 0, Fraction(1, 2)]
    assert integrate_pointed(S.zero(4)) == S.zero(4)


def test_catalan_fixed_point():
    x = z(4)
    (y,) = solve_fixed_point(lambda ys: [x + ys[0] * ys[0]], 1, 4)
    assert coeffs(y) == [0, 1, 1, 2, 5]


def test_fixed_point_divergence_is_reported():
    # y = 1 + y never stabilises
    with pytest.raises(DivergenceError):
        solve_fixed_point(lambda ys: [1 + ys[0]], 1, 3)


def test_fixed_point_negative_coefficients_flagged():
    x = z(3)
    with pytest.raises(DivergenceError):
        solve_fixed_point(lambda ys: [x - ys[0] * ys[0]], 1, 3)


def test_algebraic_catalan():
    p = BivariatePoly.from_y_coeffs([[0, 1], [-1], [1]])
    assert coeffs(solve_algebraic(p, [0], 5)) == [0, 1, 1, 2, 5, 14]


def test_algebraic_errors():
    p = BivariatePoly.from_y_coeffs([[0, 1], [-1], [1]])
    with pytest.raises(BranchError):
        solve_algebraic(p, [3], 5)
    with pytest.raises(NeedsLongerSeedError):
        solve_algebraic(p, [], 5)
    # y^2 = z^2 (1 + z): derivative 2y vanishes on the seed [0]
    q = BivariatePoly.from_y_coeffs([[0, 0, -1, -1], [], [1]])
    with pytest.raises(NeedsLongerSeedError):
        solve_algebraic(q, [0], 5)
    y = solve_algebraic(q, [0, 1], 6)
    assert residual_valuation(y, q) is None


def test_json_round_trip():
    s = S([Fraction(1, 3), -2, 0, Fraction(7, 5)])
    assert S.loads(s.dumps()) == s
    assert S.from_json(s.to_json()) == s


def test_point_and_integrate_are_inverse():
    s = S([0, 1, Fraction(1, 2), 3])
    assert integrate_pointed(point(s)) == s


series_st = st.lists(
    st.fractions(min_value=-20, max_value=20, max_denominator=7), min_size=6, max_size=6
).map(S)


@settings(max_examples=60, deadline=None)
@given(series_st, series_st, series_st)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(series_st, series_st)
def test_inverse_and_division(a, b):
    b = b + (1 - b[0])  # unit constant term
    assert inverse(b) * b == S.one(b.order)
    assert divide(a, b) * b == a


@settings(max_examples=40, deadline=None)
@given(series_st, series_st, series_st)
def test_composition_is_associative(f, g, h):
    g = g - g[0]
    h = h - h[0]
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@settings(max_examples=40, deadline=None)
@given(series_st, series_st)
def test_exp_turns_sums_into_products(f, g):
    f = f - f[0]
    g = g - g[0]
    assert exp_series(f + g) == exp_series(f) * exp_series(g)
