import math
from fractions import Fraction

import pytest

from pmcubic import constants
from pmcubic.asymptotics import (
    RealBall,
    RootDomainError,
    alpha_b_closed_form,
    brackets_sign_change,
    closed_form_sequence,
    constants_report,
    count_roots,
    expectation_ratios,
    growth_fit,
    is_simple_root,
    log_transfer_estimate,
    poly_gcd,
    report_json,
    report_text,
    smallest_positive_root,
    sturm_sequence,
    theta_partial_sums,
    transfer_estimate,
)
from pmcubic.map_series import CountKind, closed_form_count

TOL = Fraction(1, 10**5)


def test_root_examples():
    b = smallest_positive_root(constants.SIGMA_POLY, Fraction(1, 10**8))
    assert abs(b.mid - Fraction("0.27964")) < TOL
    b = smallest_positive_root(constants.SIGMA_B_POLY, Fraction(1, 10**8))
    assert abs(b.mid - Fraction("0.27980")) < TOL
    b = smallest_positive_root([-2, 0, 1], Fraction(1, 10**8))
    assert abs(b.mid - Fraction("1.41421")) < TOL
    assert b.contains(Fraction(141421356, 10**8))


def test_root_errors():
    with pytest.raises(RootDomainError):
        smallest_positive_root([1, 0, 1])
    with pytest.raises(RootDomainError):
        smallest_positive_root([5])


def test_sturm_counts():
    # (x - 1)(x - 2)(x - 3)
    p = [-6, 11, -6, 1]
    seq = sturm_sequence(p)
    assert count_roots(seq, Fraction(0), Fraction(10)) == 3
    assert count_roots(seq, Fraction(3, 2), Fraction(5, 2)) == 1
    assert poly_gcd(p, [-1, 1]) == [-1, 1]


@pytest.mark.parametrize("name", ["SIGMA_POLY", "RHO_POLY", "SIGMA_B_POLY", "RHO_B_POLY", "ALPHA_B_POLY"])
def test_roots_are_simple_and_bracketed(name):
    p = getattr(constants, name)
    b = smallest_positive_root(p)
    assert is_simple_root(p, b)
    assert brackets_sign_change(p, b)
    assert b.rad <= Fraction(1, 10**12)


def test_double_root_detected():
    p = [1, -2, 1]  # (x - 1)^2
    assert not is_simple_root(p, smallest_positive_root(p))


def test_constants_contain_printed_values():
    balls = constants_report()
    for key in ("sigma", "rho", "sigma_b", "rho_b", "gamma", "delta", "alpha_b"):
        printed = Fraction(constants.PRINTED[key])
        assert abs(balls[key].mid - printed) < TOL, key
    assert balls["alpha_b/sigma_b"].lo >= Fraction("1.119")
    assert balls["alpha/sigma"].lo >= Fraction("1.109")
    assert abs(float(balls["alpha_b"].mid) - alpha_b_closed_form()) < 1e-12


def test_ball_comparisons():
    a = RealBall(Fraction(1), Fraction(2))
    b = RealBall(Fraction(3), Fraction(4))
    assert a < b and b > a
    with pytest.raises(ValueError):
        _ = a < RealBall(Fraction(3, 2), Fraction(5))
    assert (b / a).contains(2)
    with pytest.raises(ValueError):
        RealBall(Fraction(2), Fraction(1))


def test_reports():
    balls = constants_report(Fraction(1, 10**8))
    assert '"gamma"' in report_json(balls) and '"paper_value": "1.14196"' in report_json(balls)
    text = report_text(balls)
    assert "gamma" in text and "delta" in text


def test_transfer_estimate():
    assert transfer_estimate(2, 0.5, 1) == pytest.approx(3 * 2 / (2 * math.sqrt(math.pi)) / 0.5)
    for a3, rho, kind in (
        (2, 1 / 24, CountKind.MATCHED_CUBIC),
        (8 * math.sqrt(6) / 27, 27 / 512, CountKind.MATCHED_BRIDGELESS),
    ):
        log_ratio = log_transfer_estimate(a3, rho, 500) - math.log(closed_form_count(kind, 500))
        assert abs(math.exp(log_ratio) - 1) < 0.01
    with pytest.raises(ValueError):
        transfer_estimate(-1, 0.5, 3)


def test_growth_fit():
    g, beta = growth_fit(closed_form_sequence(CountKind.MATCHED_CUBIC, 500))
    assert abs(g - 24) < 0.1 and abs(beta + 2.5) < 0.05
    g, _ = growth_fit(closed_form_sequence(CountKind.MATCHED_BRIDGELESS, 500))
    assert abs(g - 512 / 27) < 0.1
    g, _ = growth_fit(expectation_ratios(CountKind.MATCHED_CUBIC, CountKind.CUBIC, 500))
    assert abs(g - 2 * math.sqrt(3) / 3) < 0.01
    with pytest.raises(RootDomainError):
        growth_fit([1] * 10)
    with pytest.raises(RootDomainError):
        growth_fit([1] * 49 + [0] * 10)


def test_growth_fit_recovers_a_synthetic_law():
    seq = [Fraction(3) ** n * n**2 for n in range(1, 201)]
    g, beta = growth_fit(seq)
    assert g == pytest.approx(3, rel=1e-9) and beta == pytest.approx(2, abs=1e-6)


def test_theta_partial_sums():
    sums = theta_partial_sums(60)
    assert all(a <= b for a, b in zip(sums, sums[1:]))
    assert sums[-1] < 0.125
