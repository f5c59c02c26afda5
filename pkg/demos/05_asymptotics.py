"""Singularities, growth constants and the n^(-5/2) law.

Dominant singularities are smallest positive roots of integer polynomials,
isolated exactly with Sturm sequences.  Growth rates and polynomial exponents
are then recovered numerically from exact counts.
"""

import math

from pmcubic.asymptotics import constants_report, growth_checks, log_transfer_estimate, report_text
from pmcubic.map_series import CountKind, closed_form_count

print(report_text(constants_report()))

print("\nleast-squares fits on n <= 500:")
for name, (g, beta, exact) in growth_checks(500).items():
    print(f"  {name:13} growth {g:.6f} (exact {exact:.6f})  exponent {beta:+.4f}")

print("\ntransfer estimate / exact count for matched maps:")
for n in (10, 50, 100, 500):
    ratio = math.exp(log_transfer_estimate(2, 1 / 24, n) - math.log(closed_form_count(CountKind.MATCHED_CUBIC, n)))
    print(f"  n={n:4}  {ratio:.5f}")
