"""Three routes to the number of cubic maps with a distinguished perfect matching.

1. A closed formula.
2. A quadratic equation, solved as a power series by Newton lifting.
3. A decomposition of maps into loops, isthmuses, series, parallel and
   polyhedral (3-connected) parts, fed with the 3-connected series.

All three agree coefficient by coefficient.
"""

from pmcubic import constants
from pmcubic.map_series import (
    CountKind,
    closed_form_count,
    matched_3connected_series,
    matched_map_series,
    solve_matched_bridgeless_system,
    solve_matched_map_system,
    verify_minimal_polynomial,
)

ORDER = 12

M_quadratic = matched_map_series(ORDER)
T0, T1 = matched_3connected_series(ORDER)
system = solve_matched_map_system(T0, T1, ORDER)
B = solve_matched_bridgeless_system(T0, T1, ORDER)
Mq, Ms, Bi, Ti = M_quadratic.integers(), system.M.integers(), B.integers(), (T0 + T1).integers()

print(f"{'vertices':>8} {'formula':>14} {'quadratic':>14} {'system':>14} {'bridgeless':>12} {'3-conn':>10}")
for n in range(1, ORDER + 1):
    print(
        f"{2 * n:>8} {closed_form_count(CountKind.MATCHED_CUBIC, n):>14} {Mq[n]:>14} "
        f"{Ms[n]:>14} {Bi[n]:>12} {Ti[n]:>10}"
    )

# rerooting symmetry: the root edge lies outside the matching twice as often as inside
assert system.M0 == 2 * system.M1
print("\nM0 == 2 M1:", system.M0 == 2 * system.M1)

# substitute the series back into the printed equations
print("quadratic residual:", verify_minimal_polynomial(M_quadratic, constants.MATCHED_MAP_POLY))
print("quartic residual (bridgeless):", verify_minimal_polynomial(B, constants.BRIDGELESS_MAP_POLY))
print("sextic residual (3-connected):", verify_minimal_polynomial(T1, constants.T1_POLY))

# the sextic as printed differs in one coefficient; that version drifts at z^12
T0p, T1p = matched_3connected_series(ORDER, constants.T1_POLY_PRINTED)
Bp = solve_matched_bridgeless_system(T0p, T1p, ORDER)
print("with the printed y^6 coefficient, B_12 =", Bp[12], "instead of", B[12])
