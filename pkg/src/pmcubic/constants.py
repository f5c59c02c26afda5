"""Polynomial literals, transcribed once.

Bivariate polynomials are given as rows: ``rows[i]`` lists the coefficients
of ``y^i`` in ascending powers of ``z``.  Univariate ones are ascending
coefficient lists.  Term order within each row follows the printed equation
read right to left.
"""

from fractions import Fraction

from .series import BivariatePoly

# 72 M^2 z^2 + (216 z^2 - 36 z + 1) M + 162 z^2 - 6 z = 0
# Branch through M(0) = 0; dp/dy(0, 0) = 1, so seed [0] fixes it.
MATCHED_MAP_POLY = BivariatePoly.from_y_coeffs([
    [0, -6, 162],
    [1, -36, 216],
    [0, 0, 72],
])
MATCHED_MAP_SEED = (0,)

# Degree-6 equation for the 3-connected series with root edge in the matching,
# exactly as printed.  Its y^6 coefficient is 1, but the homogeneous top part
# of every other row is 4 (y + z)^6; with 1 the branch is right through z^11
# and wrong from z^12 on (both map systems then disagree with the closed
# formulas).  T1_POLY below uses 4; this literal is kept for comparison.
T1_POLY_PRINTED = BivariatePoly.from_y_coeffs([
    [0, 0, -1, 12, 33, 28, 4],
    [1, -16, 1, 112, 128, 24],
    [7, 12, 150, 232, 60],
    [19, 96, 208, 80],
    [25, 92, 60],
    [16, 24],
    [1],
])
T1_POLY = BivariatePoly.from_y_coeffs([
    [0, 0, -1, 12, 33, 28, 4],
    [1, -16, 1, 112, 128, 24],
    [7, 12, 150, 232, 60],
    [19, 96, 208, 80],
    [25, 92, 60],
    [16, 24],
    [4],
])
# Seed [0, 0, 1]: K4 with its 3 matchings gives T(z) = 3z^2 + ..., one third
# of which have the root in the matching.
T1_SEED = (0, 0, 1)

# 64 B^4 z^3 + (384 z^3 + 144 z^2) B^3 + (864 z^3 + 1224 z^2 + 108 z) B^2
#   + (864 z^3 + 2700 z^2 - 756 z + 27) B + 324 z^3 + 1782 z^2 - 81 z = 0
BRIDGELESS_MAP_POLY = BivariatePoly.from_y_coeffs([
    [0, -81, 1782, 324],
    [27, -756, 2700, 864],
    [0, 108, 1224, 864],
    [0, 0, 144, 384],
    [0, 0, 0, 64],
])
BRIDGELESS_MAP_SEED = (0,)

# Dominant-singularity polynomials (ascending coefficients in x).
# sigma: connected cubic planar graphs with a distinguished matching
SIGMA_POLY = (3616, 0, -45362, 0, -11833, 0, 7232, 0, 904)
# sigma_b: bridgeless variant
SIGMA_B_POLY = (432, 0, -5587, 0, 864, 0, 216)
# rho: all labeled cubic planar graphs
RHO_POLY = (46656, 0, 279936, 0, -7293760, 0, 513216, 0, 148716, 0, 17496, 0, 729)
# rho_b: labeled bridgeless cubic planar graphs
RHO_B_POLY = (432, 0, -4265, 0, 324, 0, 54)
# alpha_b = sqrt((3 sqrt 3 - 5) / 2)  <=>  2 a^4 + 10 a^2 - 1 = 0
ALPHA_B_POLY = (-1, 0, 10, 0, 2)

# Growth constant of simple cubic maps; only a 4-digit decimal is available.
ALPHA_MID = Fraction(3102, 10000)
ALPHA_RAD = Fraction(5, 100000)

# Singularity of the simple-triangulation series and its value there.
TAU = Fraction(27, 256)
THETA_AT_TAU = Fraction(1, 8)

# Printed decimals used as reference values by the constants report.
PRINTED = {
    "sigma": "0.27964",
    "rho": "0.31923",
    "sigma_b": "0.27980",
    "rho_b": "0.319523",
    "delta": "1.14157",
    "gamma": "1.14196",
    "alpha": "0.3102",
    "alpha_b": "0.31317",
    "alpha/sigma": "1.109",
    "alpha_b/sigma_b": "1.119",
}
