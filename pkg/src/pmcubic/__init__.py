"""Perfect matchings in cubic planar maps and labeled cubic planar graphs.

Exact power-series machinery, counting series for maps and graphs,
brute-force oracles, the Ising correspondence, two bijections and the
asymptotic constants.
"""

from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = ["TruncatedSeries", "__version__"]
