"""
This package holds the numerical machinery the series evaluators share: a list
helper for repeated averaging, convergence acceleration for slowly convergent
nested sums, rigorous integral-comparison tails, complete Bell polynomials and a
small truncated power-series ring.

Dependencies:
- Standard libraries: collections.abc, math
- Third-party libraries: mpmath
- Custom libraries: mzvlab.core, mzvlab.precision

Features:
- Midpoints of consecutive list elements
- Euler transform (iterated averaging) of alternating series
- Generalized Richardson extrapolation over a geometric ladder of cutoffs
- Integral-comparison tail bounds for nested harmonic series
- Complete Bell polynomials by recurrence and by the explicit partition sum
- Truncated power series for Taylor coefficients in a shift parameter
"""


def get_list_mids(_list: list) -> list:
    """returns a list of the midpoints between list elements"""
    _range = range(len(_list))
    return [(_list[i - 1] + _list[i]) / 2 for i in _range if i > 0]
