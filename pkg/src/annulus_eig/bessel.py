"""Bessel functions J0, Y0, J1, Y1 of a real argument.

Three evaluation branches, selected by argument size:

* ``x < 9``: ascending power series summed in float64 with ``math.fsum``.
* ``9 <= x < 13``: the same power series summed in exact rational
  arithmetic (the terms are rational in x**2; only the logarithmic
  prefactors of the Y functions round).  Float64 summation loses digits
  here through cancellation, the rational sum does not.
* ``x >= 13``: Hankel asymptotic expansion truncated at its smallest term.

Each branch keeps the absolute error below 1e-12 on its interval for
arguments up to 50, which is the accuracy contract of :func:`j0` and
:func:`y0`.
"""

import math
from fractions import Fraction

EULER_GAMMA = 0.5772156649015328606065120900824024

# Branch switch points: float series degrades past ~12 (alternating-series
# cancellation), the asymptotic expansion reaches ~2e-13 absolute at 13.
_RATIONAL_MIN = 9.0
_ASYMPTOTIC_MIN = 13.0
_MAX_TERMS = 200


def _check_arg(x, name):
    if not isinstance(x, (int, float)) or isinstance(x, bool):
        raise TypeError(f"{name} must be a real number, got {type(x).__name__}")
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return float(x)


def _series_j0_float(x):
    z = x * x
    term = 1.0
    terms = [term]
    for k in range(1, _MAX_TERMS):
        term *= -z / (4.0 * k * k)
        terms.append(term)
        if abs(term) < 1e-20:
            break
    return math.fsum(terms)


def _series_y0_float(x):
    # Y0 = (2/pi) [ (ln(x/2) + gamma) J0(x) + sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2 ]
    z = x * x
    term = 1.0
    hk = 0.0
    terms = []
    for k in range(1, _MAX_TERMS):
        term *= -z / (4.0 * k * k)
        hk += 1.0 / k
        terms.append(-term * hk)
        if abs(term) < 1e-20:
            break
    s = math.fsum(terms)
    return (2.0 / math.pi) * ((math.log(0.5 * x) + EULER_GAMMA) * _series_j0_float(x) + s)


def _series_j1_float(x):
    z = x * x
    term = 0.5 * x
    terms = [term]
    for k in range(1, _MAX_TERMS):
        term *= -z / (4.0 * k * (k + 1))
        terms.append(term)
        if abs(term) < 1e-20:
            break
    return math.fsum(terms)


def _series_y1_float(x):
    # Y1 = (2/pi) (ln(x/2) + gamma) J1(x) - 2/(pi x)
    #      - (1/pi) sum_{k>=0} (-1)^k (H_k + H_{k+1}) (x/2)^{2k+1} / (k! (k+1)!)
    term = 0.5 * x
    hk = 0.0
    hk1 = 1.0
    terms = [term * (hk + hk1)]
    for k in range(1, _MAX_TERMS):
        term *= -x * x / (4.0 * k * (k + 1))
        hk += 1.0 / k
        hk1 += 1.0 / (k + 1)
        terms.append(term * (hk + hk1))
        if abs(term) < 1e-20:
            break
    s = math.fsum(terms)
    return ((2.0 / math.pi) * (math.log(0.5 * x) + EULER_GAMMA) * _series_j1_float(x)
            - 2.0 / (math.pi * x) - s / math.pi)


def _series_rational(x, order):
    """Exact-rational series sums for order 0 or 1.

    Returns (j_sum, y_correction) where j_sum is the full J series and
    y_correction is the harmonic-number series of the matching Y function
    (its transcendental prefactors are applied by the caller).  x enters as
    an exact dyadic rational, so both sums round only on final conversion.
    """
    z4 = Fraction(x) ** 2 / 4  # (x/2)^2, exact
    if order == 0:
        term = Fraction(1)
        hsum = Fraction(0)  # H_k
        j_terms = term
        y_terms = Fraction(0)
        for k in range(1, _MAX_TERMS):
            term *= -z4 / (k * k)
            hsum += Fraction(1, k)
            j_terms += term
            y_terms -= term * hsum  # (-1)^{k+1} H_k (x/2)^{2k} / (k!)^2
            if abs(term) < Fraction(1, 10 ** 25):
                break
        return float(j_terms), float(y_terms)
    term = Fraction(x) / 2
    hk = Fraction(0)
    hk1 = Fraction(1)
    j_terms = term
    y_terms = term * (hk + hk1)
    for k in range(1, _MAX_TERMS):
        term *= -z4 / (k * (k + 1))
        hk += Fraction(1, k)
        hk1 += Fraction(1, k + 1)
        j_terms += term
        y_terms += term * (hk + hk1)
        if abs(term) < Fraction(1, 10 ** 25):
            break
    return float(j_terms), float(y_terms)


def _hankel_pq(order, x):
    """Modulus/phase sums P, Q of the large-argument expansion.

    c_k = prod_{j<=k} (4 order^2 - (2j-1)^2) / (8 j x); the series is
    truncated at its smallest term (it diverges beyond).
    """
    mu4 = 4.0 * order * order
    c = 1.0
    p_terms = [1.0]
    q_terms = []
    prev = abs(c)
    for k in range(1, 61):
        c *= (mu4 - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(c) >= prev:
            break
        prev = abs(c)
        signed = c if (k // 2) % 2 == 0 else -c
        if k % 2 == 1:
            q_terms.append(signed)
        else:
            p_terms.append(signed)
    return math.fsum(p_terms), math.fsum(q_terms)


def _asymptotic(order, x, kind):
    p, q = _hankel_pq(order, x)
    chi = x - (2 * order + 1) * math.pi / 4.0
    amp = math.sqrt(2.0 / (math.pi * x))
    if kind == "j":
        return amp * (p * math.cos(chi) - q * math.sin(chi))
    return amp * (p * math.sin(chi) + q * math.cos(chi))


def j0(x):
    """Bessel function of the first kind, order zero.

    Absolute error at most 1e-12 for 0 <= x <= 50.  Raises ``ValueError``
    for negative or non-finite arguments.
    """
    x = _check_arg(x, "x")
    if x < 0.0:
        raise ValueError(f"j0 requires x >= 0, got {x!r}")
    if x >= _ASYMPTOTIC_MIN:
        return _asymptotic(0, x, "j")
    if x >= _RATIONAL_MIN:
        return _series_rational(x, 0)[0]
    return _series_j0_float(x)


def y0(x):
    """Bessel function of the second kind, order zero.

    Absolute error at most 1e-12 for 0 < x <= 50.  Raises ``ValueError``
    at x <= 0 where the function has its logarithmic singularity.
    """
    x = _check_arg(x, "x")
    if x <= 0.0:
        raise ValueError(f"y0 requires x > 0, got {x!r}")
    if x >= _ASYMPTOTIC_MIN:
        return _asymptotic(0, x, "y")
    if x >= _RATIONAL_MIN:
        j_sum, y_corr = _series_rational(x, 0)
        return (2.0 / math.pi) * ((math.log(0.5 * x) + EULER_GAMMA) * j_sum + y_corr)
    return _series_y0_float(x)


def j1(x):
    """Bessel function of the first kind, order one."""
    x = _check_arg(x, "x")
    if x < 0.0:
        raise ValueError(f"j1 requires x >= 0, got {x!r}")
    if x >= _ASYMPTOTIC_MIN:
        return _asymptotic(1, x, "j")
    if x >= _RATIONAL_MIN:
        return _series_rational(x, 1)[0]
    return _series_j1_float(x)


def y1(x):
    """Bessel function of the second kind, order one."""
    x = _check_arg(x, "x")
    if x <= 0.0:
        raise ValueError(f"y1 requires x > 0, got {x!r}")
    if x >= _ASYMPTOTIC_MIN:
        return _asymptotic(1, x, "y")
    if x >= _RATIONAL_MIN:
        j_sum, y_corr = _series_rational(x, 1)
        return ((2.0 / math.pi) * (math.log(0.5 * x) + EULER_GAMMA) * j_sum
                - 2.0 / (math.pi * x) - y_corr / math.pi)
    return _series_y1_float(x)
