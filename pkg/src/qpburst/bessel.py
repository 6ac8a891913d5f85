"""Modified Bessel functions of the second kind, orders 0 and 1.

Implemented with the ascending series for x <= 2 and a Thompson-Barnett
continued fraction for x > 2, so the same scalar code runs compiled inside
the simulation kernels or as plain Python.  The exponentially scaled
variants ``k0e``/``k1e`` (e^x K_nu(x)) are the primitives: the tunneling-rate
formulas combine them with their own exponentials, which avoids underflow at
low temperature.
"""

import math

from ._accel import jit_maybe
from .constants import EULER_GAMMA
from .errors import ParameterError

__all__ = ["bessel_k", "k0", "k1", "k0e", "k1e"]

_SERIES_TERMS = 32
_CF_MAX_ITER = 300
_CF_EPS = 1.0e-16


@jit_maybe(cache=True)
def _k0_k1_series(x):
    # ascending series, accurate to ~1e-15 relative for 0 < x <= 2
    q = 0.25 * x * x
    lg = math.log(0.5 * x)

    i0 = 1.0
    s0 = 0.0
    i1 = 1.0  # I1(x)/(x/2) accumulator
    s1 = 1.0 - 2.0 * EULER_GAMMA  # k = 0 term of the K1 sum
    term0 = 1.0
    term1 = 1.0
    hk = 0.0
    for k in range(1, _SERIES_TERMS):
        term0 *= q / (k * k)
        term1 *= q / (k * (k + 1))
        hk += 1.0 / k
        hk1 = hk + 1.0 / (k + 1)
        i0 += term0
        i1 += term1
        s0 += term0 * hk
        s1 += term1 * (hk + hk1 - 2.0 * EULER_GAMMA)

    k0v = -(lg + EULER_GAMMA) * i0 + s0
    i1v = 0.5 * x * i1
    k1v = 1.0 / x + lg * i1v - 0.25 * x * s1
    return k0v, k1v


@jit_maybe(cache=True)
def _k0e_k1e_cf(x):
    # Thompson-Barnett CF2 evaluation of e^x K0, e^x K1 for x >= 2
    a1 = 0.25
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d
    delh = d
    q1 = 0.0
    q2 = 1.0
    q = a1
    c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _CF_MAX_ITER):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < _CF_EPS:
            break
    h = a1 * h
    k0ev = math.sqrt(math.pi / (2.0 * x)) / s
    k1ev = k0ev * (x + 0.5 - h) / x
    return k0ev, k1ev


@jit_maybe(cache=True)
def k0e(x):
    """e^x K0(x) for x > 0."""
    if x <= 2.0:
        k0v, _ = _k0_k1_series(x)
        return k0v * math.exp(x)
    k0ev, _ = _k0e_k1e_cf(x)
    return k0ev


@jit_maybe(cache=True)
def k1e(x):
    """e^x K1(x) for x > 0."""
    if x <= 2.0:
        _, k1v = _k0_k1_series(x)
        return k1v * math.exp(x)
    _, k1ev = _k0e_k1e_cf(x)
    return k1ev


@jit_maybe(cache=True)
def k0(x):
    """K0(x) for x > 0; underflows to 0 above x = 710."""
    if x > 710.0:
        return 0.0
    if x <= 2.0:
        k0v, _ = _k0_k1_series(x)
        return k0v
    k0ev, _ = _k0e_k1e_cf(x)
    return k0ev * math.exp(-x)


@jit_maybe(cache=True)
def k1(x):
    """K1(x) for x > 0; underflows to 0 above x = 710."""
    if x > 710.0:
        return 0.0
    if x <= 2.0:
        _, k1v = _k0_k1_series(x)
        return k1v
    _, k1ev = _k0e_k1e_cf(x)
    return k1ev * math.exp(-x)


def bessel_k(order, x):
    """K_order(x) for order 0 or 1 and x > 0.

    Relative error below 1e-10 over x in [1e-6, 700]; returns 0.0 for
    x > 710 where the result underflows a double.
    """
    if order not in (0, 1):
        raise ParameterError(f"order must be 0 or 1, got {order!r}")
    x = float(x)
    if not x > 0.0 or math.isnan(x):
        raise ParameterError(f"x must be positive, got {x!r}")
    return k0(x) if order == 0 else k1(x)
