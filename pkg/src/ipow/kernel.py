"""Interval power function restricted to non-negative bases.

For a >= 0 the map (a, b) -> a**b is monotone in each argument separately,
so over a box its extrema sit at the four corners. Corners on the boundary
of the extended domain take their limit values:

    ======================  ========================
    corner                  value
    ======================  ========================
    a**0, 1**b              1
    0**b                    0 if b > 0, +inf if b < 0
    inf**b                  +inf if b > 0, 0 if b < 0
    a**+inf  (a > 0)        +inf if a > 1, 0 if a < 1
    a**-inf  (a > 0)        0 if a > 1, +inf if a < 1
    ======================  ========================

``0**0`` and ``inf**0`` are 1. Every other value a path can approach at those
two points lies between 1 and a neighbouring corner, so the hull of the
corners still covers the closure of the graph over the box.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, NamedTuple

from .interval import (
    DEFAULT_CONFIG,
    EMPTY,
    INF,
    EvalConfig,
    Interval,
    step_down,
    step_up,
)

MAX_FLOAT = 1.7976931348623157e308

# cap on |b| for the generic exact-integer-power check
EXACT_INT_EXPONENT = 16


class CornerValue(NamedTuple):
    value: float
    exact: bool


def _libm_pow(a: float, b: float) -> float:
    try:
        return math.pow(a, b)
    except OverflowError:
        return INF


# Scalar backend for inexact corners. Must be faithfully rounded
# (error <= 1 ulp) for the default slack of 2 ulps to be sound.
scalar_pow: Callable[[float, float], float] = _libm_pow


def _limit_value(a: float, b: float) -> float | None:
    """Value at a corner fixed by convention, or None for an ordinary corner."""
    if b == 0.0 or a == 1.0:
        return 1.0
    if a == 0.0:
        return 0.0 if b > 0.0 else INF
    if a == INF:
        return INF if b > 0.0 else 0.0
    if b == INF:
        return INF if a > 1.0 else 0.0
    if b == -INF:
        return 0.0 if a > 1.0 else INF
    if b == 1.0:
        return a
    return None


def _exact_power(a: float, b: float) -> float | None:
    """a**b when b is an integer and the result is a binary64 value, else None."""
    if not b.is_integer():
        return None
    n = int(b)
    mant, exp = math.frexp(a)
    if mant == 0.5:
        # a is a power of two: 2**((exp - 1) * n)
        e = (exp - 1) * n
        if -1074 <= e <= 1023:
            return math.ldexp(1.0, e)
        return None
    if abs(n) > EXACT_INT_EXPONENT:
        return None
    if n < 0:
        # a is not a power of two, so 1/a**|n| is not dyadic
        return None
    num, den = a.as_integer_ratio()
    odd = num >> ((num & -num).bit_length() - 1)
    if (odd.bit_length() - 1) * n >= 53:
        return None
    r = Fraction(num ** n, den ** n)
    try:
        f = float(r)
    except OverflowError:
        return None
    if Fraction(f) == r:
        return f
    return None


def corner_pow(a: float, b: float,
               cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[CornerValue, CornerValue]:
    """Lower and upper bounds on ``a**b`` for ``a >= 0`` (``a`` may be +inf).

    Corners fixed by the limit table, and integer powers whose result is
    representable, are returned exact. Everything else comes from the scalar
    backend widened outward by ``cfg.slack_ulps`` (at least one ulp).
    """
    v = _limit_value(a, b)
    if v is not None:
        c = CornerValue(v, True)
        return c, c
    if cfg.exact_paths:
        v = _exact_power(a, b)
        if v is not None:
            c = CornerValue(v, True)
            return c, c
    v = scalar_pow(a, b)
    k = cfg.slack_ulps if cfg.slack_ulps > 0 else 1
    if v == INF:
        lo = step_down(MAX_FLOAT, k)
    else:
        lo = step_down(v, k)
        if lo < 0.0:
            lo = 0.0
    hi = step_up(v, k)
    lo, hi = _clamp(a, b, lo, hi, cfg)
    return CornerValue(lo, False), CornerValue(hi, False)


def _exact_at(a: float, b: float, cfg: EvalConfig) -> float | None:
    v = _limit_value(a, b)
    if v is None and cfg.exact_paths:
        v = _exact_power(a, b)
    return v


def _clamp(a: float, b: float, lo: float, hi: float,
           cfg: EvalConfig) -> tuple[float, float]:
    """Tighten a widened bracket with bounds that monotonicity guarantees.

    Keeps the bracket on the correct side of 1 and between the exact values
    at the neighbouring integer exponents. Without this a corner just off an
    exact one could be widened past it, and a smaller box would get a wider
    result than the box containing it.
    """
    if (a > 1.0) == (b > 0.0):
        if lo < 1.0:
            lo = 1.0
    elif hi > 1.0:
        hi = 1.0
    n = math.floor(b)
    if n != b:
        e0 = _exact_at(a, float(n), cfg)
        if e0 is not None:
            e1 = _exact_at(a, float(n + 1), cfg)
            if e1 is not None:
                if e0 > e1:
                    e0, e1 = e1, e0
                if lo < e0:
                    lo = e0
                if hi > e1:
                    hi = e1
    return lo, hi


def pow0(x: Interval, y: Interval, cfg: EvalConfig = DEFAULT_CONFIG) -> Interval:
    """Enclosure of ``{a**b : a in x, a >= 0, b in y}`` and its closure."""
    xlo, xhi = x.lo, x.hi
    if xhi < 0.0 or xlo > xhi or y.lo > y.hi:
        return EMPTY
    if xlo < 0.0:
        xlo = 0.0
    bases = (xlo,) if xlo == xhi else (xlo, xhi)
    exps = (y.lo,) if y.lo == y.hi else (y.lo, y.hi)
    lo = INF
    hi = 0.0
    for a in bases:
        for b in exps:
            cl, cu = corner_pow(a, b, cfg)
            if cl.value < lo:
                lo = cl.value
            if cu.value > hi:
                hi = cu.value
    return Interval._raw(lo, hi)
