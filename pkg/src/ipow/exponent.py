"""Exponent classification that selects the reduction branch for negative bases.

Every finite binary64 value is a dyadic rational m * 2**e, so a singleton
exponent has an odd denominator only when it is an integer. Parity is read
straight off the IEEE-754 fields; floating-point modulo is never used.
"""

from __future__ import annotations

import enum
import math
import struct

from .interval import Interval


class ExponentError(ValueError):
    """The exponent interval admits no real power function value."""


class ExponentClass(enum.Enum):
    NON_SINGLETON = "non-singleton"
    SINGLETON_EVEN_INTEGER = "even-integer"
    SINGLETON_ODD_INTEGER = "odd-integer"
    SINGLETON_NON_INTEGER_DYADIC = "non-integer-dyadic"


class RationalClass(enum.Enum):
    EVEN_OVER_ODD = "even/odd"
    ODD_OVER_ODD = "odd/odd"
    ODD_OVER_EVEN = "odd/even"
    IRRATIONAL = "irrational"


_FRACTION_MASK = (1 << 52) - 1
_HIDDEN_BIT = 1 << 52


def decompose(y: float) -> tuple[int, int]:
    """Return ``(m, e)`` with ``y == m * 2**e`` read from the bit pattern.

    ``m`` carries the sign. ``y`` must be finite.
    """
    bits = struct.unpack("<Q", struct.pack("<d", y))[0]
    sign = -1 if bits >> 63 else 1
    biased = (bits >> 52) & 0x7FF
    frac = bits & _FRACTION_MASK
    if biased == 0x7FF:
        raise ValueError("decompose() needs a finite value")
    if biased == 0:
        return sign * frac, -1074
    return sign * (frac | _HIDDEN_BIT), biased - 1075


def _singleton_class(y: float) -> ExponentClass:
    m, e = decompose(y)
    m = abs(m)
    if m == 0:
        return ExponentClass.SINGLETON_EVEN_INTEGER
    if e >= 1:
        return ExponentClass.SINGLETON_EVEN_INTEGER
    if e == 0:
        return (ExponentClass.SINGLETON_ODD_INTEGER if m & 1
                else ExponentClass.SINGLETON_EVEN_INTEGER)
    shift = -e
    if m & ((1 << shift) - 1):
        return ExponentClass.SINGLETON_NON_INTEGER_DYADIC
    return (ExponentClass.SINGLETON_ODD_INTEGER if (m >> shift) & 1
            else ExponentClass.SINGLETON_EVEN_INTEGER)


def classify_exponent(y: Interval) -> ExponentClass:
    if y.is_empty:
        raise ExponentError("empty exponent")
    if y.lo < y.hi:
        return ExponentClass.NON_SINGLETON
    if math.isinf(y.lo):
        raise ExponentError("infinite singleton exponent")
    return _singleton_class(y.lo)


def classify_rational(p: int, q: int) -> RationalClass:
    """Parity class of the irreducible fraction ``p/q`` (``q >= 1``)."""
    if q < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"not an irreducible fraction: {p}/{q}")
    if q % 2 == 0:
        return RationalClass.ODD_OVER_EVEN
    if p % 2 == 0:
        return RationalClass.EVEN_OVER_ODD
    return RationalClass.ODD_OVER_ODD
