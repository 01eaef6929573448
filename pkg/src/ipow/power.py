"""Interval power ``x**y`` for arbitrary base and exponent intervals.

The graph of the real power function splits into three pieces, each a
reflection of the non-negative-base graph:

* ``a >= 0``                        gives ``pow0(a, b)``
* ``a < 0`` and ``b`` even/odd      gives ``pow0(-a, b)``
* ``a < 0`` and ``b`` odd/odd       gives ``-pow0(-a, b)``

For a non-singleton exponent interval both rational classes are dense in it,
so all three pieces contribute over the whole of ``y``. For a singleton
binary64 exponent the only odd-denominator values are integers, and the
parity of that integer picks the piece.
"""

from __future__ import annotations

from .exponent import ExponentClass, classify_exponent
from .interval import DEFAULT_CONFIG, EMPTY, EvalConfig, Interval, hull, negate
from .kernel import pow0


def pow_full(x: Interval, y: Interval, cfg: EvalConfig = DEFAULT_CONFIG) -> Interval:
    """Enclosure of the range of ``a**b`` over ``a in x``, ``b in y``.

    Returns EMPTY when no real value exists. Raises ``ExponentError`` for a
    singleton infinite exponent.
    """
    if x.is_empty or y.is_empty:
        return EMPTY
    kind = classify_exponent(y)
    pos = pow0(x, y, cfg)
    if x.lo >= 0.0 or kind is ExponentClass.SINGLETON_NON_INTEGER_DYADIC:
        return pos
    neg = pow0(negate(x), y, cfg)
    if kind is ExponentClass.NON_SINGLETON:
        return hull(pos, hull(neg, negate(neg)))
    if kind is ExponentClass.SINGLETON_EVEN_INTEGER:
        return hull(pos, neg)
    return hull(pos, negate(neg))
