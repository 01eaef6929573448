"""Interval power function ``x**y`` over arbitrary base and exponent intervals."""

from .exponent import (
    ExponentClass,
    ExponentError,
    RationalClass,
    classify_exponent,
    classify_rational,
)
from .interval import (
    DEFAULT_CONFIG,
    EMPTY,
    EvalConfig,
    Interval,
    IntervalParseError,
    format_interval,
    hull,
    intersect_nonneg,
    negate,
    next_down,
    next_up,
    parse_interval,
)
from .kernel import CornerValue, corner_pow, pow0
from .power import pow_full

__all__ = [
    "DEFAULT_CONFIG", "EMPTY", "CornerValue", "EvalConfig", "ExponentClass",
    "ExponentError", "Interval", "IntervalParseError", "RationalClass",
    "classify_exponent", "classify_rational", "corner_pow", "format_interval",
    "hull", "intersect_nonneg", "negate", "next_down", "next_up",
    "parse_interval", "pow0", "pow_full",
]
