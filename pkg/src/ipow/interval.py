"""Closed intervals over extended binary64, plus the few primitives pow needs.

An :class:`Interval` is a closed connected subset of the extended reals whose
bounds are binary64 values. The empty set is a single canonical value,
:data:`EMPTY`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

INF = math.inf


class IntervalParseError(ValueError):
    """Raised for malformed interval literals; ``token`` names the culprit."""

    def __init__(self, message: str, token: str):
        super().__init__(f"{message}: {token!r}")
        self.token = token


class Interval:
    """Closed interval ``[lo, hi]`` with binary64 bounds, possibly unbounded.

    Bounds never carry NaN, ``lo`` is never ``+inf`` and ``hi`` never ``-inf``.
    Negative zero is stored as ``+0.0``.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float | None = None):
        lo = float(lo)
        hi = lo if hi is None else float(hi)
        if lo != lo or hi != hi:
            raise ValueError("interval bound is NaN")
        if lo > hi:
            raise ValueError(f"interval bounds out of order: [{lo!r}, {hi!r}]")
        if lo == INF or hi == -INF:
            raise ValueError(f"interval has no finite or bounded point: [{lo!r}, {hi!r}]")
        # + 0.0 turns -0.0 into +0.0 and leaves everything else alone
        object.__setattr__(self, "lo", lo + 0.0)
        object.__setattr__(self, "hi", hi + 0.0)

    @classmethod
    def _raw(cls, lo: float, hi: float) -> Interval:
        # trusted constructor: caller guarantees the invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "lo", lo)
        object.__setattr__(obj, "hi", hi)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, v: object) -> bool:
        return self.lo <= v <= self.hi  # type: ignore[operator]

    def issubset(self, other: Interval) -> bool:
        if self.is_empty:
            return True
        return other.lo <= self.lo and self.hi <= other.hi

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        if self.is_empty:
            return "Interval.empty()"
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return format_interval(self)

    @staticmethod
    def empty() -> Interval:
        return EMPTY


EMPTY = Interval._raw(INF, -INF)
NONNEG = Interval._raw(0.0, INF)


@dataclass(frozen=True)
class EvalConfig:
    """Rounding settings for the pow kernel.

    ``slack_ulps`` is the outward widening applied to every corner value that
    is not provably exact. A value of 0 is honoured only for exact corners;
    inexact corners always move by at least one ulp.
    """

    slack_ulps: int = 2
    exact_paths: bool = True

    def __post_init__(self):
        if self.slack_ulps < 0:
            raise ValueError("slack_ulps must be non-negative")


DEFAULT_CONFIG = EvalConfig()


def next_up(v: float) -> float:
    return math.nextafter(v, INF)


def next_down(v: float) -> float:
    return math.nextafter(v, -INF)


def step_up(v: float, k: int) -> float:
    for _ in range(k):
        v = math.nextafter(v, INF)
    return v


def step_down(v: float, k: int) -> float:
    for _ in range(k):
        v = math.nextafter(v, -INF)
    return v


def hull(a: Interval, b: Interval) -> Interval:
    """Smallest interval containing both operands; EMPTY is the identity."""
    if a.lo > a.hi:
        return b
    if b.lo > b.hi:
        return a
    return Interval._raw(a.lo if a.lo <= b.lo else b.lo, a.hi if a.hi >= b.hi else b.hi)


def negate(a: Interval) -> Interval:
    if a.lo > a.hi:
        return EMPTY
    return Interval._raw(0.0 - a.hi, 0.0 - a.lo)


def intersect_nonneg(a: Interval) -> Interval:
    if a.hi < 0.0:
        return EMPTY
    if a.lo >= 0.0:
        return a
    return Interval._raw(0.0, a.hi)


# -- text syntax --------------------------------------------------------------

_BOUND_WORDS = {"inf": INF, "+inf": INF, "-inf": -INF, "infinity": INF,
                "+infinity": INF, "-infinity": -INF}
_DECIMAL = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_HEX = re.compile(r"[+-]?0[xX]([0-9a-fA-F]+\.?[0-9a-fA-F]*|\.[0-9a-fA-F]+)([pP][+-]?\d+)?")


def parse_bound(token: str) -> float:
    """Parse one bound: decimal, C99 hex-float, or ``inf``/``-inf``.

    Decimal literals denote the nearest binary64 value.
    """
    t = token.strip()
    word = _BOUND_WORDS.get(t.lower())
    if word is not None:
        return word
    if _HEX.fullmatch(t):
        return float.fromhex(t)
    if _DECIMAL.fullmatch(t):
        return float(t)
    raise IntervalParseError("bad interval bound", token.strip() or token)


def parse_bounds(text: str) -> tuple[float, float] | None:
    """Bounds of an interval literal without validating them; None for ``empty``."""
    t = text.strip()
    if t.lower() == "empty":
        return None
    if not (t.startswith("[") and t.endswith("]")):
        raise IntervalParseError("expected '[lo,hi]' or 'empty'", t)
    parts = t[1:-1].split(",")
    if len(parts) != 2:
        raise IntervalParseError("expected exactly two bounds", t)
    return parse_bound(parts[0]), parse_bound(parts[1])


def parse_interval(text: str) -> Interval:
    bounds = parse_bounds(text)
    if bounds is None:
        return EMPTY
    try:
        return Interval(*bounds)
    except ValueError:
        raise IntervalParseError("invalid interval", text.strip()) from None


def format_bound(v: float, hex_mode: bool = False) -> str:
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    if hex_mode:
        return v.hex()
    s = repr(v)
    return s[:-2] if s.endswith(".0") else s


def format_interval(a: Interval, hex_mode: bool = False) -> str:
    if a.is_empty:
        return "empty"
    return f"[{format_bound(a.lo, hex_mode)},{format_bound(a.hi, hex_mode)}]"
