"""Brute-force reference for ``x**y`` at exact rational arguments.

Nothing here touches binary64 ``pow``. Magnitudes come from integer root
extraction (gmpy2) when the rational power is small enough to expand, and
from mpmath's rigorous interval ``exp``/``log`` otherwise. Either way the
result is a rational bracket of relative width at most ``2**-bits``.

Exact rationals are :class:`fractions.Fraction`, which is always stored
reduced with a positive denominator.
"""

from __future__ import annotations

import enum
import math
import random
import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2
from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

from .exponent import RationalClass, classify_exponent, classify_rational
from .interval import DEFAULT_CONFIG, INF, EvalConfig, Interval, format_interval
from .power import pow_full

DEFAULT_BITS = 96
REFINE_BITS = 512

# above this many bits of |x|**|p| the exp/log route is cheaper
_EXPAND_LIMIT = 40_000
_MAX_ROOT_INDEX = 1024


class Undefined(enum.Enum):
    """Why ``x**y`` has no real value."""

    NEGATIVE_BASE = "negative base with even-denominator exponent"
    ZERO_TO_NEGATIVE = "zero to a negative power"


@dataclass(frozen=True)
class OracleValue:
    """Bracket ``lower <= x**y <= upper``.

    Bounds are exact rationals; ``upper`` is ``+inf`` only for values beyond
    ``2**HUGE_EXP``.
    """

    lower: Fraction
    upper: Fraction | float

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __neg__(self) -> OracleValue:
        return OracleValue(-self.upper, -self.lower)

    def inside(self, box: Interval) -> bool | None:
        """True if surely in ``box``, False if surely not, None if undecided."""
        if box.is_empty:
            return False
        if box.lo <= self.lower and self.upper <= box.hi:
            return True
        if self.upper < box.lo or self.lower > box.hi:
            return False
        return None


def _scaled(num: int, den: int, shift: int) -> tuple[int, int]:
    """``divmod(num * 2**shift, den)`` for a shift of either sign."""
    if shift >= 0:
        return divmod(num << shift, den)
    return divmod(num, den << -shift)


def _pow2(s: int) -> Fraction:
    return Fraction(1 << s) if s >= 0 else Fraction(1, 1 << -s)


def root_bracket(num: int, den: int, q: int, bits: int = DEFAULT_BITS) -> OracleValue:
    """Bracket the positive real ``(num/den) ** (1/q)``."""
    if num <= 0 or den <= 0 or q < 1:
        raise ValueError("root_bracket needs num, den > 0 and q >= 1")
    log2_est = num.bit_length() - den.bit_length()
    # makes the scaled root at least 2**bits
    s = bits - (log2_est - 1) // q
    n_scaled, rem = _scaled(num, den, q * s)
    r, exact = gmpy2.iroot(gmpy2.mpz(n_scaled), q)
    r = int(r)
    unit = _pow2(-s)
    if exact and rem == 0:
        v = r * unit
        return OracleValue(v, v)
    return OracleValue(r * unit, (r + 1) * unit)


_local = threading.local()


def _iv_context() -> MPIntervalContext:
    # mpmath precision is context state; one context per thread
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = _local.ctx = MPIntervalContext()
    return ctx


# magnitudes past 2**+-HUGE_EXP are far outside binary64 and kept symbolic
HUGE_EXP = 1 << 16


def _iv_to_bracket(v) -> OracleValue | None:
    """Rational bracket from a positive mpmath interval; None if it is so far
    outside binary64 range that only its side matters."""
    a, b = v._mpi_
    _, _, a_exp, a_bc = a
    _, _, b_exp, b_bc = b
    if a_exp + a_bc > HUGE_EXP or b_exp + b_bc < -HUGE_EXP:
        return None
    return OracleValue(Fraction(*to_rational(a)), Fraction(*to_rational(b)))


def _huge_or_tiny(v) -> OracleValue:
    a, _ = v._mpi_
    if a[2] + a[3] > HUGE_EXP:
        return OracleValue(Fraction(1 << HUGE_EXP), INF)
    return OracleValue(Fraction(0), Fraction(1, 1 << HUGE_EXP))


def exp_log_bracket(x: Fraction, y: Fraction, bits: int = DEFAULT_BITS) -> OracleValue:
    """Bracket ``x ** y`` for ``x > 0`` through interval exp(y * log x)."""
    iv = _iv_context()
    prec = bits + 40
    while True:
        iv.prec = prec
        xv = iv.mpf(x.numerator) / x.denominator
        yv = iv.mpf(y.numerator) / y.denominator
        v = iv.exp(yv * iv.log(xv))
        br = _iv_to_bracket(v)
        if br is None:
            return _huge_or_tiny(v)
        if br.lower > 0 and (br.upper - br.lower) <= br.lower / (1 << bits):
            return br
        prec *= 2


def magnitude(x: Fraction, y: Fraction, bits: int = DEFAULT_BITS) -> OracleValue:
    """Bracket ``x ** y`` for rational ``x > 0``."""
    p, q = y.numerator, y.denominator
    if p == 0 or x == 1:
        return OracleValue(Fraction(1), Fraction(1))
    a, b = x.numerator, x.denominator
    e = abs(p)
    if q <= _MAX_ROOT_INDEX and e * (a.bit_length() + b.bit_length()) <= _EXPAND_LIMIT:
        num, den = a ** e, b ** e
        if p < 0:
            num, den = den, num
        return root_bracket(num, den, q, bits)
    return exp_log_bracket(x, y, bits)


def oracle_pow(x: Fraction, y: Fraction,
               bits: int = DEFAULT_BITS) -> OracleValue | Undefined:
    """Real value of ``x ** y`` at exact rationals, or why there is none.

    A negative base needs an odd denominator in ``y``; the sign is then the
    parity of the numerator (even gives +, odd keeps the base's sign).
    """
    x, y = Fraction(x), Fraction(y)
    if x == 0:
        if y > 0:
            return OracleValue(Fraction(0), Fraction(0))
        if y == 0:
            return OracleValue(Fraction(1), Fraction(1))
        return Undefined.ZERO_TO_NEGATIVE
    if x > 0:
        return magnitude(x, y, bits)
    cls = classify_rational(y.numerator, y.denominator)
    if cls is RationalClass.ODD_OVER_EVEN:
        return Undefined.NEGATIVE_BASE
    m = magnitude(-x, y, bits)
    return m if cls is RationalClass.EVEN_OVER_ODD else -m


# -- sampling ---------------------------------------------------------------

_BASE_WINDOW = 64.0
_EXP_WINDOW = 8.0
_MAX_DENOMINATOR = 99


def _window(box: Interval, width: float) -> tuple[float, float]:
    lo, hi = box.lo, box.hi
    if lo == -INF and hi == INF:
        return -width, width
    if lo == -INF:
        return hi - width - abs(hi), hi
    if hi == INF:
        return lo, lo + width + abs(lo)
    return lo, hi


def _uniform(rng: random.Random, box: Interval, wl: float, wh: float) -> Fraction:
    v = wl + (wh - wl) * rng.random()
    if v != v or v in (INF, -INF):
        v = wl
    return Fraction(min(max(v, box.lo), box.hi))


def _finite_ends(box: Interval) -> list[float]:
    return [e for e in {box.lo, box.hi} if math.isfinite(e)]


def sample_base(rng: random.Random, box: Interval) -> Fraction:
    wl, wh = _window(box, _BASE_WINDOW)
    r = rng.random()
    ends = _finite_ends(box)
    if r < 0.15 and ends:
        return Fraction(rng.choice(ends))
    if r < 0.25 and box.lo <= 0.0 <= box.hi:
        return Fraction(0)
    if r < 0.5:
        m = rng.randint(1, 12)
        klo = math.ceil(Fraction(wl) * m)
        khi = math.floor(Fraction(wh) * m)
        if klo <= khi:
            return Fraction(rng.randint(klo, khi), m)
    return _uniform(rng, box, wl, wh)


def sample_exponent(rng: random.Random, box: Interval) -> Fraction:
    """Exact rational in ``box``; parity classes even/odd, odd/odd and odd/even
    are drawn with equal weight and denominators stay at most 99."""
    if box.is_singleton:
        return Fraction(box.lo)
    wl, wh = _window(box, _EXP_WINDOW)
    ends = _finite_ends(box)
    if rng.random() < 0.1 and ends:
        return Fraction(rng.choice(ends))
    flo, fhi = Fraction(wl), Fraction(wh)
    for _ in range(20):
        cls = rng.randrange(3)
        if cls == 2:
            q = 2 * rng.randint(1, _MAX_DENOMINATOR // 2)
        else:
            q = 2 * rng.randint(0, _MAX_DENOMINATOR // 2) + 1
        p_parity = 0 if cls == 0 else 1
        plo = math.ceil(flo * q)
        phi = math.floor(fhi * q)
        if plo % 2 != p_parity:
            plo += 1
        if plo > phi:
            continue
        p = plo + 2 * rng.randint(0, (phi - plo) // 2)
        if math.gcd(p, q) == 1:
            return Fraction(p, q)
    return _uniform(rng, box, wl, wh)


_BASE_MAGNITUDES = (0.5, 1.0, 2.0, 3.0, 8.0, 0.125, 27.0, 10.0)


def _magnitude(rng: random.Random) -> float:
    r = rng.random()
    if r < 0.3:
        return rng.choice(_BASE_MAGNITUDES)
    if r < 0.7:
        return rng.uniform(0.0, 4.0)
    return math.ldexp(rng.random() + 0.5, rng.randint(-20, 20))


def random_base_box(rng: random.Random, kind: str | None = None) -> Interval:
    kind = kind or rng.choice(
        ("nonneg", "negative", "mixed", "zero_end", "unbounded", "singleton"))
    a, b = sorted((_magnitude(rng), _magnitude(rng)))
    if kind == "nonneg":
        return Interval(a, b)
    if kind == "negative":
        a = a or 2.0 ** -10
        b = max(a, b)
        return Interval(-b, -a)
    if kind == "mixed":
        return Interval(-(a or 1.0), b or 1.0)
    if kind == "zero_end":
        return Interval(0.0, b) if rng.random() < 0.5 else Interval(-b, 0.0)
    if kind == "unbounded":
        return rng.choice((Interval(-INF, b), Interval(-INF, -b), Interval(a, INF),
                           Interval(-a, INF), Interval(-INF, INF)))
    v = rng.choice((a, -a, b, -b))
    return Interval(v, v)


def random_exponent_box(rng: random.Random, kind: str | None = None) -> Interval:
    kind = kind or rng.choice(
        ("range", "narrow", "unbounded", "even", "odd", "fraction"))
    if kind == "range":
        c, d = sorted((rng.uniform(-6, 6), rng.uniform(-6, 6)))
        if c == d:
            d = math.nextafter(d, INF)
        return Interval(c, d)
    if kind == "narrow":
        c = rng.choice((rng.uniform(-6, 6), float(rng.randint(-6, 6))))
        return Interval(c, math.nextafter(c, INF) if rng.random() < 0.5 else c + 2.0 ** -20)
    if kind == "unbounded":
        c = rng.uniform(-4, 4)
        return rng.choice((Interval(-INF, c), Interval(c, INF), Interval(-INF, INF)))
    if kind == "even":
        v = float(2 * rng.randint(-5, 5)) if rng.random() < 0.9 else 2.0 ** 53 + 2
        return Interval(v, v)
    if kind == "odd":
        v = float(2 * rng.randint(-5, 4) + 1)
        return Interval(v, v)
    v = math.ldexp(2 * rng.randint(-40, 40) + 1, -rng.randint(1, 6))
    return Interval(v, v)


# -- containment checking -----------------------------------------------------

def _frac_str(v: Fraction | float) -> str:
    if not isinstance(v, Fraction):
        return repr(v)
    n, d = v.numerator, v.denominator
    if max(n.bit_length(), d.bit_length()) > 4000:
        # str() of huge ints is capped by the interpreter
        return f"{n:#x}/{d:#x}"
    return f"{n}/{d}"


def _approx(v: Fraction | float) -> str:
    try:
        return repr(float(v))
    except OverflowError:
        return "inf" if v > 0 else "-inf"


@dataclass(frozen=True)
class Violation:
    index: int
    x: Fraction
    y: Fraction
    bracket: OracleValue
    computed: Interval

    def record(self) -> dict:
        return {
            "index": self.index,
            "x": _frac_str(self.x),
            "y": _frac_str(self.y),
            "oracle_lower": _frac_str(self.bracket.lower),
            "oracle_upper": _frac_str(self.bracket.upper),
            "computed": format_interval(self.computed, hex_mode=True),
        }


def base_sign(box: Interval) -> str:
    if box.lo >= 0.0:
        return "nonneg"
    if box.hi < 0.0:
        return "negative"
    return "mixed" if box.hi > 0.0 else "nonpos"


@dataclass
class ContainmentReport:
    samples: int = 0
    defined: int = 0
    boxes: int = 0
    violations: list[Violation] = field(default_factory=list)
    # boxes seen, keyed by (base sign, exponent class)
    kinds: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: ContainmentReport) -> None:
        offset = self.samples
        self.samples += other.samples
        self.defined += other.defined
        self.boxes += other.boxes
        self.kinds.update(other.kinds)
        for v in other.violations:
            self.violations.append(
                Violation(v.index + offset, v.x, v.y, v.bracket, v.computed))

    def records(self) -> list[dict]:
        return [v.record() for v in sorted(self.violations, key=lambda v: v.index)]

    def to_text(self) -> str:
        lines = [
            f"boxes: {self.boxes}",
            f"samples: {self.samples}",
            f"defined: {self.defined}",
            f"violations: {len(self.violations)}",
        ]
        for v in sorted(self.violations, key=lambda v: v.index):
            lines.append(
                f"  #{v.index}: x={_frac_str(v.x)} y={_frac_str(v.y)} "
                f"oracle=[{_approx(v.bracket.lower)},{_approx(v.bracket.upper)}] "
                f"computed={format_interval(v.computed)}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def check_containment(xbox: Interval, ybox: Interval, n: int, seed: int,
                      cfg: EvalConfig = DEFAULT_CONFIG,
                      rng: random.Random | None = None) -> ContainmentReport:
    """Sample ``n`` rational points of the box and check each defined oracle
    value lies in ``pow_full(xbox, ybox)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    report = ContainmentReport(boxes=1)
    if xbox.is_empty or ybox.is_empty:
        return report
    computed = pow_full(xbox, ybox, cfg)
    report.kinds[(base_sign(xbox), classify_exponent(ybox).value)] += 1
    rng = rng or random.Random(seed)
    for i in range(n):
        x = sample_base(rng, xbox)
        y = sample_exponent(rng, ybox)
        report.samples += 1
        v = oracle_pow(x, y)
        if isinstance(v, Undefined):
            continue
        report.defined += 1
        ok = v.inside(computed)
        if ok is None:
            v = oracle_pow(x, y, REFINE_BITS)
            ok = v.inside(computed)
        if not ok:
            report.violations.append(Violation(i, x, y, v, computed))
    return report


def containment_suite(n: int, seed: int, cfg: EvalConfig = DEFAULT_CONFIG,
                      per_box: int = 50) -> ContainmentReport:
    """``n`` oracle checks spread over random boxes of every base and
    exponent kind, ``per_box`` samples per box."""
    rng = random.Random(seed)
    report = ContainmentReport()
    done = 0
    while done < n:
        k = min(per_box, n - done)
        xbox = random_base_box(rng)
        ybox = random_exponent_box(rng)
        report.merge(check_containment(xbox, ybox, k, seed, cfg, rng=rng))
        done += k
    return report
