import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import finite
from ipow.exponent import (
    ExponentClass,
    ExponentError,
    RationalClass,
    classify_exponent,
    classify_rational,
    decompose,
)
from ipow.interval import EMPTY, Interval, format_interval, parse_interval

E = ExponentClass


def single(v):
    return Interval(v, v)


@pytest.mark.parametrize("y, expected", [
    (single(4.0), E.SINGLETON_EVEN_INTEGER),
    (single(0.5), E.SINGLETON_NON_INTEGER_DYADIC),
    (Interval(1, 2), E.NON_SINGLETON),
    (single(2.0 ** 53 + 2), E.SINGLETON_EVEN_INTEGER),
    (single(0.0), E.SINGLETON_EVEN_INTEGER),
    (single(-3.0), E.SINGLETON_ODD_INTEGER),
    (single(2.0 ** 53 - 1), E.SINGLETON_ODD_INTEGER),
    (single(5e-324), E.SINGLETON_NON_INTEGER_DYADIC),
    (Interval(-math.inf, 0), E.NON_SINGLETON),
    (Interval(0.5, math.nextafter(0.5, 1)), E.NON_SINGLETON),
])
def test_classify_exponent_examples(y, expected):
    assert classify_exponent(y) is expected


def test_two_pow_53_plus_2_is_even_by_exact_decomposition():
    v = 2.0 ** 53 + 2
    num, den = v.as_integer_ratio()
    assert den == 1 and num == 2 ** 53 + 2 and num % 2 == 0


def test_classify_exponent_errors():
    with pytest.raises(ExponentError, match="empty exponent"):
        classify_exponent(EMPTY)
    with pytest.raises(ExponentError, match="infinite singleton exponent"):
        classify_exponent(Interval._raw(math.inf, math.inf))


@pytest.mark.parametrize("p, q, expected", [
    (2, 3, RationalClass.EVEN_OVER_ODD),
    (3, 5, RationalClass.ODD_OVER_ODD),
    (1, 2, RationalClass.ODD_OVER_EVEN),
    (0, 1, RationalClass.EVEN_OVER_ODD),
    (-3, 7, RationalClass.ODD_OVER_ODD),
    (-4, 1, RationalClass.EVEN_OVER_ODD),
])
def test_classify_rational_examples(p, q, expected):
    assert classify_rational(p, q) is expected


@pytest.mark.parametrize("p, q", [(1, 0), (2, 4), (0, 2), (3, -5)])
def test_classify_rational_rejects_non_reduced(p, q):
    with pytest.raises(ValueError, match="not an irreducible fraction"):
        classify_rational(p, q)


_TO_EXPONENT_CLASS = {
    RationalClass.EVEN_OVER_ODD: E.SINGLETON_EVEN_INTEGER,
    RationalClass.ODD_OVER_ODD: E.SINGLETON_ODD_INTEGER,
    RationalClass.ODD_OVER_EVEN: E.SINGLETON_NON_INTEGER_DYADIC,
}


def _agree(v):
    p, q = v.as_integer_ratio()
    expected = _TO_EXPONENT_CLASS[classify_rational(p, q)]
    # denominators of binary64 values are powers of two, so odd means 1
    assert q == 1 or q % 2 == 0
    assert classify_exponent(single(v)) is expected


BOUNDARY = [0.0, 1.0, -1.0, 2.0, -2.0, 2.0 ** 52 - 1, 2.0 ** 52 + 1, 2.0 ** 52,
            2.0 ** 53, -(2.0 ** 53), 2.0 ** 53 + 2, 2.0 ** 52 + 0.5, 5e-324,
            -5e-324, 2.2250738585072014e-308, 2.225073858507201e-308,
            1.7976931348623157e308, 0.5, 1.5, -2.5, 3.0, 1e300, 1e-300]


@pytest.mark.parametrize("v", BOUNDARY)
def test_bit_classification_agrees_with_rational_boundary(v):
    _agree(v)
    _agree(-v)


def test_bit_classification_agrees_with_rational_random():
    rng = random.Random(2024)
    for _ in range(20000):
        kind = rng.randrange(3)
        if kind == 0:
            v = float(rng.randint(-2 ** 60, 2 ** 60))
        elif kind == 1:
            v = math.ldexp(rng.randint(-2 ** 53, 2 ** 53), rng.randint(-60, 10))
        else:
            v = math.ldexp(rng.random(), rng.randint(-1074, 1024))
        if math.isfinite(v):
            _agree(v)


@given(finite)
def test_bit_classification_agrees_with_rational_hypothesis(v):
    _agree(v)


@given(finite)
def test_decompose_is_exact(v):
    m, e = decompose(v)
    assert Fraction(m) * Fraction(2) ** e == Fraction(v)


@given(finite, st.booleans())
def test_classification_survives_text_round_trip(v, hex_mode):
    y = single(v)
    again = parse_interval(format_interval(y, hex_mode))
    assert classify_exponent(again) is classify_exponent(y)


@given(finite)
def test_no_odd_denominator_beyond_integers(v):
    # every non-integer finite binary64 is k/2^j with odd k: never "odd/odd"
    # or "even/odd" with denominator > 1
    cls = classify_exponent(single(v))
    if cls is not E.SINGLETON_NON_INTEGER_DYADIC:
        assert v == math.floor(v)
