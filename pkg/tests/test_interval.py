import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bounds, intervals
from ipow.interval import (
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

INF = math.inf


@pytest.mark.parametrize("a, b, expected", [
    (Interval(1, 2), Interval(5, 6), Interval(1, 6)),
    (EMPTY, Interval(0, 1), Interval(0, 1)),
    (Interval(2, 4), Interval(-4, -2), Interval(-4, 4)),
])
def test_hull_examples(a, b, expected):
    assert hull(a, b) == expected


@pytest.mark.parametrize("a, expected", [
    (Interval(2, 4), Interval(-4, -2)),
    (Interval(-INF, 3), Interval(-3, INF)),
    (EMPTY, EMPTY),
])
def test_negate_examples(a, expected):
    assert negate(a) == expected


def test_next_up_down_examples():
    assert next_up(1.0) == 1.0 + 2.0 ** -52
    assert next_up(INF) == INF
    assert next_down(0.0) == -5e-324
    assert next_down(-INF) == -INF


@pytest.mark.parametrize("a, expected", [
    (Interval(-2, 3), Interval(0, 3)),
    (Interval(-5, -1), EMPTY),
    (Interval(1, 4), Interval(1, 4)),
])
def test_intersect_nonneg_examples(a, expected):
    assert intersect_nonneg(a) == expected


def test_invariants_enforced():
    with pytest.raises(ValueError):
        Interval(2, 1)
    with pytest.raises(ValueError):
        Interval(math.nan, 1)
    with pytest.raises(ValueError):
        Interval(INF, INF)
    with pytest.raises(ValueError):
        Interval(-INF, -INF)
    with pytest.raises(AttributeError):
        Interval(1, 2).lo = 0


def test_signed_zero_normalised():
    z = Interval(-0.0, -0.0)
    assert math.copysign(1.0, z.lo) == 1.0
    assert math.copysign(1.0, z.hi) == 1.0
    assert math.copysign(1.0, negate(Interval(0.0, 1.0)).hi) == 1.0


def test_empty_is_canonical():
    assert Interval.empty() is EMPTY
    assert parse_interval("empty") == EMPTY
    assert hull(EMPTY, EMPTY) == EMPTY
    assert EMPTY.issubset(Interval(1, 1))


def test_eval_config_rejects_negative_slack():
    with pytest.raises(ValueError):
        EvalConfig(slack_ulps=-1)


@given(intervals(), intervals(), intervals())
def test_hull_lattice_laws(a, b, c):
    assert hull(a, b) == hull(b, a)
    assert hull(hull(a, b), c) == hull(a, hull(b, c))
    assert hull(a, a) == a
    assert a.issubset(hull(a, b)) and b.issubset(hull(a, b))


@given(intervals())
def test_negate_involution(a):
    assert negate(negate(a)) == a


@given(bounds)
def test_next_up_down_bracket(v):
    assert next_down(next_up(v)) <= v <= next_up(next_down(v))


@given(intervals())
def test_intersect_nonneg_is_subset(a):
    r = intersect_nonneg(a)
    assert r.issubset(a)
    assert r.issubset(Interval(0, INF))


@pytest.mark.parametrize("text, expected", [
    ("[1,2]", Interval(1, 2)),
    ("[ -inf , 3 ]", Interval(-INF, 3)),
    ("[0x1.8p1,inf]", Interval(3, INF)),
    ("[-0x.8p0, 1e3]", Interval(-0.5, 1000)),
    ("  empty ", EMPTY),
])
def test_parse(text, expected):
    assert parse_interval(text) == expected


@pytest.mark.parametrize("text, token", [
    ("[1,x]", "x"),
    ("[nan,1]", "nan"),
    ("1,2", "1,2"),
    ("[1,2,3]", "[1,2,3]"),
    ("[3,1]", "[3,1]"),
])
def test_parse_errors_name_token(text, token):
    with pytest.raises(IntervalParseError) as info:
        parse_interval(text)
    assert info.value.token == token


@given(intervals(), st.booleans())
def test_print_parse_round_trip(a, hex_mode):
    text = format_interval(a, hex_mode)
    b = parse_interval(text)
    assert b == a
    assert format_interval(b, hex_mode) == text
