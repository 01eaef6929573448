import math

import pytest
from hypothesis import strategies as st

from ipow.interval import EMPTY, Interval

# lines collected by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []

finite = st.floats(allow_nan=False, allow_infinity=False)
bounds = st.floats(allow_nan=False)
small = st.floats(min_value=-64, max_value=64, allow_nan=False)


@st.composite
def intervals(draw, elements=bounds, allow_empty=True):
    if allow_empty and draw(st.integers(0, 19)) == 0:
        return EMPTY
    a, b = sorted((draw(elements), draw(elements)))
    if a == math.inf:
        a = b = draw(finite)
    if b == -math.inf:
        a = b = draw(finite)
    return Interval(a, b)


@st.composite
def exponent_intervals(draw):
    kind = draw(st.sampled_from(["range", "even", "odd", "fraction"]))
    if kind == "range":
        return draw(intervals(small, allow_empty=False).filter(lambda i: i.lo < i.hi))
    if kind == "even":
        v = float(2 * draw(st.integers(-6, 6)))
    elif kind == "odd":
        v = float(2 * draw(st.integers(-6, 5)) + 1)
    else:
        v = math.ldexp(2 * draw(st.integers(-50, 50)) + 1, -draw(st.integers(1, 8)))
    return Interval(v, v)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
