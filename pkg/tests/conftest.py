import random

import pytest
from hypothesis import strategies as st

from rioarray.exact import ZZ, PolyR
from rioarray.riordan import RiordanArray
from rioarray.series import Series

small_ints = st.integers(min_value=-20, max_value=20)
polys = st.lists(small_ints, max_size=6).map(PolyR)
fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def random_array(rng: random.Random, order: int) -> RiordanArray:
    """Integer Riordan array with unit d(0) and h'(0), so it is invertible over ZZ."""
    d = [rng.choice((1, -1))] + [rng.randint(-3, 3) for _ in range(order)]
    h = [0, rng.choice((1, -1))] + [rng.randint(-3, 3) for _ in range(order - 1)]
    return RiordanArray(Series(d, order, ZZ), Series(h, order, ZZ))


@st.composite
def arrays(draw, order=8):
    d = [draw(st.sampled_from((1, -1)))] + draw(st.lists(st.integers(-3, 3), min_size=order, max_size=order))
    h = [0, draw(st.sampled_from((1, -1)))] + draw(
        st.lists(st.integers(-3, 3), min_size=order - 1, max_size=order - 1))
    return RiordanArray(Series(d, order, ZZ), Series(h, order, ZZ))


# acceptance summary: one line per criterion at the end of the run
_ACCEPTANCE = {}


def record_criterion(number: int, title: str, ok: bool) -> None:
    prev = _ACCEPTANCE.get(number)
    _ACCEPTANCE[number] = (title, ok and (prev is None or prev[1]))


@pytest.fixture
def criterion():
    return record_criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}")
