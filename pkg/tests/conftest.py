import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from mahlerkit import Poly, RatFunc  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_int = st.integers(-9, 9)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def polys(draw, max_deg=5, elems=small_int):
    return Poly(draw(st.lists(elems, max_size=max_deg + 1)))


@st.composite
def nonzero_polys(draw, max_deg=5):
    p = draw(polys(max_deg))
    return p if p else Poly([draw(st.integers(1, 9))])


@st.composite
def ratfuncs(draw, max_deg=5, regular_at_zero=False):
    num = draw(polys(max_deg))
    den = draw(nonzero_polys(max_deg))
    if regular_at_zero and den[0] == 0:
        den = den + Poly([draw(st.integers(1, 9))])
        if den.is_zero():
            den = Poly([1])
    return RatFunc(num, den)


CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "corpus")


@pytest.fixture
def corpus_dir():
    return CORPUS_DIR


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
