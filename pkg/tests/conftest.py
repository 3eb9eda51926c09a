import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from trimap.series import RationalSeries  # noqa: E402
from trimap.triangle import TriangleSignature  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

REFERENCE_SIGNATURES = [(2, 3, 7), (2, 4, 5), (3, 3, 4), (5, 5, 5)]

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=12)


@st.composite
def series(draw, min_order=0, max_order=8, unit=False, vanishing=False, normalized=False):
    order = draw(st.integers(min_order, max_order))
    cs = draw(st.lists(small_fractions, min_size=order + 1, max_size=order + 1))
    if unit and cs[0] == 0:
        cs[0] = Fraction(1)
    if vanishing or normalized:
        cs[0] = Fraction(0)
    if normalized and order >= 1:
        cs[1] = Fraction(1)
    return RationalSeries(cs, order)


def signatures(max_entry=9):
    triples = [
        (m, n, p)
        for m in range(2, max_entry + 1)
        for n in range(2, max_entry + 1)
        for p in range(2, max_entry + 1)
        if Fraction(1, m) + Fraction(1, n) + Fraction(1, p) < 1
    ]
    return st.sampled_from(triples).map(lambda t: TriangleSignature(*t))


@pytest.fixture(params=REFERENCE_SIGNATURES, ids=lambda t: "%d-%d-%d" % t)
def reference_signature(request):
    return TriangleSignature(*request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
