from fractions import Fraction

import pytest
from hypothesis import strategies as st

from isotori.catalog import CATALOG
from isotori.ratmath import RatMat


def rationals(lo=-3, hi=3, max_den=4):
    return st.builds(lambda n, d: Fraction(n, d),
                     st.integers(lo * max_den, hi * max_den), st.integers(1, max_den))


@st.composite
def rat_matrices(draw, max_rows=5, max_cols=4, min_rows=0, min_cols=0):
    r = draw(st.integers(min_rows, max_rows))
    c = draw(st.integers(min_cols, max_cols))
    rows = draw(st.lists(st.lists(rationals(), min_size=c, max_size=c), min_size=r, max_size=r))
    return RatMat(tuple(tuple(row) for row in rows), c)


@pytest.fixture(params=list(CATALOG), ids=list(CATALOG))
def catalog_spec(request):
    return CATALOG[request.param].spec


def spec_by_name(name):
    return CATALOG[name].spec


# one "PASS/FAIL criterion: detail" line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
