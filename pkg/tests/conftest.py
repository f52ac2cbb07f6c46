import random

import pytest
from hypothesis import strategies as st

from mincw.codes import LinearCode, extended_hamming
from mincw.gf2 import BitMatrix, rank


def span_set(rows):
    """Row space by brute force: every subset sum."""
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return out


@st.composite
def matrices(draw, max_rows=6, max_cols=10):
    cols = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=0, max_size=max_rows))
    return BitMatrix(cols, tuple(rows))


@st.composite
def codes(draw, max_n=12, max_k=6):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, min(n, max_k)))
    rows = draw(
        st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k).filter(
            lambda rs: rank(rs) == k
        )
    )
    return LinearCode.from_rows(n, rows)


@pytest.fixture
def hamming():
    return extended_hamming()


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
