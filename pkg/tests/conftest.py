import pytest
from hypothesis import strategies as st

from ogschubert.tableaux import Tableau

# Shifted tableau of shape (4,3,2,1) and its doubled 4x5 symmetrical tableau.
SHIFTED_DELTA4_ROWS = ((1, 2, 4, 5), (3, 6, 8), (7, 9), (10,))
SYMMETRICAL_4X5_ROWS = (
    (1, 2, 4, 8, 10),
    (3, 5, 6, 12, 16),
    (7, 11, 13, 14, 18),
    (9, 15, 17, 19, 20),
)


@pytest.fixture
def shifted_delta4():
    return Tableau.from_rows(SHIFTED_DELTA4_ROWS, shifted=True)


@pytest.fixture
def symmetrical_4x5():
    return Tableau.from_rows(SYMMETRICAL_4X5_ROWS)


@st.composite
def partitions(draw, max_size=8, max_rows=5):
    total = draw(st.integers(0, max_size))
    parts = []
    while total > 0 and len(parts) < max_rows:
        cap = min(total, parts[-1] if parts else total)
        p = draw(st.integers(1, cap))
        parts.append(p)
        total -= p
    return tuple(parts)


@st.composite
def strict_partitions_st(draw, n=4):
    chosen = draw(st.sets(st.integers(1, n)))
    return tuple(sorted(chosen, reverse=True))
