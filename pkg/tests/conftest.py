import pytest
from hypothesis import strategies as st

from parabolic_goodness import DimVector, WeightType, validate

# criterion lines collected by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


def vec(rank, *rows, w=None):
    """Shorthand: ``vec(2, [1], [1])`` infers w_i = len(row) + 1."""
    wt = WeightType(tuple(len(r) + 1 for r in rows) if w is None else w)
    return validate(rank, rows, wt)


@st.composite
def weight_types(draw, max_points=3, max_len=4):
    ws = draw(st.lists(st.integers(1, max_len), max_size=max_points))
    return WeightType(tuple(ws))


@st.composite
def dim_vectors(draw, wt, min_rank=0, max_rank=6):
    rank = draw(st.integers(min_rank, max_rank))
    rows = []
    for n in wt.row_lengths():
        entries = draw(st.lists(st.integers(0, rank), min_size=n, max_size=n))
        rows.append(sorted(entries, reverse=True))
    return DimVector(rank, tuple(map(tuple, rows)), wt)


@st.composite
def vectors_sharing_type(draw, count, min_rank=0, max_rank=6, max_points=3, max_len=4):
    wt = draw(weight_types(max_points, max_len))
    return [draw(dim_vectors(wt, min_rank, max_rank)) for _ in range(count)]


@pytest.fixture
def v():
    return vec


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
