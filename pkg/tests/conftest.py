from __future__ import annotations

from hypothesis import strategies as st

from rookq.polyring import LaurentPoly
from rookq.rookmodel import RookPlacement, YoungShape


@st.composite
def laurent_polys(draw, max_terms: int = 5, with_p: bool = True, laurent: bool = True):
    n = draw(st.integers(0, max_terms))
    lo = -3 if laurent else 0
    terms = {}
    for _ in range(n):
        key = (
            draw(st.integers(0, 2)) if with_p else 0,
            draw(st.integers(lo, 4)),
            draw(st.integers(0, 2)),
        )
        terms[key] = draw(st.integers(-5, 5))
    return LaurentPoly(terms)


@st.composite
def young_shapes(draw, max_n: int = 9):
    n = draw(st.integers(0, max_n))
    k = draw(st.integers(0, n))
    parts = sorted((draw(st.integers(0, n - k)) for _ in range(k)), reverse=True)
    return YoungShape(n, k, tuple(parts))


@st.composite
def rook_placements(draw, max_n: int = 9):
    shape = draw(young_shapes(max_n))
    used_cols: set[int] = set()
    rooks = []
    for row in range(shape.k):
        free = [c for c in range(shape.parts[row]) if c not in used_cols]
        if free and draw(st.booleans()):
            col = draw(st.sampled_from(free))
            used_cols.add(col)
            rooks.append((row, col))
    return RookPlacement(shape, frozenset(rooks))


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
