"""Young diagrams, rook placements and the T_{j,k,n} generating functions.

Conventions (French): rows are indexed bottom to top, columns left to right,
both from 0.  ``parts[r]`` is the length of row ``r`` so ``parts`` is weakly
decreasing.  The North-East boundary is read from the top-left corner; an
``E`` step tops a column and an ``S`` step closes a row on the right.  In
operator language ``E`` is D-hat and ``S`` is E-hat.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .polyring import ONE, P, ZERO, LaurentPoly, q_pow, y_pow
from .qcombinat import qint


@dataclass(frozen=True)
class YoungShape:
    n: int
    k: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if len(self.parts) != self.k:
            raise ValueError(f"expected {self.k} parts, got {len(self.parts)}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")
        if self.parts and (self.parts[-1] < 0 or self.parts[0] > self.n - self.k):
            raise ValueError(f"parts must lie in [0, {self.n - self.k}]: {self.parts}")

    @property
    def columns(self) -> int:
        return self.n - self.k

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contains(self, row: int, col: int) -> bool:
        return 0 <= row < self.k and 0 <= col < self.parts[row]

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield r, c

    def column_height(self, col: int) -> int:
        return sum(1 for length in self.parts if length > col)

    def boundary_word(self) -> str:
        word = []
        prev = 0
        for r in range(self.k - 1, -1, -1):
            word.append("E" * (self.parts[r] - prev))
            word.append("S")
            prev = self.parts[r]
        word.append("E" * (self.columns - prev))
        return "".join(word)

    @classmethod
    def from_word(cls, word: str) -> YoungShape:
        """Shape lambda(w): read left to right, E for D-hat (east), S for E-hat (south)."""
        if set(word) - {"E", "S"}:
            raise ValueError(f"boundary word must use E and S only: {word!r}")
        k = word.count("S")
        parts = []
        width = 0
        for letter in word:
            if letter == "E":
                width += 1
            else:
                parts.append(width)
        return cls(len(word), k, tuple(reversed(parts)))

    def is_dyck(self) -> bool:
        """The i-th row from the top has at least i cells, for every i."""
        return all(self.parts[self.k - i] >= i for i in range(1, self.k + 1))

    def literal(self) -> str:
        return f"n={self.n},k={self.k},parts={','.join(map(str, self.parts))}"

    @classmethod
    def parse(cls, text: str) -> YoungShape:
        """Parse ``"n=7,k=3,parts=4,2,1"``; errors name the offending offset."""
        sc = _Scanner(text)
        sc.expect("n=")
        n = sc.integer()
        sc.expect(",k=")
        k = sc.integer()
        sc.expect(",parts=")
        parts = []
        if not sc.done():
            parts.append(sc.integer())
            while not sc.done():
                sc.expect(",")
                parts.append(sc.integer())
        return cls(n, k, tuple(parts))


class LiteralError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text.strip()
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.text)

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise LiteralError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def integer(self) -> int:
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise LiteralError("expected a nonnegative integer", self.pos)
        self.pos = m.end()
        return int(m.group())


def parse_rooks(text: str) -> frozenset:
    """Parse ``"(row,col),(row,col)"``; the empty string is the empty placement."""
    sc = _Scanner(text)
    rooks = []
    while not sc.done():
        if rooks:
            sc.expect(",")
        sc.expect("(")
        row = sc.integer()
        sc.expect(",")
        col = sc.integer()
        sc.expect(")")
        rooks.append((row, col))
    return frozenset(rooks)


def rooks_literal(rooks) -> str:
    return ",".join(f"({r},{c})" for r, c in sorted(rooks))


def shapes(n: int, k: int) -> Iterator[YoungShape]:
    """All of Par(n-k, k)."""
    for parts in itertools.combinations_with_replacement(range(n - k, -1, -1), k):
        yield YoungShape(n, k, parts)


def all_shapes(n: int) -> Iterator[YoungShape]:
    for k in range(n + 1):
        yield from shapes(n, k)


@dataclass(frozen=True)
class RookPlacement:
    shape: YoungShape
    rooks: frozenset

    def __post_init__(self):
        object.__setattr__(self, "rooks", frozenset(self.rooks))
        rows = [r for r, _ in self.rooks]
        cols = [c for _, c in self.rooks]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("two rooks share a row or a column")
        for r, c in self.rooks:
            if not self.shape.contains(r, c):
                raise ValueError(f"rook {(r, c)} lies outside the shape")

    def row_rooks(self) -> dict[int, int]:
        return {r: c for r, c in self.rooks}

    def col_rooks(self) -> dict[int, int]:
        return {c: r for r, c in self.rooks}


def crosses(r: RookPlacement) -> int:
    """Cells with no rook above them in their column and no rook to their right in their row."""
    in_row = r.row_rooks()
    in_col = r.col_rooks()
    count = 0
    for row, col in r.shape.cells():
        rc = in_row.get(row)
        if rc is not None and rc >= col:
            continue
        cr = in_col.get(col)
        if cr is not None and cr > row:
            continue
        count += 1
    return count


def weight(r: RookPlacement) -> LaurentPoly:
    return LaurentPoly.monomial(1, ep=len(r.rooks), eq=crosses(r))


def enumerate_placements(shape: YoungShape) -> Iterator[RookPlacement]:
    """Every placement of ``shape`` once; row by row, "no rook" first, then columns ascending."""
    used: set[int] = set()
    chosen: list[tuple[int, int]] = []

    def rec(row: int):
        if row == shape.k:
            yield RookPlacement(shape, frozenset(chosen))
            return
        yield from rec(row + 1)
        for col in range(shape.parts[row]):
            if col in used:
                continue
            used.add(col)
            chosen.append((row, col))
            yield from rec(row + 1)
            chosen.pop()
            used.discard(col)

    yield from rec(0)


def placement_sum(shape: YoungShape) -> LaurentPoly:
    """Sum of weights of all placements of ``shape``."""
    acc: dict[tuple[int, int, int], int] = {}
    for pl in enumerate_placements(shape):
        key = (len(pl.rooks), crosses(pl), 0)
        acc[key] = acc.get(key, 0) + 1
    return LaurentPoly(acc)


@lru_cache(maxsize=None)
def _brute_table(n: int) -> dict[tuple[int, int], LaurentPoly]:
    # (j, k) -> T_{j,k,n}, one pass over every placement of half-perimeter n
    acc: dict[tuple[int, int], dict] = {}
    for shape in all_shapes(n):
        for pl in enumerate_placements(shape):
            rooks = len(pl.rooks)
            key = (shape.k - rooks, shape.k)
            bucket = acc.setdefault(key, {})
            mono = (rooks, crosses(pl), 0)
            bucket[mono] = bucket.get(mono, 0) + 1
    return {key: LaurentPoly(b) for key, b in acc.items()}


def t_brute(j: int, k: int, n: int) -> LaurentPoly:
    """T_{j,k,n} by exhaustive enumeration of rook placements."""
    if n < 0:
        return ZERO
    return _brute_table(n).get((j, k), ZERO)


@lru_cache(maxsize=None)
def t_rec(j: int, k: int, n: int) -> LaurentPoly:
    """T_{j,k,n} = T_{j-1,k-1,n-1} + q^j T_{j,k,n-1} + p [j+1]_q T_{j+1,k,n-1}."""
    if j < 0 or k < 0 or j > k or k > n:
        return ZERO
    if n == 0:
        return ONE
    return (
        t_rec(j - 1, k - 1, n - 1)
        + q_pow(j) * t_rec(j, k, n - 1)
        + P * qint(j + 1) * t_rec(j + 1, k, n - 1)
    )


@lru_cache(maxsize=None)
def t0_rec(k: int, n: int) -> LaurentPoly:
    """T_{0,k,n} = T_{0,k,n-1} + p [n+1-2k]_q T_{0,k-1,n-1}."""
    if k < 0 or n < 0:
        return ZERO
    if n == 0:
        return ONE if k == 0 else ZERO
    return t0_rec(k, n - 1) + P * qint(n + 1 - 2 * k) * t0_rec(k - 1, n - 1)


def dyck_full_placement(shape: YoungShape) -> RookPlacement | None:
    """The unique cross-free placement with a rook in every row, if the boundary is Dyck.

    Repeatedly putting rooks in the corners of what is left is the same as
    matching each S of the boundary word with the nearest unmatched E before it.
    """
    open_cols: list[int] = []
    rooks = []
    col = 0
    row = shape.k - 1
    for letter in shape.boundary_word():
        if letter == "E":
            open_cols.append(col)
            col += 1
        else:
            if not open_cols:
                return None
            rooks.append((row, open_cols.pop()))
            row -= 1
    return RookPlacement(shape, frozenset(rooks))


def t_kn(k: int, n: int, method: str = "brute") -> LaurentPoly:
    source = t_brute if method == "brute" else t_rec
    total = ZERO
    for j in range(k + 1):
        total = total + source(j, k, n)
    return total


def t_full(n: int, method: str = "brute") -> LaurentPoly:
    """T_n(p, q, y) = sum_k y^k T_{k,n}."""
    total = ZERO
    for k in range(n + 1):
        total = total + y_pow(k) * t_kn(k, n, method)
    return total
