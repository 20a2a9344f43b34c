"""Permutation statistics and Laguerre histories.

Three independent descriptions of the same generating function:
ascents with the vincular pattern 13-2, weak excedances with crossings,
and weighted Motzkin paths ("Laguerre histories").
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from .bijections import NE, SE, E, Step, WeightedMotzkinPath
from .polyring import ONE, ZERO, Y, LaurentPoly
from .qcombinat import qint


@dataclass(frozen=True)
class Permutation:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise ValueError(f"not a permutation of 1..n: {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """One-line notation, either ``"132"`` (n < 10) or ``"1,3,2"``."""
        parts = text.split(",") if "," in text else list(text)
        return cls(tuple(int(x) for x in parts))


def permutations(n: int) -> Iterator[Permutation]:
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def _vals(s) -> tuple:
    return s.values if isinstance(s, Permutation) else tuple(s)


def ascents(s) -> int:
    v = _vals(s)
    return sum(1 for a, b in zip(v, v[1:]) if a < b)


def occ_13_2(s) -> int:
    """Pairs (i, j), j > i+1, with s(i) < s(j) < s(i+1)."""
    v = _vals(s)
    n = len(v)
    return sum(1 for i in range(n - 1) for j in range(i + 2, n) if v[i] < v[j] < v[i + 1])


def occ_1_3_2(s) -> int:
    """Classical occurrences i < j < k with s(i) < s(k) < s(j)."""
    v = _vals(s)
    return sum(1 for a, b, c in itertools.combinations(v, 3) if a < c < b)


def weak_excedances(s) -> int:
    v = _vals(s)
    return sum(1 for i, x in enumerate(v, start=1) if x >= i)


def perm_crossings(s) -> int:
    v = _vals(s)
    n = len(v)
    count = 0
    for i in range(1, n + 1):
        si = v[i - 1]
        for j in range(i + 1, n + 1):
            sj = v[j - 1]
            if i < j <= si < sj or si < sj < i < j:
                count += 1
    return count


def _fold(items) -> LaurentPoly:
    acc: dict = {}
    for ey, eq in items:
        acc[(0, eq, ey)] = acc.get((0, eq, ey), 0) + 1
    return LaurentPoly(acc)


def ascent_pattern_gf(n: int) -> LaurentPoly:
    """Sum over S_n of y^(asc + 1) q^occ(13-2)."""
    return _fold((ascents(s) + 1, occ_13_2(s)) for s in permutations(n))


def excedance_crossing_gf(n: int) -> LaurentPoly:
    """Sum over S_n of y^wex q^cr."""
    return _fold((weak_excedances(s), perm_crossings(s)) for s in permutations(n))


def laguerre_histories(n: int) -> Iterator[WeightedMotzkinPath]:
    """Every Laguerre history with n steps, one path per choice of step weight.

    At height h: NE weighs q^i, 0 <= i <= h; SE weighs y q^i, 0 <= i < h;
    E weighs q^i with 0 <= i < h or y q^i with 0 <= i <= h.
    """
    steps: list[Step] = []

    def rec(h: int):
        left = n - len(steps)
        if left == 0:
            if h == 0:
                yield WeightedMotzkinPath(tuple(steps))
            return
        if h + 1 <= left - 1:
            for i in range(h + 1):
                steps.append(Step(NE, i))
                yield from rec(h + 1)
                steps.pop()
        if h <= left - 1:
            for i in range(h):
                steps.append(Step(E, i))
                yield from rec(h)
                steps.pop()
            for i in range(h + 1):
                steps.append(Step(E, i, 1, 1))
                yield from rec(h)
                steps.pop()
        if h > 0:
            for i in range(h):
                steps.append(Step(SE, i, 1, 1))
                yield from rec(h - 1)
                steps.pop()

    yield from rec(0)


def laguerre_moment(n: int) -> LaurentPoly:
    """Weight sum of n-step Laguerre histories, by a transfer over heights."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    level = {0: ONE}
    for _ in range(n):
        nxt: dict[int, LaurentPoly] = {}
        for h, w in level.items():
            moves = [(h + 1, qint(h + 1)), (h, qint(h) + Y * qint(h + 1))]
            if h > 0:
                moves.append((h - 1, Y * qint(h)))
            for target, factor in moves:
                nxt[target] = nxt.get(target, ZERO) + w * factor
        level = nxt
    return level.get(0, ZERO)


def laguerre_moment_by_paths(n: int) -> LaurentPoly:
    total = ZERO
    for path in laguerre_histories(n):
        total = total + path.weight()
    return total
