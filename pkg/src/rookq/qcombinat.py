"""q-analogs, Delannoy numbers and the small binomial toolkit used everywhere else."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .polyring import ONE, ZERO, LaurentPoly, exact_div, q_pow


def binom(n: int, k: int) -> int:
    """Ordinary binomial, zero whenever the arguments fall outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n, k) C(n, k-1) / n, with N(0, 0) = 1."""
    if n == 0:
        return 1 if k == 0 else 0
    return binom(n, k) * binom(n, k - 1) // n


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """[n]_q = (1 - q^n) / (1 - q); for negative n this is -q^n [-n]_q."""
    if n >= 0:
        return LaurentPoly({(0, e, 0): 1 for e in range(n)})
    return LaurentPoly({(0, e, 0): -1 for e in range(n, 0)})


@lru_cache(maxsize=None)
def qfactorial(n: int) -> LaurentPoly:
    out = ONE
    for i in range(1, n + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n choose k]_q.

    Built from the product formula one factor at a time,
    ``[n, k] = [n, k-1] (1 - q^(n-k+1)) / (1 - q^k)``, every division exact.
    Zero outside ``0 <= k <= n`` (including every negative ``n``).
    """
    if n < 0 or k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    val = ONE
    for i in range(1, k + 1):
        val = exact_div(val * (ONE - q_pow(n - i + 1)), ONE - q_pow(i))
    return val


def delannoy(n: int, k: int) -> int:
    """<n k> = C(n, k) - C(n, k-1); zero for k outside {0, ..., n+1}."""
    return binom(n, k) - binom(n, k - 1)


def dyck_left_factors(n: int, height: int) -> int:
    """Brute-force count of n-step left factors of Dyck paths ending at ``height``."""
    count = 0
    for steps in itertools.product((1, -1), repeat=n):
        h = 0
        for s in steps:
            h += s
            if h < 0:
                break
        else:
            if h == height:
                count += 1
    return count


def partition_weight_sum(rows: int, width: int, distinct_nonzero: bool = False) -> LaurentPoly:
    """Sum of q^|lambda| over Young diagrams with ``rows`` rows of length at most ``width``.

    With ``distinct_nonzero`` the parts must be strictly decreasing and positive.
    """
    terms: dict[int, int] = {}
    if distinct_nonzero:
        shapes = itertools.combinations(range(width, 0, -1), rows)
    else:
        shapes = itertools.combinations_with_replacement(range(width, -1, -1), rows)
    for parts in shapes:
        s = sum(parts)
        terms[s] = terms.get(s, 0) + 1
    return LaurentPoly({(0, e, 0): c for e, c in terms.items()})


_IDENTITY_SHIFT = {
    "id1": lambda j: j * (j + 1) // 2,
    "id2": lambda j: j * (j - 1) // 2,
    "id3": lambda j: (j - 1) * (j - 2) // 2,
}


def identity_lhs(which: str, n: int, k: int) -> LaurentPoly:
    """Alternating sum sum_j (-1)^j q^s(j) [n-j, n-k]_q [n-k, j]_q for j = 0..k."""
    try:
        shift = _IDENTITY_SHIFT[which]
    except KeyError:
        raise ValueError(f"unknown identity {which!r}") from None
    total = ZERO
    for j in range(k + 1):
        term = qbinom(n - j, n - k) * qbinom(n - k, j) * q_pow(shift(j))
        total = total - term if j % 2 else total + term
    return total


def identity_rhs(which: str, n: int, k: int) -> LaurentPoly:
    if which == "id1":
        return ONE
    if which == "id2":
        return q_pow(k * (n - k))
    if which == "id3":
        num = (
            q_pow((k + 1) * (n - k))
            - q_pow(k * (n - k))
            + q_pow(k * (n + 1 - k))
            - q_pow((k + 1) * (n + 1 - k))
        )
        return exact_div(num, q_pow(n - 1) * (ONE - q_pow(1)))
    raise ValueError(f"unknown identity {which!r}")


def _lattice_paths(start: tuple[int, int], end: tuple[int, int]):
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        return
    for east in itertools.combinations(range(dx + dy), dx):
        east = set(east)
        x, y = start
        pts = [(x, y)]
        for t in range(dx + dy):
            if t in east:
                x += 1
            else:
                y += 1
            pts.append((x, y))
        yield pts


def nonintersecting_pair_count(n: int, j: int, k: int) -> int:
    """Count vertex-disjoint N/E path pairs (0,1)->(j, n-j+1) and (1,0)->(j+k+1, n-k-j)."""
    upper = [frozenset(p) for p in _lattice_paths((0, 1), (j, n - j + 1))]
    lower = [frozenset(p) for p in _lattice_paths((1, 0), (j + k + 1, n - k - j))]
    return sum(1 for a in upper for b in lower if a.isdisjoint(b))


def binomial_determinant(n: int, j: int, k: int) -> int:
    return binom(n, j) * binom(n, j + k) - binom(n, j - 1) * binom(n, j + k + 1)
