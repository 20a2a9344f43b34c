"""Closed forms for the specialized rook polynomials and the 13-2 generating function.

Each formula is transcribed directly from its displayed sum, with no
algebraic simplification, so a disagreement with the enumeration oracles
points at the transcription.  Divisions are exact or raise
:class:`~rookq.polyring.NonDivisible`.

Index convention.  The canonical object is ``value = sum_sigma y^asc(sigma)
q^occ(sigma)``, the polynomial <W|(yD+E)^(n-1)|V>.  The coefficient formula
and the two formulas quoted from the literature are naturally indexed by the
y-prefixed polynomial ``y * value`` (whose y exponent is asc + 1); they are
exposed with that shift made explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .polyring import ONE, Q, Y, ZERO, LaurentPoly, NonDivisible, exact_div, q_pow
from .qcombinat import binom, catalan, delannoy, qbinom, qint


def _signed(k: int, val):
    return -val if k % 2 else val


def p_k(k: int) -> LaurentPoly:
    """P_k = sum_{i=0}^k y^i q^(i(k+1-i))."""
    return LaurentPoly({(0, i * (k + 1 - i), i): 1 for i in range(k + 1)})


def t0kn_closed(k: int, n: int) -> LaurentPoly:
    """T_{0,k,n}(1-q, q) as the alternating q-binomial / Delannoy sum."""
    total = ZERO
    for i in range(k + 1):
        term = q_pow(i * (i + 1) // 2) * qbinom(n - 2 * k + i, i) * delannoy(n, k - i)
        total = total + _signed(i, term)
    return total


def tjkn_closed(j: int, k: int, n: int) -> LaurentPoly:
    """T_{j,k,n}(1-q, q)."""
    if j > k:
        raise ValueError(f"need j <= k, got j={j}, k={k}")
    m = n - 2 * k + 2 * j
    total = ZERO
    for i in range(k - j + 1):
        term = q_pow(i * (i + 1) // 2) * qbinom(m + i, i) * delannoy(n, k - j - i)
        total = total + _signed(i, term)
    return qbinom(m, j) * total


def tkn_special(variant: str, k: int, n: int) -> LaurentPoly:
    """T_{k,n} at p = 1-q (A), p = (1-q)/q (B) or p = (1-q)/q^2 (C).

    For B the summand is <n j> q^((k-j)(n-k-j) - j).  The extra q^-j comes
    from the rescaling q^(j-k) of T_{j,k,n}; variant ``"B_printed"`` omits it
    and is kept only to show the disagreement (it fails already at k=n=2).
    """
    if variant == "A":
        return LaurentPoly.const(binom(n, k))
    if variant in ("B", "B_printed"):
        shift = 0 if variant == "B_printed" else 1
        total = ZERO
        for j in range(k + 1):
            total = total + delannoy(n, j) * q_pow((k - j) * (n - k - j) - shift * j)
        return total
    if variant == "C":
        den = (ONE - Q) * q_pow(n)
        total = ZERO
        for j in range(k + 1):
            num = (
                q_pow((k + 1 - j) * (n - k - j))
                - q_pow((k - j) * (n - k - j))
                + q_pow((k - j) * (n + 1 - k - j))
                - q_pow((k + 1 - j) * (n + 1 - k - j))
            )
            total = total + delannoy(n, j) * exact_div(num, den)
        return total
    raise ValueError(f"unknown variant {variant!r}; expected A, B, B_printed or C")


def g_poly(n: int) -> LaurentPoly:
    """y * G(n).

    G(n) carries a y^-1 term (i = j = 0), so the ring keeps it shifted by one
    power of y.  Every identity involving G is stated here for y * G.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = ZERO
    for j in range(n // 2 + 1):
        d = delannoy(n, j)
        if not d:
            continue
        inner = LaurentPoly(
            {(0, i * (n + 1 - 2 * j - i), i + j): 1 for i in range(n - 2 * j + 1)}
        )
        total = total + d * inner
    return total


def t_n_via_g(n: int) -> LaurentPoly:
    """T_n((1-q)/q^2, q, y) from (1+y) G(n) - G(n+1) over (1-q) q^n."""
    num = (ONE + Y) * g_poly(n) - g_poly(n + 1)
    return exact_div(num, (ONE - Q) * q_pow(n) * Y)


@dataclass(frozen=True)
class GrandPolynomial:
    """<W|(yD+E)^(n-1)|V> = sum over permutations of size n of y^asc q^occ(13-2)."""

    n: int
    value: LaurentPoly

    @property
    def prefixed(self) -> LaurentPoly:
        """The same polynomial times y, so the y exponent reads asc + 1."""
        return self.value * Y

    def at_y1(self) -> LaurentPoly:
        return self.value.substitute_y(ONE)

    def coeff(self, m: int) -> LaurentPoly:
        return self.value.coeff_y(m)


def _delta(n: int, j: int, k: int) -> int:
    return binom(n, j) * binom(n, j + k) - binom(n, j - 1) * binom(n, j + k + 1)


def grand_formula(n: int) -> GrandPolynomial:
    if n < 1:
        raise ValueError("n must be at least 1")
    total = ZERO
    for k in range(n + 1):
        left = LaurentPoly({(0, 0, j): _delta(n, j, k) for j in range(n - k + 1)})
        total = total + _signed(k, left * p_k(k))
    return GrandPolynomial(n, exact_div(total, Y * (ONE - Q) ** n))


def grand_formula_y1(n: int) -> LaurentPoly:
    if n < 1:
        raise ValueError("n must be at least 1")
    total = ZERO
    for k in range(n + 1):
        c = binom(2 * n, n - k) - binom(2 * n, n - k - 2)
        total = total + _signed(k, c * p_k(k).substitute_y(ONE))
    return exact_div(total, (ONE - Q) ** n)


def coeff_formula(m: int, n: int, prefixed: bool = False) -> LaurentPoly:
    """Coefficient of y^m from the expanded double sum.

    The raw double sum at index ``m`` is the y^m coefficient of the prefixed
    polynomial, so by default it is evaluated at ``m + 1`` to give the y^m
    coefficient of ``grand_formula(n).value``.
    """
    idx = m if prefixed else m + 1
    total = ZERO
    for k in range(n + 1):
        for j in range(idx - k, idx + 1):
            d = _delta(n, j, k)
            if d:
                total = total + _signed(k, d * q_pow((idx - j) * (k + j + 1 - idx)))
    return exact_div(total, (ONE - Q) ** n)


def williams_coeff(k: int, n: int) -> LaurentPoly:
    """sum_{i<k} (-1)^i [k-i]^n q^(ki-k^2) (C(n,i) q^(k-i) + C(n,i-1)).

    This is the y^k coefficient of the prefixed polynomial, i.e. the y^(k-1)
    coefficient of ``grand_formula(n).value``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = ZERO
    for i in range(k):
        term = (
            qint(k - i) ** n
            * q_pow(k * i - k * k)
            * (binom(n, i) * q_pow(k - i) + binom(n, i - 1))
        )
        total = total + _signed(i, term)
    return total


_Q10 = (
    1, 70, 2093, 32354, 228543, -318990, -17493961, -104051458,
    -6828164, 2022876520, 6310831968, 5832578304, 14397419520, 5748019200,
)  # fmt: skip


def _exact_quotient(num: int, den: int) -> int:
    qt, r = divmod(num, den)
    if r:
        raise NonDivisible(f"{num} is not divisible by {den}")
    return qt


def taylor_coeff(m: int, n: int) -> int:
    """[q^m] of the y = 1 polynomial from the low order Taylor formulas."""
    if m == 0:
        return catalan(n)
    if m == 1:
        return binom(2 * n, n - 3)
    if m == 2:
        return _exact_quotient(n * binom(2 * n, n - 4), 2)
    if m == 3:
        return _exact_quotient((n + 1) * (n + 2) * binom(2 * n, n - 5), 6)
    if m == 10:
        if n < 8:
            raise ValueError("the degree 10 formula needs n >= 8")
        poly = sum(c * n ** (13 - e) for e, c in enumerate(_Q10))
        den = math.factorial(10) * math.factorial(n + 12) * math.factorial(n - 8)
        return _exact_quotient(math.factorial(2 * n) * poly, den)
    raise ValueError(f"no closed form for m={m}; supported: 0, 1, 2, 3, 10")


def low_q_y_coeffs(which: str, m: int, n: int) -> int:
    """[q y^m] ("q1") or [q^2 y^m] ("q2") of the prefixed polynomial."""
    if which == "q1":
        return binom(n, m + 1) * binom(n, m - 2)
    if which == "q2":
        num = binom(n + 1, m - 2) * binom(n + 1, m + 2) * (n * m + m - m * m - 4)
        return _exact_quotient(num, 2 * (n + 1))
    raise ValueError(f"unknown coefficient family {which!r}; expected q1 or q2")


def touchard_riordan(n: int) -> LaurentPoly:
    """sum over perfect matchings of 2n points of q^crossings, in closed form."""
    total = ZERO
    for k in range(n + 1):
        c = binom(2 * n, n - k) - binom(2 * n, n - k - 1)
        total = total + _signed(k, c * q_pow(k * (k + 1) // 2))
    return exact_div(total, (ONE - Q) ** n)

