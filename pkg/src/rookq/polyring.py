"""Sparse Laurent polynomials in ``q`` with polynomial variables ``p`` and ``y``.

Every value is stored as a map from an exponent triple ``(ep, eq, ey)`` to a
nonzero Python integer.  ``ep`` and ``ey`` are nonnegative, ``eq`` may be
negative.  Zero terms are dropped on construction, so two polynomials are
equal exactly when their term maps are equal.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Union

Exponent = tuple[int, int, int]
Coercible = Union["LaurentPoly", int]


class NonDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for (ep, eq, ey), c in items:
            if ep < 0 or ey < 0:
                raise ValueError(f"negative exponent of p or y: {(ep, eq, ey)}")
            if c:
                key = (ep, eq, ey)
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> LaurentPoly:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c: int = 1, ep: int = 0, eq: int = 0, ey: int = 0) -> LaurentPoly:
        return cls({(ep, eq, ey): c})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic

    def __add__(self, other: Coercible) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Coercible) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a0, a1, a2), ca in self._terms.items():
            for (b0, b1, b2), cb in other._terms.items():
                k = (a0 + b0, a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            raise ValueError("negative powers are not polynomial")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, ep: int = 0, eq: int = 0, ey: int = 0) -> LaurentPoly:
        """Multiply by the monomial p^ep q^eq y^ey."""
        return LaurentPoly({(a + ep, b + eq, c + ey): v for (a, b, c), v in self._terms.items()})

    # queries

    def is_zero(self) -> bool:
        return not self._terms

    def has_p(self) -> bool:
        return any(k[0] for k in self._terms)

    def has_y(self) -> bool:
        return any(k[2] for k in self._terms)

    def min_q(self) -> int:
        return min(k[1] for k in self._terms)

    def max_q(self) -> int:
        return max(k[1] for k in self._terms)

    def max_y(self) -> int:
        return max(k[2] for k in self._terms)

    def is_polynomial(self) -> bool:
        """True when no term carries a negative power of q."""
        return all(k[1] >= 0 for k in self._terms)

    def coefficients_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def constant_term(self) -> int:
        return self._terms.get((0, 0, 0), 0)

    # specializations

    def substitute_p(self, value: Coercible) -> LaurentPoly:
        value = _coerce(value)
        if value.has_p():
            raise ValueError("substituted value must not contain p")
        groups: dict[int, dict[Exponent, int]] = {}
        for (ep, eq, ey), c in self._terms.items():
            groups.setdefault(ep, {})[(0, eq, ey)] = c
        result = ZERO
        power = ONE
        for e in range(max(groups, default=-1) + 1):
            if e in groups:
                result = result + LaurentPoly._raw(groups[e]) * power
            power = power * value
        return result

    def substitute_y(self, value: Coercible) -> LaurentPoly:
        value = _coerce(value)
        if value.has_y():
            raise ValueError("substituted value must not contain y")
        groups: dict[int, dict[Exponent, int]] = {}
        for (ep, eq, ey), c in self._terms.items():
            groups.setdefault(ey, {})[(ep, eq, 0)] = c
        result = ZERO
        power = ONE
        for e in range(max(groups, default=-1) + 1):
            if e in groups:
                result = result + LaurentPoly._raw(groups[e]) * power
            power = power * value
        return result

    def at_q(self, value: int) -> LaurentPoly:
        """Evaluate q at an integer; negative q-powers need value in {1, -1}."""
        out: dict[Exponent, int] = {}
        for (ep, eq, ey), c in self._terms.items():
            if eq < 0:
                if value not in (1, -1):
                    raise ValueError(f"cannot evaluate q^{eq} at q={value}")
                factor = value ** (-eq)
            else:
                factor = value**eq
            key = (ep, 0, ey)
            out[key] = out.get(key, 0) + c * factor
        return LaurentPoly(out)

    def coeff_of(self, e_q: int, e_y: int) -> LaurentPoly:
        """The p-polynomial multiplying q^e_q y^e_y."""
        return LaurentPoly._raw(
            {(ep, 0, 0): c for (ep, eq, ey), c in self._terms.items() if eq == e_q and ey == e_y}
        )

    def coeff_y(self, e_y: int) -> LaurentPoly:
        return LaurentPoly._raw(
            {(ep, eq, 0): c for (ep, eq, ey), c in self._terms.items() if ey == e_y}
        )

    def coeff_q(self, e_q: int) -> LaurentPoly:
        return LaurentPoly._raw(
            {(ep, 0, ey): c for (ep, eq, ey), c in self._terms.items() if eq == e_q}
        )

    def as_int(self) -> int:
        if any(k != (0, 0, 0) for k in self._terms):
            raise ValueError(f"{self} is not a constant")
        return self.constant_term()

    # serialization

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0], kv[0][2], kv[0][1]))

    def to_records(self) -> list[dict]:
        return [
            {"ep": ep, "eq": eq, "ey": ey, "c": str(c)} for (ep, eq, ey), c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> LaurentPoly:
        return cls(((int(r["ep"]), int(r["eq"]), int(r["ey"])), int(r["c"])) for r in records)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (ep, eq, ey), c in self.sorted_terms():
            factors = []
            for name, e in (("p", ep), ("q", eq), ("y", ey)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({(0, 0, 0): 1})
P = LaurentPoly._raw({(1, 0, 0): 1})
Q = LaurentPoly._raw({(0, 1, 0): 1})
Y = LaurentPoly._raw({(0, 0, 1): 1})


def q_pow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({(0, e, 0): 1})


def y_pow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({(0, 0, e): 1})


def add(a: Coercible, b: Coercible) -> LaurentPoly:
    return _coerce(a) + b


def mul(a: Coercible, b: Coercible) -> LaurentPoly:
    return _coerce(a) * b


def substitute_p(a: LaurentPoly, value: Coercible) -> LaurentPoly:
    return a.substitute_p(value)


def coeff_of(a: LaurentPoly, e_q: int, e_y: int) -> LaurentPoly:
    return a.coeff_of(e_q, e_y)


def _order_key(k: Exponent) -> tuple[int, int, int]:
    # lex order: p, then y, then q (all descending when maximized)
    return (k[0], k[2], k[1])


def exact_div(a: Coercible, d: Coercible) -> LaurentPoly:
    """Divide ``a`` by ``d``, raising :class:`NonDivisible` on a remainder.

    Leading terms are eliminated under the lex order (p, y, q).  The q-adic
    valuation is additive in this integral domain, so any quotient term
    below ``min_q(a) - min_q(d)`` proves the division is not exact.
    """
    a = _coerce(a)
    d = _coerce(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    lead = max(d._terms, key=_order_key)
    lead_c = d._terms[lead]
    floor_q = a.min_q() - d.min_q()
    rem = dict(a._terms)
    quot: dict[Exponent, int] = {}
    while rem:
        k = max(rem, key=_order_key)
        c = rem[k]
        ep, eq, ey = k[0] - lead[0], k[1] - lead[1], k[2] - lead[2]
        if ep < 0 or ey < 0 or eq < floor_q or c % lead_c:
            raise NonDivisible(f"{a} is not divisible by {d}")
        qc = c // lead_c
        quot[(ep, eq, ey)] = qc
        for (b0, b1, b2), cb in d._terms.items():
            key = (b0 + ep, b1 + eq, b2 + ey)
            s = rem.get(key, 0) - qc * cb
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return LaurentPoly._raw(quot)
