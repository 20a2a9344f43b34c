"""Normal ordering of words in D and E under DE = q ED + alpha D + beta E + gamma.

Normal forms are maps ``(i, j) -> coefficient`` standing for sum c E^i D^j.
With the boundary vectors satisfying <W|E = <W| and D|V> = |V>, the bra-ket
value of a word is just the sum of its normal-form coefficients.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .polyring import ONE, P, Q, Y, ZERO, LaurentPoly, exact_div, q_pow
from .qcombinat import binom


@dataclass(frozen=True)
class OperatorWord:
    letters: str

    def __post_init__(self):
        bad = re.search(r"[^DE]", self.letters)
        if bad:
            raise ValueError(
                f"operator words use D and E only; got {bad.group()!r} at position {bad.start()}"
            )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class CommutationRule:
    """DE = qcoef ED + alpha D + beta E + gamma."""

    qcoef: LaurentPoly
    alpha: LaurentPoly
    beta: LaurentPoly
    gamma: LaurentPoly

    @classmethod
    def hatted(cls, gamma: LaurentPoly | None = None) -> CommutationRule:
        """The rook relation; gamma defaults to the symbol p."""
        return cls(Q, ZERO, ZERO, P if gamma is None else gamma)

    @classmethod
    def unhatted(cls) -> CommutationRule:
        """DE - qED = D + E."""
        return cls(Q, ONE, ONE, ZERO)


# gamma making the hatted relation the image of the unhatted one
HAT_GAMMA = exact_div(ONE - Q, q_pow(2))


@dataclass
class NormalForm:
    coeffs: dict = field(default_factory=dict)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return _clean(self.coeffs) == _clean(other.coeffs)

    def total(self) -> LaurentPoly:
        out = ZERO
        for c in self.coeffs.values():
            out = out + c
        return out

    def words(self) -> dict[str, LaurentPoly]:
        return {"E" * i + "D" * j: c for (i, j), c in self.coeffs.items() if c}


def _clean(coeffs: dict) -> dict:
    return {k: c for k, c in coeffs.items() if c}


def _add_into(acc: dict, key, value: LaurentPoly) -> None:
    s = acc.get(key, ZERO) + value
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class _Pusher:
    # N(i) = normal form of D E^i, memoized per rule
    def __init__(self, rule: CommutationRule):
        self.rule = rule
        self.cache: list[dict] = [{(0, 1): ONE}]

    def __call__(self, i: int) -> dict:
        r = self.rule
        while len(self.cache) <= i:
            m = len(self.cache)
            prev = self.cache[-1]
            nxt: dict = {}
            for (a, b), c in prev.items():
                _add_into(nxt, (a + 1, b), r.qcoef * c)
                if r.alpha:
                    _add_into(nxt, (a, b), r.alpha * c)
            if r.beta:
                _add_into(nxt, (m, 0), r.beta)
            if r.gamma:
                _add_into(nxt, (m - 1, 0), r.gamma)
            self.cache.append(nxt)
        return self.cache[i]


def _prepend(nf: dict, letter: str, push: _Pusher, scale: LaurentPoly = ONE) -> dict:
    out: dict = {}
    for (i, j), c in nf.items():
        if letter == "E":
            _add_into(out, (i + 1, j), scale * c)
        else:
            for (a, b), d in push(i).items():
                _add_into(out, (a, b + j), scale * c * d)
    return out


def normal_order(w: OperatorWord | str, rule: CommutationRule) -> NormalForm:
    """Normal form of ``w``, built by prepending letters right to left."""
    letters = str(w) if isinstance(w, OperatorWord) else OperatorWord(w).letters
    push = _Pusher(rule)
    nf: dict = {(0, 0): ONE}
    for letter in reversed(letters):
        nf = _prepend(nf, letter, push)
    return NormalForm(nf)


def normal_order_rewriting(
    w: OperatorWord | str, rule: CommutationRule, strategy: str = "leftmost"
) -> NormalForm:
    """Reference engine: rewrite one DE factor at a time until none is left."""
    letters = str(w) if isinstance(w, OperatorWord) else OperatorWord(w).letters
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pending: dict[str, LaurentPoly] = {letters: ONE}
    done: dict[str, LaurentPoly] = {}
    while pending:
        word, c = pending.popitem()
        pos = word.find("DE") if strategy == "leftmost" else word.rfind("DE")
        if pos < 0:
            _add_into(done, word, c)
            continue
        head, tail = word[:pos], word[pos + 2 :]
        for middle, coef in (
            ("ED", rule.qcoef),
            ("D", rule.alpha),
            ("E", rule.beta),
            ("", rule.gamma),
        ):
            if coef:
                _add_into(pending, head + middle + tail, c * coef)
    coeffs: dict = {}
    for word, c in done.items():
        i = len(word) - len(word.lstrip("E"))
        _add_into(coeffs, (i, len(word) - i), c)
    return NormalForm(coeffs)


def bra_ket(w: OperatorWord | str, rule: CommutationRule) -> LaurentPoly:
    return normal_order(w, rule).total()


def power_sum(n: int, y_weight: LaurentPoly = Y, rule: CommutationRule | None = None) -> LaurentPoly:
    """<W|(y D + E)^n|V>, expanded linearly without listing the 2^n words."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rule = CommutationRule.hatted() if rule is None else rule
    push = _Pusher(rule)
    nf: dict = {(0, 0): ONE}
    for _ in range(n):
        a = _prepend(nf, "D", push, y_weight)
        b = _prepend(nf, "E", push)
        for key, c in b.items():
            _add_into(a, key, c)
        nf = a
    return NormalForm(nf).total()


def power_sum_by_words(n: int, y_weight: LaurentPoly = Y, rule: CommutationRule | None = None) -> LaurentPoly:
    rule = CommutationRule.hatted() if rule is None else rule
    total = ZERO
    for letters in itertools.product("DE", repeat=n):
        word = "".join(letters)
        total = total + y_weight ** word.count("D") * bra_ket(word, rule)
    return total


def verify_inversion(n: int) -> bool:
    """Both binomial inversions between (yD+E)^n and (yD^+E^)^n at bra-ket level."""
    plain = CommutationRule.unhatted()
    hat = CommutationRule.hatted(HAT_GAMMA)
    one_plus_y = ONE + Y
    lhs1 = (ONE - Q) ** n * power_sum(n, Y, plain)
    rhs1 = ZERO
    lhs2 = q_pow(n) * power_sum(n, Y, hat)
    rhs2 = ZERO
    for k in range(n + 1):
        sign = -1 if k % 2 else 1
        common = binom(n, k) * sign * one_plus_y ** (n - k)
        rhs1 = rhs1 + common * q_pow(k) * power_sum(k, Y, hat)
        rhs2 = rhs2 + common * (ONE - Q) ** k * power_sum(k, Y, plain)
    return lhs1 == rhs1 and lhs2 == rhs2
