"""Rook placements, involutions and weighted Motzkin paths.

Two pipelines live here.  The map phi = (alpha, beta) sends a rook placement
to an involution plus a smaller Young diagram and transports the cross count
as ``|beta| + mu(alpha)``.  The second pipeline turns involutions into
weighted Motzkin paths, signs them (the "C2" paths, whose weight sum is
T_{0,k,n}(1-q, q)), splits each signed path into a Dyck left factor and a
*core*, and cancels cores in pairs with a sign-reversing involution.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .polyring import ONE, ZERO, LaurentPoly, q_pow
from .qcombinat import delannoy, qbinom
from .rookmodel import RookPlacement, YoungShape, t_brute


# ---------------------------------------------------------------------------
# involutions


@dataclass(frozen=True)
class Involution:
    n: int
    arches: frozenset
    fixed: frozenset

    def __post_init__(self):
        object.__setattr__(self, "arches", frozenset(self.arches))
        object.__setattr__(self, "fixed", frozenset(self.fixed))
        seen = list(self.fixed)
        for i, j in self.arches:
            if not i < j:
                raise ValueError(f"arch {(i, j)} must have i < j")
            seen += [i, j]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError("arches and fixed points must partition {1..n}")

    @classmethod
    def identity(cls, n: int) -> Involution:
        return cls(n, frozenset(), frozenset(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, images: dict[int, int] | list[int]) -> Involution:
        """From one-line notation (list, values 1..n) or a dict point -> image."""
        if isinstance(images, list):
            images = {i + 1: v for i, v in enumerate(images)}
        arches = {(i, v) for i, v in images.items() if i < v}
        fixed = {i for i, v in images.items() if i == v}
        for i, v in images.items():
            if images[v] != i:
                raise ValueError("mapping is not an involution")
        return cls(len(images), frozenset(arches), frozenset(fixed))

    def __call__(self, x: int) -> int:
        for i, j in self.arches:
            if x == i:
                return j
            if x == j:
                return i
        return x

    def sorted_arches(self) -> list[tuple[int, int]]:
        return sorted(self.arches)

    def crossings(self) -> int:
        arcs = self.sorted_arches()
        return sum(
            1 for (a, b), (c, d) in itertools.combinations(arcs, 2) if a < c < b < d or c < a < d < b
        )

    def height(self, x: int) -> int:
        return sum(1 for i, j in self.arches if i < x < j)

    def heights(self) -> dict[int, int]:
        return {x: self.height(x) for x in sorted(self.fixed)}


def mu(inv: Involution) -> int:
    """Crossings plus the total height of the fixed points."""
    return inv.crossings() + sum(inv.heights().values())


def involutions(n: int, fixed_points: int | None = None) -> Iterator[Involution]:
    """All involutions of {1..n}, or only those in Inv(n, fixed_points)."""

    def rec(free: list[int]):
        if not free:
            yield []
            return
        a, rest = free[0], free[1:]
        yield from ([("fix", a)] + tail for tail in rec(rest))
        for idx, b in enumerate(rest):
            others = rest[:idx] + rest[idx + 1 :]
            yield from ([(a, b)] + tail for tail in rec(others))

    for combo in rec(list(range(1, n + 1))):
        fixed = frozenset(b for a, b in combo if a == "fix")
        if fixed_points is not None and len(fixed) != fixed_points:
            continue
        arches = frozenset((a, b) for a, b in combo if a != "fix")
        yield Involution(n, arches, fixed)


def matching_crossing_polynomial(n: int) -> LaurentPoly:
    """Sum of q^cr(I) over fixed-point-free involutions of {1..2n}, by direct enumeration."""
    counts: dict[int, int] = {}
    size = 2 * n
    closers: list[int] = []

    def rec(free: list[int], cr: int):
        if not free:
            counts[cr] = counts.get(cr, 0) + 1
            return
        a, rest = free[0], free[1:]
        for idx, b in enumerate(rest):
            # earlier arcs (c, d) have c < a, so they cross (a, b) iff a < d < b
            extra = sum(1 for d in closers if a < d < b)
            closers.append(b)
            rec(rest[:idx] + rest[idx + 1 :], cr + extra)
            closers.pop()

    if size == 0:
        return ONE
    rec(list(range(1, size + 1)), 0)
    return LaurentPoly({(0, e, 0): c for e, c in counts.items()})


# ---------------------------------------------------------------------------
# phi = (alpha, beta)


def _boundary_labels(shape: YoungShape) -> tuple[str, dict[int, int], dict[int, int]]:
    # label t (1-based) of the boundary word -> column or row it borders
    word = shape.boundary_word()
    col_label: dict[int, int] = {}
    row_label: dict[int, int] = {}
    col = 0
    row = shape.k - 1
    for t, letter in enumerate(word, start=1):
        if letter == "E":
            col_label[col] = t
            col += 1
        else:
            row_label[row] = t
            row -= 1
    return word, col_label, row_label


def alpha(r: RookPlacement) -> Involution:
    word, col_label, row_label = _boundary_labels(r.shape)
    arches = {(col_label[c], row_label[row]) for row, c in r.rooks}
    used = {x for a in arches for x in a}
    fixed = set(range(1, len(word) + 1)) - used
    return Involution(len(word), frozenset(arches), frozenset(fixed))


def beta(r: RookPlacement) -> YoungShape:
    """Shape spelled by the boundary letters whose row or column holds no rook."""
    word, col_label, row_label = _boundary_labels(r.shape)
    marked = {col_label[c] for _, c in r.rooks} | {row_label[row] for row, _ in r.rooks}
    sub = "".join(letter for t, letter in enumerate(word, start=1) if t not in marked)
    return YoungShape.from_word(sub)


def phi(r: RookPlacement) -> tuple[Involution, YoungShape]:
    return alpha(r), beta(r)


def phi_inv(inv: Involution, shape: YoungShape) -> RookPlacement:
    if shape.n != len(inv.fixed):
        raise ValueError(
            f"shape half-perimeter {shape.n} differs from the {len(inv.fixed)} fixed points"
        )
    sub = iter(shape.boundary_word())
    letters = {}
    for i, j in inv.arches:
        letters[i] = "E"
        letters[j] = "S"
    word = "".join(letters[t] if t in letters else next(sub) for t in range(1, inv.n + 1))
    big = YoungShape.from_word(word)
    _, col_label, row_label = _boundary_labels(big)
    col_of = {t: c for c, t in col_label.items()}
    row_of = {t: row for row, t in row_label.items()}
    rooks = frozenset((row_of[j], col_of[i]) for i, j in inv.arches)
    return RookPlacement(big, rooks)


def factorization_check(j: int, k: int, n: int) -> bool:
    """T_{j,k,n} == [n-2k+2j choose j]_q T_{0,k-j,n}, both sides by enumeration."""
    return t_brute(j, k, n) == qbinom(n - 2 * k + 2 * j, j) * t_brute(0, k - j, n)


# ---------------------------------------------------------------------------
# weighted Motzkin paths

NE, E, SE = "NE", "E", "SE"


class Step(NamedTuple):
    direction: str
    exponent: int = 0
    sign: int = 1
    y: int = 0


_STEP_RE = re.compile(r"(NE|SE|E)(?:\((-?)(y?)(\d+)\))?")


@dataclass(frozen=True)
class WeightedMotzkinPath:
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(Step(*s) for s in self.steps))
        h = 0
        for s in self.steps:
            if s.direction == SE:
                h -= 1
            elif s.direction == NE:
                h += 1
            elif s.direction != E:
                raise ValueError(f"unknown direction {s.direction!r}")
            if h < 0:
                raise ValueError("path goes below height 0")

    def __len__(self) -> int:
        return len(self.steps)

    def start_heights(self) -> list[int]:
        out, h = [], 0
        for s in self.steps:
            out.append(h)
            h += {NE: 1, SE: -1, E: 0}[s.direction]
        return out

    def final_height(self) -> int:
        return sum({NE: 1, SE: -1, E: 0}[s.direction] for s in self.steps)

    def weight(self) -> LaurentPoly:
        eq = sum(s.exponent for s in self.steps)
        ey = sum(s.y for s in self.steps)
        sign = 1
        for s in self.steps:
            sign *= s.sign
        return LaurentPoly.monomial(sign, eq=eq, ey=ey)

    def literal(self) -> str:
        out = []
        for s in self.steps:
            if s.exponent == 0 and s.sign == 1 and s.y == 0:
                out.append(s.direction)
            else:
                neg = "-" if s.sign < 0 else ""
                out.append(f"{s.direction}({neg}{'y' if s.y else ''}{s.exponent})")
        return ",".join(out)

    @classmethod
    def parse(cls, text: str) -> WeightedMotzkinPath:
        """Parse ``"NE,E(2),SE(-1)"``; a leading minus is the sign, ``y`` marks a y factor."""
        steps = []
        pos = 0
        for token in text.split(",") if text else []:
            m = _STEP_RE.fullmatch(token.strip())
            if not m:
                raise ValueError(f"bad path step {token!r} at offset {pos}")
            direction, neg, yflag, digits = m.groups()
            steps.append(
                Step(direction, int(digits or 0), -1 if neg else 1, 1 if yflag else 0)
            )
            pos += len(token) + 1
        return cls(tuple(steps))


def inv_to_motzkin(inv: Involution) -> WeightedMotzkinPath:
    """Openers go up, closers go down, fixed points stay flat.

    An East step at height h weighs q^h.  Closing the arc (a, b) weighs q^i
    where i counts the arcs opened after a that are still open, i.e. the
    arcs crossing (a, b) from the inside.
    """
    partner = {}
    for i, j in inv.arches:
        partner[i] = j
        partner[j] = i
    open_arcs: list[int] = []
    steps = []
    for t in range(1, inv.n + 1):
        if t in inv.fixed:
            steps.append(Step(E, len(open_arcs)))
        elif partner[t] > t:
            steps.append(Step(NE))
            open_arcs.append(t)
        else:
            idx = open_arcs.index(partner[t])
            steps.append(Step(SE, len(open_arcs) - 1 - idx))
            open_arcs.pop(idx)
    return WeightedMotzkinPath(tuple(steps))


def motzkin_to_inv(path: WeightedMotzkinPath) -> Involution:
    open_arcs: list[int] = []
    arches, fixed = set(), set()
    for t, s in enumerate(path.steps, start=1):
        if s.direction == E:
            fixed.add(t)
        elif s.direction == NE:
            open_arcs.append(t)
        else:
            idx = len(open_arcs) - 1 - s.exponent
            if idx < 0:
                raise ValueError(f"step {t}: weight exponent {s.exponent} exceeds height")
            arches.add((open_arcs.pop(idx), t))
    if open_arcs:
        raise ValueError("path does not return to height 0")
    return Involution(len(path), frozenset(arches), frozenset(fixed))


def _motzkin_shapes(n: int, ups: int) -> Iterator[tuple[str, ...]]:
    # unweighted Motzkin paths with n steps and exactly ``ups`` NE steps
    def rec(t: int, h: int, u: int, d: int, acc: list[str]):
        if t == n:
            if h == 0 and u == ups and d == ups:
                yield tuple(acc)
            return
        left = n - t
        if u < ups and h + 1 <= left - 1:
            acc.append(NE)
            yield from rec(t + 1, h + 1, u + 1, d, acc)
            acc.pop()
        if (n - 2 * ups) - (t - u - d) > 0:
            acc.append(E)
            yield from rec(t + 1, h, u, d, acc)
            acc.pop()
        if h > 0:
            acc.append(SE)
            yield from rec(t + 1, h - 1, u, d + 1, acc)
            acc.pop()

    if 0 <= 2 * ups <= n:
        yield from rec(0, 0, 0, 0, [])


def enumerate_c2_paths(n: int, k: int) -> Iterator[WeightedMotzkinPath]:
    """Signed paths: E at height h weighs q^h, SE from height h weighs 1 or -q^h."""
    for shape in _motzkin_shapes(n, k):
        heights = []
        h = 0
        for d in shape:
            heights.append(h)
            h += {NE: 1, SE: -1, E: 0}[d]
        choices = []
        for d, h in zip(shape, heights):
            if d == E:
                choices.append((Step(E, h),))
            elif d == NE:
                choices.append((Step(NE),))
            else:
                choices.append((Step(SE), Step(SE, h, -1)))
        for steps in itertools.product(*choices):
            yield WeightedMotzkinPath(steps)


def c2_weight_sum(n: int, k: int) -> LaurentPoly:
    total = ZERO
    for path in enumerate_c2_paths(n, k):
        total = total + path.weight()
    return total


# ---------------------------------------------------------------------------
# cores; word alphabet x (NE), z (E), y (SE weight 1), Y (SE weight -q^h)


def to_word(path: WeightedMotzkinPath) -> str:
    out = []
    for s in path.steps:
        if s.direction == NE:
            out.append("x")
        elif s.direction == E:
            out.append("z")
        else:
            out.append("Y" if s.sign < 0 else "y")
    return "".join(out)


def from_word(word: str) -> WeightedMotzkinPath:
    steps = []
    h = 0
    for letter in word:
        if letter == "x":
            steps.append(Step(NE))
            h += 1
        elif letter == "z":
            steps.append(Step(E, h))
        elif letter == "y":
            steps.append(Step(SE))
            h -= 1
        elif letter == "Y":
            steps.append(Step(SE, h, -1))
            h -= 1
        else:
            raise ValueError(f"unknown core letter {letter!r}")
    return WeightedMotzkinPath(tuple(steps))


def is_c2(path: WeightedMotzkinPath) -> bool:
    for s, h in zip(path.steps, path.start_heights()):
        if s.direction == E and (s.exponent != h or s.sign != 1):
            return False
        if s.direction == NE and (s.exponent or s.sign != 1):
            return False
        if s.direction == SE and (s.exponent, s.sign) not in ((0, 1), (h, -1)):
            return False
        if s.y:
            return False
    return path.final_height() == 0


def is_core(path: WeightedMotzkinPath) -> bool:
    return is_c2(path) and "xy" not in to_word(path)


def decompose_c2(path: WeightedMotzkinPath) -> tuple[str, WeightedMotzkinPath]:
    """Split a C2 path into (Dyck left factor, core).

    Peeling: delete every NE step that is immediately followed by a weight-1
    SE step, and repeat until none is left.  Deleted pairs are balanced blocks
    so no other step changes height and the weight is unchanged.  The left
    factor records, position by position, ``D`` for a deleted SE step and
    ``U`` for everything else.  Reassembly matches each ``D`` with the nearest
    unmatched ``U`` before it; the unmatched ``U`` positions carry the core.
    """
    if not is_c2(path):
        raise ValueError("path does not satisfy the C2 conditions")
    word = to_word(path)
    stack: list[int] = []  # surviving positions so far
    removed: set[int] = set()
    for t, letter in enumerate(word):
        if letter == "y" and stack and word[stack[-1]] == "x":
            removed.add(stack.pop())
            removed.add(t)
        else:
            stack.append(t)
    factor = "".join("D" if (t in removed and word[t] == "y") else "U" for t in range(len(word)))
    core = from_word("".join(word[t] for t in stack))
    return factor, core


def reassemble_c2(factor: str, core: WeightedMotzkinPath) -> WeightedMotzkinPath:
    pending: list[int] = []
    matched: dict[int, str] = {}
    for t, letter in enumerate(factor):
        if letter == "U":
            pending.append(t)
        elif letter == "D":
            if not pending:
                raise ValueError("factor dips below height 0")
            matched[pending.pop()] = "x"
            matched[t] = "y"
        else:
            raise ValueError(f"bad factor letter {letter!r}")
    core_letters = iter(to_word(core))
    word = "".join(matched[t] if t in matched else next(core_letters) for t in range(len(factor)))
    if next(core_letters, None) is not None:
        raise ValueError("core is longer than the free positions of the factor")
    return from_word(word)


def enumerate_cores(length: int, flats: int) -> Iterator[WeightedMotzkinPath]:
    """Cores with ``length`` steps of which ``flats`` are East steps."""
    ups2 = length - flats
    if ups2 < 0 or ups2 % 2:
        return
    for path in enumerate_c2_paths(length, ups2 // 2):
        if "xy" not in to_word(path):
            yield path


def core_weight_sum(length: int, flats: int) -> LaurentPoly:
    total = ZERO
    for c in enumerate_cores(length, flats):
        total = total + c.weight()
    return total


def _word_heights(word: str) -> list[int]:
    out, h = [], 0
    for letter in word:
        out.append(h)
        h += {"x": 1, "z": 0, "y": -1, "Y": -1}[letter]
    return out


def core_u(word: str) -> int:
    """Length of the last run of x's."""
    t = word.rfind("x")
    u = 0
    while t >= 0 and word[t] == "x":
        u += 1
        t -= 1
    return u


def core_v(word: str, i: int) -> int:
    """Start height of the last y when no x follows it, else ``i + 1``.

    The ``i + 1`` sentinel (rather than ``i``) keeps a last y that genuinely
    starts at height ``i`` distinguishable from the "no such y" case.
    """
    ly = word.rfind("y")
    if ly >= 0 and word.find("x", ly) < 0:
        return _word_heights(word)[ly]
    return i + 1


def is_gamma_fixed(word: str, i: int) -> bool:
    return word.startswith("x" * i) and "y" not in word


def gamma_word(i: int, word: str) -> str:
    """The sign-reversing involution on core words with ``i`` letters x.

    When u >= v the last y becomes a bar and the final v letters x of the last
    run jump over the block ``a y^j`` that follows the run (``a`` is z or a
    bar).  When u < v the last bar starting at height u after the last run
    becomes a y and the run jumps back over the ``a y^j`` block before it.
    """
    if word.count("x") != i:
        raise ValueError(f"core {word!r} does not have {i} North-East steps")
    if is_gamma_fixed(word, i):
        return word
    u, v = core_u(word), core_v(word, i)
    last_x = word.rfind("x")
    start = last_x - u + 1
    if u >= v:
        ly = word.rfind("y")
        w = word[:ly] + "Y" + word[ly + 1 :]
        t = last_x + 2
        while t < len(w) and w[t] == "y":
            t += 1
        return w[:start] + "x" * (u - v) + w[last_x + 1 : t] + "x" * v + w[t:]
    hs = _word_heights(word)
    ly = max(t for t in range(last_x, len(word)) if word[t] == "Y" and hs[t] == u)
    w = word[:ly] + "y" + word[ly + 1 :]
    t = start - 1
    while w[t] == "y":
        t -= 1
    return w[:t] + "x" * u + w[t:start] + w[last_x + 1 :]


def gamma(i: int, core: WeightedMotzkinPath) -> WeightedMotzkinPath:
    if not is_core(core):
        raise ValueError("argument is not a core")
    return from_word(gamma_word(i, to_word(core)))


def gamma_fixed_weight(i: int, n: int, k: int) -> LaurentPoly:
    """Sum of weights of the fixed cores of length n-2k+2i, by enumeration."""
    m = n - 2 * k
    total = ZERO
    for c in enumerate_cores(m + 2 * i, m):
        if is_gamma_fixed(to_word(c), i):
            total = total + c.weight()
    return total


def gamma_fixed_weight_closed(i: int, n: int, k: int) -> LaurentPoly:
    """(-1)^i q^(i(i+1)/2) [n-2k+i choose i]_q."""
    val = q_pow(i * (i + 1) // 2) * qbinom(n - 2 * k + i, i)
    return -val if i % 2 else val


def gamma_cancellation(length: int, flats: int) -> tuple[bool, LaurentPoly]:
    """Check the involution and sign reversal; return (ok, weight of non-fixed cores)."""
    i = (length - flats) // 2
    ok = True
    rest = ZERO
    for c in enumerate_cores(length, flats):
        w = to_word(c)
        g = gamma_word(i, w)
        if g == w:
            continue
        rest = rest + c.weight()
        if gamma_word(i, g) != w or from_word(g).weight() != -c.weight():
            ok = False
    return ok, rest


def t0_via_cores(k: int, n: int) -> LaurentPoly:
    """sum_i <n, k-i> times the fixed-core weight: T_{0,k,n}(1-q, q)."""
    total = ZERO
    for i in range(k + 1):
        total = total + delannoy(n, k - i) * gamma_fixed_weight(i, n, k)
    return total
