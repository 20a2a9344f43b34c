"""Acceptance criteria 1-13, exact equality throughout.

Each criterion prints one ``PASS``/``FAIL`` line (collected in the terminal
summary under pytest, printed directly when run as a script).
"""

from __future__ import annotations

import math
import time

import pytest

from conftest import ACCEPTANCE
from rookq import ansatz, bijections, closedforms, permstats, qcombinat, rookmodel
from rookq.polyring import ONE, P, Q, Y, exact_div, q_pow

P_A = ONE - Q
P_B = exact_div(ONE - Q, Q)
P_C = exact_div(ONE - Q, q_pow(2))


def _all(gen) -> tuple[bool, int, list]:
    bad = []
    count = 0
    for label, ok in gen:
        count += 1
        if not ok:
            bad.append(label)
    return not bad, count, bad[:5]


def _summary(count: int, bad: list) -> str:
    return f"{count} checks" + (f", first failures {bad}" if bad else "")


def criterion_1():
    checks = [
        ("t_brute(0,1,3)", rookmodel.t_brute(0, 1, 3) == P * Q + 2 * P),
        ("t_brute(1,1,3)", rookmodel.t_brute(1, 1, 3) == ONE + Q + Q * Q),
        ("t_full(2)", rookmodel.t_full(2) == ONE + (ONE + Q + P) * Y + Y * Y),
    ]
    bad = [name for name, ok in checks if not ok]
    return not bad, _summary(len(checks), bad)


def criterion_2():
    def gen():
        for n in range(10):
            for k in range(n + 1):
                for j in range(k + 1):
                    yield (j, k, n), rookmodel.t_rec(j, k, n) == rookmodel.t_brute(j, k, n)
                yield ("T0", k, n), rookmodel.t0_rec(k, n) == rookmodel.t_brute(0, k, n)

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


def criterion_3():
    def gen():
        for n in range(9):
            for shape in rookmodel.all_shapes(n):
                for r in rookmodel.enumerate_placements(shape):
                    inv, b = bijections.phi(r)
                    ok = rookmodel.crosses(r) == b.size + bijections.mu(inv)
                    yield (shape.literal(), sorted(r.rooks)), ok and bijections.phi_inv(inv, b) == r

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad) + " placements"


def criterion_4():
    def gen():
        for n in range(10):
            for k in range(n + 1):
                yield ("T0kn", k, n), closedforms.t0kn_closed(k, n) == rookmodel.t_brute(0, k, n).substitute_p(P_A)
                for j in range(k + 1):
                    yield ("Tj0", j, k, n), bijections.factorization_check(j, k, n)
                    oracle = rookmodel.t_brute(j, k, n).substitute_p(P_A)
                    yield ("Tjkn", j, k, n), closedforms.tjkn_closed(j, k, n) == oracle

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


def criterion_5():
    def gen():
        for n in range(13):
            for k in range(n + 1):
                for which in ("id1", "id2", "id3"):
                    lhs = qcombinat.identity_lhs(which, n, k)
                    yield (which, n, k), lhs == qcombinat.identity_rhs(which, n, k)
        for n in range(13):
            for k in range(n + 1):
                yield ("id2 value", n, k), qcombinat.identity_rhs("id2", n, k) == q_pow(k * (n - k))

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


def criterion_6():
    printed_bad = 0
    printed_total = 0

    def gen():
        nonlocal printed_bad, printed_total
        for n in range(10):
            for k in range(n + 1):
                tk = rookmodel.t_kn(k, n)
                yield ("A", k, n), closedforms.tkn_special("A", k, n) == tk.substitute_p(P_A)
                yield ("B", k, n), closedforms.tkn_special("B", k, n) == tk.substitute_p(P_B)
                # raises NonDivisible if the division by (1-q) q^n is not exact
                yield ("C", k, n), closedforms.tkn_special("C", k, n) == tk.substitute_p(P_C)
                printed_total += 1
                if closedforms.tkn_special("B_printed", k, n) != tk.substitute_p(P_B):
                    printed_bad += 1

    ok, count, bad = _all(gen())
    note = f"; note: B as printed, without q^-j, disagrees in {printed_bad}/{printed_total} cases"
    return ok, _summary(count, bad) + note


def criterion_7():
    def gen():
        for n in range(11):
            lhs = (ONE - Q) * q_pow(n) * rookmodel.t_full(n).substitute_p(P_C)
            # g_poly is y*G, so both sides carry one extra factor y
            rhs = (ONE + Y) * closedforms.g_poly(n) - closedforms.g_poly(n + 1)
            yield n, lhs * Y == rhs
            yield ("via G", n), closedforms.t_n_via_g(n) == rookmodel.t_full(n).substitute_p(P_C)

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


def criterion_8():
    plain = ansatz.CommutationRule.unhatted()

    def gen():
        for n in range(1, 9):
            g = closedforms.grand_formula(n)
            yield ("a", n), g.prefixed == permstats.ascent_pattern_gf(n)
            yield ("b", n), g.value == ansatz.power_sum(n - 1, Y, plain)
            yield ("c", n), g.prefixed == permstats.laguerre_moment(n)

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


def criterion_9():
    def gen():
        for n in range(1, 13):
            y1 = closedforms.grand_formula_y1(n)
            yield ("y=1", n), y1 == closedforms.grand_formula(n).at_y1()
            yield ("catalan", n), y1.coeff_q(0).constant_term() == qcombinat.catalan(n)
            for m in (1, 2, 3):
                yield (f"q^{m}", n), y1.coeff_q(m).constant_term() == closedforms.taylor_coeff(m, n)
        for n in range(8, 15):
            y1 = closedforms.grand_formula_y1(n)
            yield ("q^10", n), y1.coeff_q(10).constant_term() == closedforms.taylor_coeff(10, n)

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


def criterion_10():
    def gen():
        for n in range(8):
            yield n, bijections.matching_crossing_polynomial(n) == closedforms.touchard_riordan(n)

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


def criterion_11():
    ok, count, bad = _all((n, ansatz.verify_inversion(n)) for n in range(10))
    return ok, _summary(count, bad)


FIG_CORE = "xxYxzyxxYxxxxzyyYyyzY"
FIG_IMAGE = "xxYxzyxxYxxzyyxxYyYzY"


def criterion_12():
    def gen():
        for n in range(11):
            for k in range(n // 2 + 1):
                oracle = rookmodel.t_brute(0, k, n).substitute_p(P_A)
                yield ("sum", k, n), bijections.t0_via_cores(k, n) == oracle
        for length in range(12):
            for flats in range(length % 2, length + 1, 2):
                good, rest = bijections.gamma_cancellation(length, flats)
                yield ("gamma", length, flats), good and rest.is_zero()

    ok, count, bad = _all(gen())
    i = FIG_CORE.count("x")
    w_core = bijections.from_word(FIG_CORE).weight()
    w_image = bijections.from_word(FIG_IMAGE).weight()
    pair_ok = bijections.gamma_word(i, FIG_CORE) == FIG_IMAGE and w_image == -w_core
    # the published example states the weight pair as -q^17
    caption_ok = w_core == -q_pow(17) or w_image == -q_pow(17)
    detail = (
        _summary(count, bad)
        + f"; example pair reproduced: {pair_ok}, weights {w_core} / {w_image}"
        + f"; stated weight -q^17 matched: {caption_ok}"
    )
    return ok and pair_ok and caption_ok, detail


def criterion_13():
    def gen():
        for n in range(1, 9):
            g = closedforms.grand_formula(n)
            pre = g.prefixed
            for m in range(n):
                c = g.coeff(m)
                yield ("coef", m, n), closedforms.coeff_formula(m, n) == c
                yield ("coef raw", m, n), closedforms.coeff_formula(m + 1, n, prefixed=True) == c
                yield ("williams", m, n), closedforms.williams_coeff(m + 1, n) == c
            for m in range(n + 2):
                yield ("q1", m, n), closedforms.low_q_y_coeffs("q1", m, n) == pre.coeff_of(1, m).constant_term()
                yield ("q2", m, n), closedforms.low_q_y_coeffs("q2", m, n) == pre.coeff_of(2, m).constant_term()

    ok, count, bad = _all(gen())
    return ok, _summary(count, bad)


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 14)}


def evaluate(n: int) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        ok, detail = CRITERIA[n]()
    except Exception as exc:  # report, then let the assertion fail
        ok, detail = False, f"raised {exc!r}"
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({detail}; {time.perf_counter() - start:.1f}s)"
    ACCEPTANCE.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, line = evaluate(n)
    assert ok, line


def trend_report() -> list[str]:
    """Ratio of [q^m] at y = 1 to 4^n n^(m-3/2) / (sqrt(pi) m!), n = 10..16."""
    lines = []
    for m in (1, 2, 3):
        ratios = []
        for n in range(10, 17):
            coeff = closedforms.grand_formula_y1(n).coeff_q(m).constant_term()
            scale = 4**n * n ** (m - 1.5) / (math.sqrt(math.pi) * math.factorial(m))
            ratios.append(coeff / scale)
        toward_one = all(abs(b - 1) <= abs(a - 1) for a, b in zip(ratios, ratios[1:]))
        shown = " ".join(f"{r:.4f}" for r in ratios)
        lines.append(f"trend m={m}: {shown} (monotone toward 1: {toward_one}; informational)")
    return lines


def test_asymptotic_trend_informational():
    for line in trend_report():
        ACCEPTANCE.append(line)
        print(line)


if __name__ == "__main__":
    results = [evaluate(n)[0] for n in sorted(CRITERIA)]
    for line in trend_report():
        print(line)
    raise SystemExit(0 if all(results) else 1)
