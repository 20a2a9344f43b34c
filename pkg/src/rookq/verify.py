"""Exhaustive invariant suites, shared by the CLI and the test-suite.

A suite is a list of named checks.  Each check is a generator of
``(instance_descriptor, ok)`` pairs, so failures can be reported with enough
detail to reproduce them.
"""

from __future__ import annotations

import itertools
import os
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import ansatz, bijections, closedforms, permstats, qcombinat, rookmodel
from .polyring import ONE, Q, Y, exact_div, q_pow

Check = Callable[[int], Iterator[tuple[str, bool]]]

DEFAULT_MAX_N = {
    "rewriting": 8,
    "bijections": 8,
    "closedforms": 10,
    "identities": 12,
    "appendix": 10,
    "permstats": 8,
    "inversion": 9,
}

P_HAT1 = exact_div(ONE - Q, Q)
P_HAT2 = exact_div(ONE - Q, q_pow(2))


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)


@dataclass
class RunReport:
    suite: str
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def checked(self) -> int:
        return sum(c.checked for c in self.checks)

    @property
    def failures(self) -> list:
        return [f"{c.name}: {f}" for c in self.checks for f in c.failures]

    @property
    def ok(self) -> bool:
        return not self.failures


def _word_shape(word: str) -> rookmodel.YoungShape:
    return rookmodel.YoungShape.from_word("".join("E" if c == "D" else "S" for c in word))


# rewriting


def chk_confluence(max_n: int):
    rules = {"hatted": ansatz.CommutationRule.hatted(), "plain": ansatz.CommutationRule.unhatted()}
    for n in range(max_n + 1):
        for letters in itertools.product("DE", repeat=n):
            w = "".join(letters)
            for name, rule in rules.items():
                fast = ansatz.normal_order(w, rule)
                ok = (
                    fast == ansatz.normal_order_rewriting(w, rule, "leftmost")
                    and fast == ansatz.normal_order_rewriting(w, rule, "rightmost")
                )
                yield f"word={w!r} rule={name}", ok


def chk_rewriting_rooks(max_n: int):
    rule = ansatz.CommutationRule.hatted()
    for n in range(max_n + 1):
        for letters in itertools.product("DE", repeat=n):
            w = "".join(letters)
            yield f"word={w!r}", ansatz.bra_ket(w, rule) == rookmodel.placement_sum(_word_shape(w))
        yield f"n={n} power_sum", ansatz.power_sum(n) == rookmodel.t_full(n)


def chk_recurrence(max_n: int):
    for n in range(max_n + 1):
        for k in range(n + 1):
            for j in range(k + 1):
                yield f"j={j} k={k} n={n}", rookmodel.t_rec(j, k, n) == rookmodel.t_brute(j, k, n)
            yield f"T0 k={k} n={n}", rookmodel.t0_rec(k, n) == rookmodel.t_brute(0, k, n)


def chk_grand_engine(max_n: int):
    rule = ansatz.CommutationRule.unhatted()
    for n in range(1, max_n + 1):
        yield f"n={n}", closedforms.grand_formula(n).value == ansatz.power_sum(n - 1, Y, rule)


# bijections


def chk_weight_transport(max_n: int):
    for n in range(max_n + 1):
        for shape in rookmodel.all_shapes(n):
            for r in rookmodel.enumerate_placements(shape):
                inv, b = bijections.phi(r)
                ok = rookmodel.crosses(r) == b.size + bijections.mu(inv)
                ok = ok and bijections.phi_inv(inv, b) == r
                yield f"shape={shape.literal()} rooks={sorted(r.rooks)}", ok


def chk_motzkin(max_n: int):
    for n in range(max_n + 2):
        for inv in bijections.involutions(n):
            path = bijections.inv_to_motzkin(inv)
            ok = sum(s.exponent for s in path.steps) == bijections.mu(inv)
            ok = ok and bijections.motzkin_to_inv(path) == inv
            yield f"n={n} arches={inv.sorted_arches()}", ok


def chk_factorization(max_n: int):
    for n in range(max_n + 1):
        for k in range(n + 1):
            for j in range(k + 1):
                yield f"j={j} k={k} n={n}", bijections.factorization_check(j, k, n)


# closed forms


def chk_tjkn(max_n: int):
    for n in range(min(max_n, 9) + 1):
        for k in range(n + 1):
            for j in range(k + 1):
                oracle = rookmodel.t_brute(j, k, n).substitute_p(ONE - Q)
                yield f"j={j} k={k} n={n}", closedforms.tjkn_closed(j, k, n) == oracle
            yield f"T0 k={k} n={n}", closedforms.t0kn_closed(k, n) == rookmodel.t_brute(
                0, k, n
            ).substitute_p(ONE - Q)


def chk_tkn_special(max_n: int):
    subs = {"A": ONE - Q, "B": P_HAT1, "C": P_HAT2}
    for n in range(min(max_n, 9) + 1):
        for k in range(n + 1):
            tk = rookmodel.t_kn(k, n)
            for variant, p in subs.items():
                yield f"{variant} k={k} n={n}", closedforms.tkn_special(variant, k, n) == tk.substitute_p(p)


def chk_tn(max_n: int):
    for n in range(max_n + 1):
        lhs = (ONE - Q) * q_pow(n) * closedforms.t_n_via_g(n) * Y
        rhs = (ONE + Y) * closedforms.g_poly(n) - closedforms.g_poly(n + 1)
        oracle = rookmodel.t_full(n, "rec").substitute_p(P_HAT2)
        yield f"n={n}", lhs == rhs and closedforms.t_n_via_g(n) == oracle


def chk_grand(max_n: int):
    for n in range(1, min(max_n, 8) + 1):
        g = closedforms.grand_formula(n)
        yield f"perm n={n}", g.prefixed == permstats.ascent_pattern_gf(n)
        for m in range(n):
            c = g.coeff(m)
            yield f"coef m={m} n={n}", closedforms.coeff_formula(m, n) == c
            yield f"williams k={m + 1} n={n}", closedforms.williams_coeff(m + 1, n) == c
            pre = g.prefixed
            for which, e in (("q1", 1), ("q2", 2)):
                got = closedforms.low_q_y_coeffs(which, m, n)
                yield f"{which} m={m} n={n}", got == pre.coeff_of(e, m).constant_term()
    for n in range(1, max_n + 1):
        g = closedforms.grand_formula(n)
        y1 = closedforms.grand_formula_y1(n)
        yield f"y1 n={n}", g.at_y1() == y1 and g.value.coefficients_nonnegative()
        for m in (0, 1, 2, 3):
            yield f"taylor m={m} n={n}", closedforms.taylor_coeff(m, n) == y1.coeff_q(m).constant_term()
        if n >= 8:
            yield f"taylor m=10 n={n}", closedforms.taylor_coeff(10, n) == y1.coeff_q(10).constant_term()


# identities


def chk_identities(max_n: int):
    for n in range(max_n + 1):
        for k in range(n + 1):
            for which in ("id1", "id2", "id3"):
                lhs = qcombinat.identity_lhs(which, n, k)
                yield f"{which} k={k} n={n}", lhs == qcombinat.identity_rhs(which, n, k)


def chk_lattice_paths(max_n: int):
    for n in range(min(max_n, 8) + 1):
        for j in range(n + 1):
            for k in range(n - j + 1):
                yield f"n={n} j={j} k={k}", qcombinat.nonintersecting_pair_count(
                    n, j, k
                ) == qcombinat.binomial_determinant(n, j, k)


# appendix


def chk_appendix(max_n: int):
    for n in range(max_n + 1):
        for k in range(n // 2 + 1):
            oracle = rookmodel.t_brute(0, k, n).substitute_p(ONE - Q)
            yield f"cores k={k} n={n}", bijections.t0_via_cores(k, n) == oracle
            for i in range(k + 1):
                yield f"fixed i={i} k={k} n={n}", bijections.gamma_fixed_weight(
                    i, n, k
                ) == bijections.gamma_fixed_weight_closed(i, n, k)


def chk_decomposition(max_n: int):
    for n in range(min(max_n, 8) + 1):
        for k in range(n // 2 + 1):
            count = 0
            for path in bijections.enumerate_c2_paths(n, k):
                count += 1
                factor, core = bijections.decompose_c2(path)
                ok = bijections.is_core(core) and bijections.reassemble_c2(factor, core) == path
                yield f"path={path.literal()}", ok and core.weight() == path.weight()
            cores = sum(
                qcombinat.delannoy(n, k - i)
                * sum(1 for _ in bijections.enumerate_cores(n - 2 * k + 2 * i, n - 2 * k))
                for i in range(k + 1)
            )
            yield f"count k={k} n={n}", cores == count


def chk_gamma(max_n: int):
    for length in range(min(max_n, 11) + 1):
        for flats in range(length % 2, length + 1, 2):
            ok, rest = bijections.gamma_cancellation(length, flats)
            yield f"length={length} flats={flats}", ok and rest.is_zero()


# permutations


def chk_equidistribution(max_n: int):
    for n in range(1, max_n + 1):
        a = permstats.ascent_pattern_gf(n)
        yield f"wex/cr n={n}", a == permstats.excedance_crossing_gf(n)
        yield f"moment n={n}", a == permstats.laguerre_moment(n)
        if n <= 7:
            yield f"histories n={n}", a == permstats.laguerre_moment_by_paths(n)
        if n <= 7:
            yield f"1-3-2 bound n={n}", all(
                permstats.occ_13_2(s) <= permstats.occ_1_3_2(s) for s in permstats.permutations(n)
            )


def chk_touchard_riordan(max_n: int):
    for n in range(min(max_n, 7) + 1):
        yield f"n={n}", closedforms.touchard_riordan(n) == bijections.matching_crossing_polynomial(n)


def chk_inversion(max_n: int):
    for n in range(max_n + 1):
        yield f"n={n}", ansatz.verify_inversion(n)


SUITES: dict[str, list[tuple[str, Check]]] = {
    "rewriting": [
        ("confluence", chk_confluence),
        ("bra-ket = rook sum", chk_rewriting_rooks),
        ("recurrence = enumeration", chk_recurrence),
        ("grand = engine", chk_grand_engine),
    ],
    "bijections": [
        ("weight transport and round trip", chk_weight_transport),
        ("motzkin encoding", chk_motzkin),
        ("q-binomial factorization", chk_factorization),
    ],
    "closedforms": [
        ("T_jkn at p=1-q", chk_tjkn),
        ("T_kn specializations", chk_tkn_special),
        ("T_n via G", chk_tn),
        ("grand polynomial", chk_grand),
    ],
    "identities": [
        ("q-binomial identities", chk_identities),
        ("lattice path determinant", chk_lattice_paths),
    ],
    "appendix": [
        ("core pipeline", chk_appendix),
        ("C2 decomposition", chk_decomposition),
        ("core involution", chk_gamma),
    ],
    "permstats": [
        ("equidistribution", chk_equidistribution),
        ("Touchard-Riordan", chk_touchard_riordan),
    ],
    "inversion": [("inversion formulas", chk_inversion)],
}


def _run_check(name: str, check: Check, max_n: int) -> CheckResult:
    res = CheckResult(name)
    for descriptor, ok in check(max_n):
        res.checked += 1
        if not ok:
            res.failures.append(descriptor)
    return res


def worker_count() -> int:
    raw = os.environ.get("ROOKQ_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"ROOKQ_THREADS must be a positive integer, got {raw!r}") from None


def run_suite(suite: str, max_n: int | None = None, workers: int | None = None) -> RunReport:
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise KeyError(suite)
    jobs = []
    for name in names:
        limit = DEFAULT_MAX_N[name] if max_n is None else max_n
        for label, check in SUITES[name]:
            jobs.append((f"{name}/{label}", check, limit))
    workers = worker_count() if workers is None else workers
    start = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: _run_check(*job), jobs))
    else:
        results = [_run_check(*job) for job in jobs]
    results.sort(key=lambda r: r.name)
    return RunReport(suite, results, time.perf_counter() - start)
