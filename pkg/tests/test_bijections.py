from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rookq.bijections import (
    Involution,
    Step,
    WeightedMotzkinPath,
    alpha,
    beta,
    c2_weight_sum,
    core_u,
    core_v,
    decompose_c2,
    enumerate_c2_paths,
    enumerate_cores,
    factorization_check,
    from_word,
    gamma,
    gamma_cancellation,
    gamma_fixed_weight,
    gamma_fixed_weight_closed,
    gamma_word,
    inv_to_motzkin,
    involutions,
    is_core,
    matching_crossing_polynomial,
    motzkin_to_inv,
    mu,
    phi,
    phi_inv,
    reassemble_c2,
    t0_via_cores,
    to_word,
)
from rookq.polyring import ONE, Q, LaurentPoly, q_pow
from rookq.qcombinat import delannoy
from rookq.rookmodel import RookPlacement, YoungShape, crosses, t_brute

from conftest import rook_placements

ALPHA_SHAPE = YoungShape(11, 5, (6, 6, 6, 4, 4))
ALPHA_ROOKS = {(3, 0), (4, 2), (2, 3), (0, 5)}
PHI_SHAPE = YoungShape(10, 5, (5, 5, 5, 4, 2))
PHI_ROOKS = {(3, 0), (2, 3), (1, 2)}

# a worked core and its image under gamma
FIG_CORE = "xxYxzyxxYxxxxzyyYyyzY"
FIG_IMAGE = "xxYxzyxxYxxzyyxxYyYzY"


def test_alpha_example():
    r = RookPlacement(ALPHA_SHAPE, ALPHA_ROOKS)
    inv = alpha(r)
    assert inv.sorted_arches() == [(1, 6), (3, 5), (4, 9), (8, 11)]
    assert crosses(r) == 8
    assert beta(r).boundary_word() == "EES"


def test_beta_example():
    r = RookPlacement(YoungShape(9, 4, (5, 5, 4, 3)), {(2, 1), (0, 3)})
    b = beta(r)
    assert b.boundary_word() == "EESES"
    assert b == YoungShape(5, 2, (3, 2))


def test_phi_example():
    r = RookPlacement(PHI_SHAPE, PHI_ROOKS)
    inv, b = phi(r)
    assert inv.sorted_arches() == [(1, 6), (4, 9), (5, 8)]
    assert sorted(inv.fixed) == [2, 3, 7, 10]
    assert inv.heights() == {2: 1, 3: 1, 7: 2, 10: 0}
    assert inv.crossings() == 2 and mu(inv) == 6
    assert b == YoungShape(4, 2, (2, 1))
    assert crosses(r) == b.size + mu(inv) == 9


@settings(max_examples=300)
@given(rook_placements(10))
def test_weight_transport_and_round_trip(r):
    inv, b = phi(r)
    assert crosses(r) == b.size + mu(inv)
    assert phi_inv(inv, b) == r


def test_empty_placement_gives_identity():
    r = RookPlacement(PHI_SHAPE, frozenset())
    inv, b = phi(r)
    assert inv == Involution.identity(10)
    assert b == PHI_SHAPE


def test_phi_inv_rejects_size_mismatch():
    with pytest.raises(ValueError):
        phi_inv(Involution.identity(3), YoungShape(2, 1, (1,)))


def test_involution_validation():
    with pytest.raises(ValueError):
        Involution(3, {(1, 2)}, set())
    with pytest.raises(ValueError):
        Involution.from_mapping([2, 3, 1])
    assert Involution.from_mapping([2, 1, 3]).sorted_arches() == [(1, 2)]


def test_involution_counts():
    # telephone numbers
    assert [sum(1 for _ in involutions(n)) for n in range(8)] == [1, 1, 2, 4, 10, 26, 76, 232]


def test_history_example():
    inv = Involution(10, {(1, 4), (2, 7), (5, 10), (6, 8)}, {3, 9})
    path = inv_to_motzkin(inv)
    assert path.literal() == "NE,NE,E(2),SE(1),NE,NE,SE(2),SE,E(1),SE"
    assert path.weight() == q_pow(6) == q_pow(mu(inv))
    assert motzkin_to_inv(path) == inv


@given(st.integers(0, 8), st.data())
def test_motzkin_round_trip(n, data):
    invs = list(involutions(n))
    inv = data.draw(st.sampled_from(invs))
    path = inv_to_motzkin(inv)
    assert motzkin_to_inv(path) == inv
    assert sum(s.exponent for s in path.steps) == mu(inv)


def test_path_literal_round_trip():
    lag = WeightedMotzkinPath.parse("NE(0),E(y1),SE(y0)")
    assert lag.steps[1] == Step("E", 1, 1, 1)
    assert lag.weight() == LaurentPoly.monomial(1, eq=1, ey=2)
    p = WeightedMotzkinPath.parse("NE,E(1),SE(-1)")
    assert p.steps[2] == Step("SE", 1, -1)
    assert WeightedMotzkinPath.parse(p.literal()) == p
    with pytest.raises(ValueError):
        WeightedMotzkinPath.parse("NE,XX")
    with pytest.raises(ValueError):
        WeightedMotzkinPath.parse("SE")


def test_factorization():
    for n in range(8):
        for k in range(n + 1):
            for j in range(k + 1):
                assert factorization_check(j, k, n)


def test_c2_sum_is_t0_at_one_minus_q():
    for n in range(8):
        for k in range(n // 2 + 1):
            assert c2_weight_sum(n, k) == t_brute(0, k, n).substitute_p(ONE - Q)


def test_decomposition_round_trip_and_count():
    for n in range(8):
        for k in range(n // 2 + 1):
            paths = list(enumerate_c2_paths(n, k))
            for path in paths:
                factor, core = decompose_c2(path)
                assert is_core(core)
                assert core.weight() == path.weight()
                assert reassemble_c2(factor, core) == path
            count = sum(
                delannoy(n, k - i) * sum(1 for _ in enumerate_cores(n - 2 * k + 2 * i, n - 2 * k))
                for i in range(k + 1)
            )
            assert count == len(paths)


def test_core_is_its_own_decomposition():
    core = from_word("xxYzY")
    factor, again = decompose_c2(core)
    assert again == core and factor == "UUUUU"


def test_decompose_rejects_non_c2_path():
    with pytest.raises(ValueError):
        decompose_c2(WeightedMotzkinPath.parse("NE,SE(1)"))


def test_gamma_example_pair():
    i = 9
    assert (core_u(FIG_CORE), core_v(FIG_CORE, i)) == (4, 2)
    assert gamma_word(i, FIG_CORE) == FIG_IMAGE
    assert gamma_word(i, FIG_IMAGE) == FIG_CORE
    w = from_word(FIG_CORE).weight()
    assert w == q_pow(19)
    assert from_word(FIG_IMAGE).weight() == -w


def test_gamma_pairs_involving_flat_steps():
    # a last y at height i, and an a y^j block followed by an East step
    assert gamma_word(1, "xzy") == "zxY"
    assert gamma_word(2, "xxYzy") == "xYxzY"


def test_gamma_fixed_point():
    c = from_word("xxxzYzYY")
    assert gamma(3, c) == c


def test_gamma_rejects_non_core():
    with pytest.raises(ValueError):
        gamma(1, from_word("xy"))
    with pytest.raises(ValueError):
        gamma_word(2, "xzY")


@pytest.mark.parametrize("length", range(0, 11))
def test_gamma_is_sign_reversing_involution(length):
    for flats in range(length % 2, length + 1, 2):
        ok, rest = gamma_cancellation(length, flats)
        assert ok and rest.is_zero()


def test_fixed_weight_closed_form():
    for m in range(5):
        for i in range(5):
            n, k = m + 2 * i, i
            assert gamma_fixed_weight(i, n, k) == gamma_fixed_weight_closed(i, n, k)


def test_core_pipeline():
    for n in range(9):
        for k in range(n // 2 + 1):
            assert t0_via_cores(k, n) == t_brute(0, k, n).substitute_p(ONE - Q)


def test_matching_polynomial_small():
    assert matching_crossing_polynomial(2) == 2 + Q
    assert matching_crossing_polynomial(0) == ONE
    assert matching_crossing_polynomial(3).at_q(1).as_int() == 15


def test_word_path_round_trip():
    for c in enumerate_cores(7, 3):
        assert from_word(to_word(c)) == c
