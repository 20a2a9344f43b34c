from __future__ import annotations

import math

import pytest
from hypothesis import given

from rookq.polyring import ONE, P, Q, Y, ZERO, q_pow
from rookq.rookmodel import (
    LiteralError,
    RookPlacement,
    YoungShape,
    all_shapes,
    crosses,
    dyck_full_placement,
    enumerate_placements,
    parse_rooks,
    placement_sum,
    rooks_literal,
    shapes,
    t0_rec,
    t_brute,
    t_full,
    t_kn,
    t_rec,
    weight,
)

from conftest import rook_placements, young_shapes


def test_small_table():
    assert t_brute(0, 1, 3) == P * Q + 2 * P
    assert t_brute(1, 1, 3) == ONE + Q + Q * Q
    assert t_full(2) == ONE + (ONE + Q + P) * Y + Y * Y


def test_shape_validation():
    with pytest.raises(ValueError):
        YoungShape(3, 2, (1, 2))
    with pytest.raises(ValueError):
        YoungShape(3, 2, (2, 0))
    with pytest.raises(ValueError):
        YoungShape(3, 4, ())


def test_shape_counts():
    for n in range(7):
        for k in range(n + 1):
            assert sum(1 for _ in shapes(n, k)) == math.comb(n, k)


@given(young_shapes())
def test_boundary_word_round_trip(shape):
    w = shape.boundary_word()
    assert len(w) == shape.n and w.count("S") == shape.k
    assert YoungShape.from_word(w) == shape


def test_boundary_word_example():
    assert YoungShape(11, 5, (6, 6, 6, 4, 4)).boundary_word() == "EEEESSEESSS"


@given(young_shapes())
def test_literal_round_trip(shape):
    assert YoungShape.parse(shape.literal()) == shape


def test_literal_errors_have_positions():
    with pytest.raises(LiteralError) as info:
        YoungShape.parse("n=7,k=3,part=4,2,1")
    assert info.value.position == 7
    assert parse_rooks("") == frozenset()
    assert rooks_literal(parse_rooks("(2,0),(0,1)")) == "(0,1),(2,0)"
    with pytest.raises(LiteralError):
        parse_rooks("(1,1")


def test_placement_validation():
    s = YoungShape(4, 2, (2, 1))
    with pytest.raises(ValueError):
        RookPlacement(s, {(0, 0), (1, 0)})
    with pytest.raises(ValueError):
        RookPlacement(s, {(1, 1)})


def test_first_column_example():
    shape = YoungShape(10, 6, (4, 3, 3, 2, 2, 1))
    common = {(1, 2), (3, 1)}
    total = ZERO
    for row in (5, 4, 2, 0):
        total = total + weight(RookPlacement(shape, common | {(row, 0)}))
    assert total == (P + P * Q + P * Q**2 + P * Q**3) * P**2 * Q**3


def test_no_rook_placement_counts_every_cell():
    s = YoungShape(7, 3, (4, 2, 1))
    assert crosses(RookPlacement(s, frozenset())) == s.size


@given(young_shapes(7))
def test_placement_sum_at_p0_is_area(shape):
    # only the empty placement survives p = 0
    assert placement_sum(shape).substitute_p(ZERO) == q_pow(shape.size)


@given(rook_placements())
def test_crosses_bounded_by_size(r):
    assert 0 <= crosses(r) <= r.shape.size - len(r.rooks)


def test_enumeration_is_duplicate_free():
    s = YoungShape(7, 3, (4, 3, 1))
    seen = [frozenset(r.rooks) for r in enumerate_placements(s)]
    assert len(seen) == len(set(seen))


def test_recurrence_matches_enumeration():
    for n in range(8):
        for k in range(n + 1):
            for j in range(k + 1):
                assert t_rec(j, k, n) == t_brute(j, k, n)
            assert t0_rec(k, n) == t_brute(0, k, n)


def test_out_of_range_indices_are_zero():
    assert t_rec(2, 1, 3) == ZERO
    assert t_brute(0, 5, 3) == ZERO
    assert t_rec(0, 0, 0) == ONE


def test_transpose_symmetry():
    for n in range(7):
        for k in range(n + 1):
            assert t_kn(k, n) == t_kn(n - k, n)


def test_q1_specialization_counts_placements():
    # at p = q = 1, T_n counts rook placements on all shapes of half-perimeter n
    for n in range(6):
        total = sum(sum(1 for _ in enumerate_placements(s)) for s in all_shapes(n))
        assert t_full(n).substitute_p(ONE).at_q(1).substitute_y(ONE).as_int() == total


def test_dyck_placement_is_cross_free():
    for n in range(9):
        for s in all_shapes(n):
            r = dyck_full_placement(s)
            if s.is_dyck():
                assert r is not None and len(r.rooks) == s.k and crosses(r) == 0
            else:
                assert r is None
