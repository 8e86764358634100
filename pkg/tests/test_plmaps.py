from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from htcuntz.intervals import NadicInterval
from htcuntz.plmaps import (
    PLMap, check_vtf_conditions, discontinuities, evaluate, is_nadic, plmap_to_table, slope,
    table_to_plmap,
)
from htcuntz.tables import classify, identity, parse_table, random_table, reduce, validate


def w(s):
    return tuple(int(c) for c in s)


ROT3 = validate([(w("21"), w("1")), (w("22"), w("21")), (w("1"), w("22"))], 2)


def test_identity_map():
    m = table_to_plmap(identity(2))
    assert len(m.pieces) == 1 and slope(m.pieces[0]) == 1
    assert evaluate(m, F(1, 3)) == F(1, 3)
    assert plmap_to_table(m) == identity(2)
    assert check_vtf_conditions(m)


def test_three_piece_map():
    m = table_to_plmap(ROT3)
    got = [(str(d), str(r), slope((d, r))) for d, r in m.pieces]
    assert got == [("[0, 1/2)", "[1/2, 3/4)", F(1, 2)),
                   ("[1/2, 3/4)", "[3/4, 1)", F(1)),
                   ("[3/4, 1)", "[0, 1/2)", F(2))]
    assert evaluate(m, F(1, 4)) == F(5, 8)
    assert evaluate(m, F(3, 4)) == 0
    assert plmap_to_table(m) == ROT3
    assert discontinuities(m) == [F(3, 4)]


def test_half_rotation_from_pieces():
    m = PLMap(2, ((NadicInterval(0, 1, 2), NadicInterval(1, 1, 2)),
                  (NadicInterval(1, 1, 2), NadicInterval(0, 1, 2))))
    assert plmap_to_table(m).rows == ((w("2"), w("1")), (w("1"), w("2")))


def test_overlapping_ranges_rejected():
    m = PLMap(2, ((NadicInterval(0, 1, 2), NadicInterval(0, 1, 2)),
                  (NadicInterval(1, 1, 2), NadicInterval(0, 1, 2))))
    rep = check_vtf_conditions(m)
    assert not rep
    assert any("not bijective" in p for p in rep.problems)


@pytest.mark.parametrize("x,n,want", [(F(1, 2), 4, True), (F(1, 3), 2, False),
                                      (F(1, 4), 6, True), (F(1, 5), 6, False), (F(5, 9), 3, True)])
def test_is_nadic(x, n, want):
    assert is_nadic(x, n) is want


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2**32))
def test_tables_give_valid_maps(n, s):
    g = random_table(n, 4, s)
    m = table_to_plmap(g)
    assert check_vtf_conditions(m)
    assert plmap_to_table(m) == reduce(g)
    assert PLMap.from_json(m.to_json()) == m
    # slopes are powers of n
    powers = {F(n) ** k for k in range(-4, 5)}
    assert all(slope(piece) in powers for piece in m.pieces)
    # the class of g agrees with the number of jumps of its map
    jumps = len(discontinuities(m))
    cls = classify(g)
    assert (cls == "F") == (jumps == 0 and evaluate(m, F(0)) == 0)
    if cls == "V":
        assert jumps >= 1


def test_json_shape():
    assert table_to_plmap(parse_table("2 1 -> 1 2", 2)).to_json() == {
        "base": 2, "pieces": [{"dom": {"num": 0, "depth": 1}, "ran": {"num": 1, "depth": 1}},
                              {"dom": {"num": 1, "depth": 1}, "ran": {"num": 0, "depth": 1}}]}
