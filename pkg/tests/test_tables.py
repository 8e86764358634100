import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from htcuntz.plmaps import evaluate, table_to_plmap
from htcuntz.tables import (
    Table, classify, compose, equal, expand_row, format_table, identity, invert, is_identity,
    letter_transposition, parse_table, random_table, reduce, split_letter, subtree_swap,
    table_from_json, table_to_json, validate,
)
from htcuntz.words import AdmissibilityError, is_maximal_prefix_code


def w(s):
    return tuple(int(c) for c in s)


def rows(*pairs):
    return [(w(a), w(b)) for a, b in pairs]


ROT3 = rows(("21", "1"), ("22", "21"), ("1", "22"))


def sample_points(n, count, rng):
    return [F(rng.randrange(q), q) for q in (rng.randrange(1, 200) for _ in range(count))]


def test_validate_examples():
    assert is_identity(validate(rows(("1", "1"), ("2", "2")), 2))
    g = validate(ROT3, 2)
    assert g.b_column == (w("1"), w("21"), w("22"))
    with pytest.raises(AdmissibilityError, match="prefix-free"):
        validate(rows(("1", "1"), ("12", "2")), 2)
    with pytest.raises(AdmissibilityError, match="b-column"):
        validate(rows(("1", "1"), ("2", "21")), 2)


def test_reduce_identity_on_three_words():
    g = validate(rows(("11", "11"), ("12", "12"), ("2", "2")), 2)
    assert reduce(g).rows == (((), ()),)


def test_invert_example():
    assert invert(validate(ROT3, 2)).rows == tuple(sorted(
        rows(("1", "21"), ("21", "22"), ("22", "1")), key=lambda r: r[1]))


def test_equal_examples():
    g = validate(ROT3, 2)
    assert equal(g, expand_row(g, 1))
    assert not equal(identity(2), validate(rows(("2", "1"), ("1", "2")), 2))


@pytest.mark.parametrize("text,cls", [
    ("ε -> ε", "F"),
    ("2 1 -> 1 2", "T"),
    ("12 11 2 -> 11 12 2", "V"),
    ("21 22 1 -> 1 21 22", "T"),
    ("11 12 2 -> 1 21 22", "F"),
])
def test_classify_examples(text, cls):
    assert classify(parse_table(text, 2)) == cls


def test_random_table_deterministic_and_valid():
    for n in (2, 3, 4):
        for seed in range(50):
            g = random_table(n, 4, seed)
            assert g == random_table(n, 4, seed)
            assert is_maximal_prefix_code(g.a_column, n) and is_maximal_prefix_code(g.b_column, n)
            assert g.max_length() <= 4


# composition against the pointwise composite of the piecewise-linear maps

@settings(max_examples=150, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2**32), st.integers(0, 2**32))
def test_compose_matches_pointwise_composite(n, s, t):
    g, h = random_table(n, 4, s), random_table(n, 4, t)
    gh = compose(g, h)
    G, H, GH = table_to_plmap(g), table_to_plmap(h), table_to_plmap(gh)
    rng = random.Random(s ^ t)
    for y in sample_points(n, 30, rng):
        assert evaluate(GH, y) == evaluate(G, evaluate(H, y))


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 4), st.integers(0, 2**32))
def test_reduce_is_canonical(n, s):
    g = random_table(n, 4, s)
    r = reduce(g)
    assert reduce(r) == r
    rng = random.Random(s)
    bigger = g
    for _ in range(3):
        bigger = expand_row(bigger, rng.randrange(len(bigger)))
    assert reduce(bigger) == r
    # no sibling family survives
    stems = {}
    for a, b in r.rows:
        if a and b and a[-1] == b[-1]:
            stems.setdefault((a[:-1], b[:-1]), set()).add(a[-1])
    assert all(len(v) < n for v in stems.values())


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 3), st.integers(0, 2**32))
def test_group_laws(n, s):
    rng = random.Random(s)
    g, h, u = (random_table(n, 4, rng) for _ in range(3))
    assert equal(compose(compose(g, h), u), compose(g, compose(h, u)))
    assert equal(compose(g, identity(n)), g) and equal(compose(identity(n), g), g)
    assert is_identity(compose(g, invert(g)))
    assert is_identity(compose(invert(g), g))


def test_apply_on_finite_words():
    g = validate(ROT3, 2)
    assert g.apply(w("1")) == w("21")
    assert g.apply(w("2212")) == w("112")
    with pytest.raises(ValueError):
        g.apply(w("2"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generator_tables_are_admissible(n):
    for i in range(1, n + 1):
        for t in (subtree_swap(n, i), split_letter(n, i), letter_transposition(n, i)):
            assert is_maximal_prefix_code(t.a_column, n)
    assert is_identity(subtree_swap(n, n)) and is_identity(letter_transposition(n, n))
    # the split sends i to ii
    for i in range(1, n + 1):
        assert split_letter(n, i).apply((i,)) == (i, i)


def test_text_and_json_round_trip():
    for n in (2, 3, 10):
        for seed in range(30):
            g = random_table(n, 3, seed)
            assert parse_table(format_table(g), n) == g
            assert table_from_json(table_to_json(g)) == g
    assert table_to_json(validate(ROT3, 2)) == {
        "base": 2, "rows": [{"a": "21", "b": "1"}, {"a": "22", "b": "21"}, {"a": "1", "b": "22"}]}


def test_parse_errors_name_the_problem():
    with pytest.raises(ValueError, match="->"):
        parse_table("1 2", 2)
    with pytest.raises(AdmissibilityError, match="size mismatch"):
        parse_table("1 2 -> 1 21 22", 2)
    with pytest.raises(ValueError, match="token 2"):
        parse_table("1 3 -> 1 2", 2)
    with pytest.raises(AdmissibilityError, match="a-column: not maximal"):
        parse_table("1 21 -> 1 2", 2)
