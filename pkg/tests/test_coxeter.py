import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tanglematrix import coxeter as cx
from tanglematrix.algebra import det
from tanglematrix.invariant import PMatrix

small = st.integers(-9, 9)
squares = st.builds(PMatrix.square, small, small, small, small)
words = st.text(alphabet="xyz", max_size=24)
PROBE = PMatrix.square(1, 2, 3, 5)


def test_group_has_sixteen_elements():
    elems, table = cx.enumerate_group()
    assert len(elems) == 16
    assert len(table) == 256
    assert cx.IDENTITY in elems
    # every row of the table is a permutation
    for g in elems:
        assert {table[g, h] for h in elems} == set(elems)


def test_normal_form_examples():
    assert str(cx.reduce("")) == "1"
    assert str(cx.reduce("xx")) == "1"
    assert str(cx.reduce("yxyx")) == "xyxy"
    assert str(cx.reduce("zxz")) == "x"
    assert cx.reduce("xyx") == cx.reduce("yxyxy")
    with pytest.raises(ValueError):
        cx.reduce("xq")


@pytest.mark.parametrize("rel", cx.RELATIONS)
def test_relations_reduce_to_identity(rel):
    assert cx.reduce(rel) == cx.IDENTITY


@given(squares)
def test_relations_act_trivially(m):
    for rel in cx.RELATIONS:
        assert cx.act_word(rel, m) == m


@given(words, squares)
def test_normal_form_acts_like_the_word(w, m):
    assert cx.act(cx.reduce(w), m) == cx.act_word(w, m)


@given(words, words, squares)
def test_action_is_compatible_with_products(u, v, m):
    g, h = cx.reduce(u), cx.reduce(v)
    assert cx.act(cx.multiply(g, h), m) == cx.act(h, cx.act(g, m))


@given(words, squares)
def test_action_preserves_determinant(w, m):
    assert det(cx.act_word(w, m)) == det(m)


def test_probe_orbit_is_faithful():
    elems, _ = cx.enumerate_group()
    assert len({cx.act(g, PROBE) for g in elems}) == 16


@pytest.mark.parametrize("word", ["x", "xy", "xyx", "xyxy", "y", "yx", "yxy", "yxyx"])
def test_no_swap_rotation_word_equals_the_mirror(word):
    assert cx.act_word(word, PROBE) != cx.act_word("z", PROBE)


def test_generators_are_distinct_operators():
    # x, y, z, xy, yx, xz, yz, xyx pairwise act differently on the probe
    names = ["x", "y", "z", "xy", "yx", "xz", "yz", "xyx"]
    images = {n: cx.act_word(n, PROBE) for n in names}
    assert len(set(images.values())) == len(names)
    assert all(img != PROBE for img in images.values())


def test_associativity_of_table():
    elems, table = cx.enumerate_group()
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert table[table[a, b], c] == table[a, table[b, c]]
