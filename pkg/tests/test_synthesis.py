import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanglematrix.errors import GuardExceeded
from tanglematrix.expr import parse_expr, to_text
from tanglematrix.synthesis import LIMIT, synthesize, verify_recipe

ALLOWED = {"inf", "zero", "htwist", "vtwist", "hsum", "rot", "mirror"}


def heads(e):
    yield e.head
    for a in e.args:
        yield from heads(a)


@pytest.mark.parametrize("p,q", [(0, 0), (1, 0), (0, 1), (7, 1), (1, -7), (0, 5), (-4, 0), (13, 8), (-5, 3)])
def test_examples(p, q):
    r = synthesize(p, q)
    assert set(heads(r)) <= ALLOWED
    assert verify_recipe(r, p, q)


def test_recipe_survives_text_round_trip():
    r = synthesize(21, -13)
    assert verify_recipe(parse_expr(to_text(r)), 21, -13)


def test_wrong_target_is_rejected():
    assert not verify_recipe(synthesize(3, 2), 3, 1)


@settings(max_examples=60, deadline=None)
# recipes grow with the partial quotients; stay inside the bracket guard
@given(st.integers(-20, 20), st.integers(-20, 20))
def test_random_targets(p, q):
    assert verify_recipe(synthesize(p, q), p, q)


def test_guard():
    with pytest.raises(GuardExceeded):
        synthesize(LIMIT + 1, 1)
