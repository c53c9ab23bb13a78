from pathlib import Path

import pytest

from helpers import random_diagram
from worked_values import f5_rows
from tanglematrix.bracket import bracket
from tanglematrix.cyclotomic import zphi_mul_power
from tanglematrix.diagram import (
    close, compose, hsum, htwist, identity, inf, insert_kink, load_diagram, vsum, zero,
)
from tanglematrix.errors import ArityError, GuardExceeded, PhaseIncoherent
from tanglematrix.invariant import PMatrix, canonicalize, closure_brackets, compute_F

FIXTURES = Path(__file__).parent / "fixtures"


def test_examples():
    assert compute_F(identity()) == PMatrix.square(1, 0, 0, 1)
    assert compute_F(inf()) == PMatrix.vector(1, 0)
    assert compute_F(zero()) == PMatrix.vector(0, 1)
    b = vsum(htwist(1), identity())
    assert compute_F(compose(b, b)) == PMatrix.square(1, 0, 2, 1)
    assert compute_F(hsum(inf(), inf())) == PMatrix.vector(0, 0)


def test_canonicalize_examples():
    assert canonicalize([[-1, 0], [0, -1]]).rows == ((1, 0), (0, 1))
    assert canonicalize([[0, 0], [0, 0]]).rows == ((0, 0), (0, 0))
    assert canonicalize([[0, -3], [5, 0]]).rows == ((0, 3), (-5, 0))


def test_pmatrix_is_a_sign_class():
    m = PMatrix([[0, 2, -1, 4], [3, 0, 0, 1]])
    assert PMatrix([[-v for v in r] for r in m.rows]) == m
    assert m.holes == 2
    with pytest.raises(ArityError):
        PMatrix([[1, 2, 3], [4, 5, 6]])


def test_ball_invariant_is_the_two_closures(rng):
    for _ in range(30):
        _, b = random_diagram(rng, 0)
        z1 = bracket(close(b, "numerator"))
        z2 = zphi_mul_power(bracket(close(b, "denominator")), 2)
        f = compute_F(b)
        nz = [z for z in (z1, z2) if z.magnitude]
        if not nz:
            assert f.is_zero()
            continue
        shift = -nz[0].phase
        raw = [zphi_mul_power(z, shift).magnitude for z in (z1, z2)]
        assert f == PMatrix.vector(*raw)


def test_column_order_follows_tuples():
    # two holes: hsum(I, vsum(htwist(1), I)) has a product structure
    d = hsum(identity(), vsum(htwist(1), identity()))
    raw = closure_brackets(d)
    assert len(raw[0]) == 4
    assert compute_F(d).width == 4


def test_r1_kinks_do_not_change_F(rng):
    for _ in range(10):
        _, d = random_diagram(rng, 1)
        for i in range(len(d.arcs)):
            assert compute_F(insert_kink(d, i, 1)) == compute_F(d)


def test_determinant_is_class_invariant(rng):
    for _ in range(10):
        _, s = random_diagram(rng, 1)
        (a, g), (b, d) = compute_F(s).rows
        assert a * d - b * g == (-a) * (-d) - (-b) * (-g)


def test_phase_incoherent_on_nonplanar_input():
    d = load_diagram(FIXTURES / "nonplanar.json")
    with pytest.raises(PhaseIncoherent):
        compute_F(d)


def test_hole_guard():
    d = identity()
    for _ in range(5):
        d = hsum(d, identity())
    assert len(d.holes) == 6
    with pytest.raises(GuardExceeded):
        compute_F(d)


def test_f5_fixture_shape():
    rows = f5_rows()
    assert [len(r) for r in rows] == [32, 32]
    assert PMatrix(rows).holes == 5
