import math
import random
from fractions import Fraction

import pytest

from conftest import oracle_sail, random_unimodular
from latticetrig.angles import (
    OrdinaryAngle,
    adjacent,
    adjacent_tan,
    angle_of,
    arctan,
    congruent,
    is_right,
    sail,
    tan_of,
    transpose,
    transpose_tan,
    trig,
)
from latticetrig.contfrac import eval_signed
from latticetrig.numbers import LatticeError


def test_trig_examples():
    assert trig(angle_of((1, 0), (0, 0), (5, 7))) == (7, 5, Fraction(7, 5))
    assert trig(OrdinaryAngle((0, 0), (1, 0), (1, 1))) == (1, 1, 1)
    assert trig(OrdinaryAngle((0, 0), (2, -1), (0, -1))) == (2, 1, 2)


def test_zero_angle():
    z = arctan(0)
    assert z.is_zero
    assert trig(z) == (0, 1, 0)
    assert angle_of((2, 0), (0, 0), (5, 0)).is_zero


def test_straight_angle_rejected():
    with pytest.raises(LatticeError, match="straight"):
        angle_of((1, 0), (0, 0), (-1, 0))
    with pytest.raises(LatticeError):
        OrdinaryAngle((0, 0), (2, 1), (-2, -1))


def test_arctan():
    a = arctan(Fraction(7, 5))
    assert a.ray1 == (1, 0) and a.ray2 == (5, 7)
    assert arctan(1).ray2 == (1, 1)
    with pytest.raises(LatticeError, match="below one"):
        arctan(Fraction(1, 2))


def test_tan_arctan_identity_bulk():
    rng = random.Random(31)
    for _ in range(1000):
        den = rng.randrange(1, 200)
        num = rng.randrange(den, 400)
        q = Fraction(num, den)
        assert tan_of(arctan(q)) == q


def test_arctan_tan_congruence():
    rng = random.Random(37)
    for _ in range(500):
        a = _random_angle(rng)
        assert congruent(arctan(tan_of(a)), a)


def _random_angle(rng):
    while True:
        r1 = (rng.randrange(-8, 9), rng.randrange(-8, 9))
        r2 = (rng.randrange(-8, 9), rng.randrange(-8, 9))
        try:
            from latticetrig.plane import primitive

            return OrdinaryAngle((0, 0), primitive(r1)[0], primitive(r2)[0])
        except LatticeError:
            continue


def test_sail_examples():
    s = sail(arctan(Fraction(7, 5)))
    assert s.vertices == ((1, 0), (1, 1), (5, 7))
    assert s.lls == (1, 2, 2)
    assert sail(arctan(1)).vertices == ((1, 0), (1, 1))
    assert sail(arctan(1)).lls == (1,)
    assert sail(arctan(Fraction(7, 3))).lls == (2, 2, 1)
    with pytest.raises(LatticeError, match="no sail"):
        sail(arctan(0))


def test_sail_cf_value_and_hull_oracle_small():
    # the full 1..60 sweep runs in the acceptance suite; spot-check here
    for s, c in ((7, 5), (7, 3), (9, 2), (13, 8), (5, 1), (1, 1)):
        if math.gcd(s, c) != 1:
            continue
        a = arctan(Fraction(s, c))
        sl = sail(a)
        assert eval_signed(sl.lls) == Fraction(s, c)
        assert list(sl.vertices) == oracle_sail((1, 0), (c, s))


def test_sail_in_arbitrary_frame():
    rng = random.Random(41)
    for _ in range(50):
        a = _random_angle(rng)
        if a.is_zero:
            continue
        sl = sail(a)
        assert eval_signed(sl.lls) == tan_of(a)
        shifted = [(p[0] - a.vertex[0], p[1] - a.vertex[1]) for p in sl.vertices]
        assert shifted == oracle_sail(a.ray1, a.ray2)


def test_transpose_adjacent_trig():
    assert tan_of(transpose(arctan(Fraction(7, 5)))) == Fraction(7, 3)
    assert tan_of(adjacent(arctan(Fraction(7, 5)))) == Fraction(7, 4)
    assert congruent(transpose(arctan(1)), arctan(1))
    assert congruent(adjacent(arctan(1)), arctan(1))
    assert transpose_tan(Fraction(7, 5)) == Fraction(7, 3)
    assert adjacent_tan(Fraction(7, 5)) == Fraction(7, 4)


def test_transpose_adjacent_involutions_and_cosine_identity():
    rng = random.Random(43)
    for _ in range(1000):
        den = rng.randrange(1, 60)
        num = rng.randrange(den, 140)
        q = Fraction(num, den)
        a = arctan(q)
        assert congruent(transpose(transpose(a)), a)
        assert congruent(adjacent(adjacent(a)), a)
        t = trig(a)
        tt = trig(transpose(a))
        assert tt.sin == t.sin
        assert (tt.cos * t.cos) % t.sin == 1 % t.sin
        ta = trig(adjacent(a))
        assert ta.sin == t.sin
        assert (ta.cos * (-t.cos)) % t.sin == 1 % t.sin


def test_sine_is_sublattice_index():
    rng = random.Random(47)
    for _ in range(200):
        a = _random_angle(rng)
        from latticetrig.plane import det

        assert trig(a).sin == abs(det(a.ray1, a.ray2))


def test_right_angles():
    assert is_right(arctan(1))
    assert is_right(arctan(2))
    assert not is_right(arctan(Fraction(7, 5)))
    assert not is_right(arctan(3))


def test_trig_invariance_under_affine_maps():
    rng = random.Random(53)
    for _ in range(100):
        a = _random_angle(rng)
        m = random_unimodular(rng, proper=rng.random() < 0.5)
        b = angle_of(
            m.apply((a.vertex[0] + a.ray1[0], a.vertex[1] + a.ray1[1])),
            m.apply(a.vertex),
            m.apply((a.vertex[0] + a.ray2[0], a.vertex[1] + a.ray2[1])),
        )
        assert trig(a) == trig(b)


def test_congruence_iff_equal_tan():
    rng = random.Random(59)
    for _ in range(200):
        a = _random_angle(rng)
        m = random_unimodular(rng, proper=True)
        b = angle_of(
            m.apply((a.vertex[0] + 3 * a.ray1[0], a.vertex[1] + 3 * a.ray1[1])),
            m.apply(a.vertex),
            m.apply((a.vertex[0] + 2 * a.ray2[0], a.vertex[1] + 2 * a.ray2[1])),
        )
        assert congruent(a, b)
    assert not congruent(arctan(1), arctan(2))


def test_opposite_interior_angles_congruent():
    rng = random.Random(61)
    done = 0
    while done < 100:
        b = (rng.randrange(-6, 7), rng.randrange(-6, 7))
        c = (rng.randrange(-6, 7), rng.randrange(-6, 7))
        w = (rng.randrange(-5, 6), rng.randrange(-5, 6))
        if b == c or w == (0, 0):
            continue
        from latticetrig.plane import det, vsub

        if det(vsub(c, b), w) == 0:
            continue
        a = (b[0] + w[0], b[1] + w[1])
        d = (c[0] - w[0], c[1] - w[1])
        assert congruent(angle_of(a, b, c), angle_of(d, c, b))
        done += 1
