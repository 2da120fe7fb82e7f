import random

import pytest

from conftest import random_unimodular
from latticetrig.numbers import LatticeError
from latticetrig.plane import (
    AffMap,
    det,
    lattice_length,
    polygon_lattice_area,
    primitive,
    ray_orientation,
    signed_area,
    unit_distance,
)


def test_lattice_length():
    assert lattice_length((0, 0), (5, 7)) == 1
    assert lattice_length((1, 1), (5, 7)) == 2
    assert lattice_length((0, 0), (4, 0)) == 4
    with pytest.raises(LatticeError, match="degenerate"):
        lattice_length((2, 3), (2, 3))


def test_signed_area():
    assert signed_area((0, 0), (1, 0), (0, 1)) == 1
    assert signed_area((0, 0), (3, 7), (1, 0)) == -7
    assert signed_area((0, 0), (2, 0), (0, 2)) == 4


def test_ray_orientation():
    assert ray_orientation((1, 0), (0, 0), (0, 1)) == 1
    assert ray_orientation((0, 1), (0, 0), (1, 0)) == -1
    assert ray_orientation((1, 1), (0, 0), (2, 2)) == 0


def test_unit_distance():
    assert unit_distance((1, 0), (1, 1), (0, 0))
    assert not unit_distance((0, 0), (2, 0), (0, 2))
    assert unit_distance((0, 0), (1, 0), (0, 1))


def test_primitive():
    assert primitive((4, 6)) == ((2, 3), 2)
    assert primitive((0, -5)) == ((0, -1), 5)
    assert primitive((5, 7)) == ((5, 7), 1)
    with pytest.raises(LatticeError):
        primitive((0, 0))


def test_invariance_under_unimodular_maps():
    rng = random.Random(17)
    maps = [random_unimodular(rng, proper=rng.random() < 0.5) for _ in range(100)]
    for _ in range(100):
        pts = [(rng.randrange(-9, 10), rng.randrange(-9, 10)) for _ in range(3)]
        a, b, c = pts
        if a == b:
            continue
        m = maps[rng.randrange(len(maps))]
        ma, mb, mc = m.apply(a), m.apply(b), m.apply(c)
        assert lattice_length(a, b) == lattice_length(ma, mb)
        assert abs(signed_area(a, b, c)) == abs(signed_area(ma, mb, mc))
        # orientation sign flips under improper maps, is kept by proper ones
        expect = ray_orientation(a, b, c) if m.is_proper else -ray_orientation(a, b, c)
        assert ray_orientation(ma, mb, mc) == expect


def test_unit_distance_iff_area_equals_length():
    rng = random.Random(23)
    for _ in range(400):
        a = (rng.randrange(-6, 7), rng.randrange(-6, 7))
        b = (rng.randrange(-6, 7), rng.randrange(-6, 7))
        c = (rng.randrange(-6, 7), rng.randrange(-6, 7))
        if a == b:
            continue
        assert unit_distance(a, b, c) == (
            abs(signed_area(a, b, c)) == lattice_length(a, b)
        )


def test_polygon_lattice_area():
    assert polygon_lattice_area([(0, 0), (1, 0), (0, 1)]) == 1
    assert polygon_lattice_area([(0, 0), (1, 0), (1, 1), (0, 1)]) == 2


def test_affmap_validation():
    with pytest.raises(LatticeError):
        AffMap((2, 0, 0, 1))
