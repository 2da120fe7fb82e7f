import random
from fractions import Fraction

import pytest

from conftest import random_convex_polygon
from latticetrig.angles import arctan
from latticetrig.expanded import NormalForm
from latticetrig.numbers import LatticeError
from latticetrig.polygons import (
    TWO_PI,
    Polygon,
    SingularityPair,
    extract_separators,
    msum_of_exterior,
    polygon_criterion,
    synthesize_polygon,
    toric_polygon_build,
    toric_triangle_check,
)


def cyclic_equal(a, b) -> bool:
    a, b = list(a), list(b)
    return len(a) == len(b) and any(b == a[i:] + a[:i] for i in range(len(a)))


def test_polygon_validation():
    with pytest.raises(LatticeError):
        Polygon(((0, 0), (1, 0)))
    with pytest.raises(LatticeError, match="convex"):
        Polygon(((0, 0), (1, 0), (2, 0), (0, 1)))  # collinear edge pair
    with pytest.raises(LatticeError, match="convex"):
        Polygon(((0, 0), (0, 1), (1, 0)))  # clockwise


def test_square_separators():
    sq = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
    assert extract_separators(sq) == [-2, -2, -2]
    assert msum_of_exterior(sq.interior_angles(), [-2, -2, -2]) == TWO_PI


def test_triangle_as_polygon():
    tri = Polygon(((0, 0), (1, 0), (0, 1)))
    m = extract_separators(tri)
    assert msum_of_exterior(tri.interior_angles(), m) == TWO_PI


def test_criterion_square():
    assert polygon_criterion([arctan(1)] * 4) == [-2, -2, -2]


def test_criterion_triangle_negative_case():
    # with separators (-1, -1) three right corners sum to pi, not 2*pi
    assert msum_of_exterior([arctan(1)] * 3, [-1, -1]) == NormalForm(1, Fraction(0))


def test_synthesize_square():
    p = synthesize_polygon([arctan(1)] * 4, [-2, -2, -2])
    assert sorted(p.angle_tans()) == [1, 1, 1, 1]
    from latticetrig.plane import polygon_lattice_area

    # a fundamental cell has lattice area 2 (two simple triangles)
    assert polygon_lattice_area(p.vertices) == 2


def test_round_trip_random_polygons():
    rng = random.Random(131)
    for _ in range(100):
        poly = random_convex_polygon(rng)
        m = extract_separators(poly)
        angles = poly.interior_angles()
        assert msum_of_exterior(angles, m) == TWO_PI
        rebuilt = synthesize_polygon(angles, m)
        assert cyclic_equal(rebuilt.angle_tans(), poly.angle_tans())


def test_angle_data_does_not_determine_shape():
    # square and double square share angles and separators, differ as polygons
    sq = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
    rect = Polygon(((0, 0), (2, 0), (2, 1), (0, 1)))
    assert sq.angle_tans() == rect.angle_tans()
    assert extract_separators(sq) == extract_separators(rect)
    from latticetrig.plane import polygon_lattice_area

    assert polygon_lattice_area(sq.vertices) != polygon_lattice_area(rect.vertices)


def test_singularity_pair():
    p = SingularityPair(Fraction(7, 5), Fraction(7, 3))
    assert (p.a, p.b) == (Fraction(7, 5), Fraction(7, 3))
    # either member may name the singularity; the partner is computed
    q = SingularityPair(Fraction(7, 3), Fraction(7, 3))
    assert (q.a, q.b) == (Fraction(7, 5), Fraction(7, 3))
    assert SingularityPair(Fraction(2), Fraction(2)).a == 2
    with pytest.raises(LatticeError):
        SingularityPair(Fraction(7, 3), Fraction(9, 2))


def test_toric_triangle_check():
    seven = SingularityPair(Fraction(7, 3), Fraction(7, 3))
    assert toric_triangle_check([seven] * 3) is not None
    two = SingularityPair(Fraction(2), Fraction(2))
    assert toric_triangle_check([two] * 3) is None
    one = SingularityPair(Fraction(1), Fraction(1))
    assert toric_triangle_check([one] * 3) is not None


def test_toric_polygon_single_singularity():
    pair = SingularityPair(Fraction(7, 5), Fraction(7, 3))
    poly = toric_polygon_build([pair])
    tans = poly.angle_tans()
    assert sorted(t for t in tans if t != 1) == [Fraction(7, 5)]


def test_toric_polygon_smooth_only():
    pair = SingularityPair(Fraction(1), Fraction(1))
    poly = toric_polygon_build([pair])
    assert all(t == 1 for t in poly.angle_tans())


def test_toric_polygon_multiset():
    pairs = [
        SingularityPair(Fraction(7, 3), Fraction(7, 3)),
        SingularityPair(Fraction(7, 5), Fraction(7, 3)),
    ]
    poly = toric_polygon_build(pairs)
    nonsmooth = sorted(t for t in poly.angle_tans() if t != 1)
    assert nonsmooth == sorted(p.a for p in pairs)
    rng = random.Random(137)
    for _ in range(10):
        ps = [
            SingularityPair(Fraction(n, d), Fraction(n, d))
            for n, d in [(rng.randrange(2, 9), 1) for _ in range(rng.randrange(1, 4))]
        ]
        poly = toric_polygon_build(ps)
        assert sorted(t for t in poly.angle_tans() if t != 1) == sorted(
            p.a for p in ps if p.a != 1
        )
