"""Ordinary lattice angles and their exact trigonometric functions.

An ordinary angle is an ordered pair of primitive lattice rays from a
common vertex.  Its lattice sine is the index of the sublattice spanned
by the two ray directions; the lattice cosine is the unique residue in
1..sin of the second ray's first coordinate once the angle is mapped to
the frame where ray1 = (1, 0) and ray2 has positive second coordinate.
Opposite rays (straight angles) are rejected at construction; the zero
angle (coinciding rays) is first-class with trig (0, 1, 0).

The sail of a nonzero angle is the boundary chain of the convex hull of
the lattice points inside its cone; its alternating length/sine reading
is the unique odd continued fraction of the lattice tangent, which is
how sails are computed here (the hull itself only appears as a test
oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .contfrac import convergents, to_odd_cf
from .numbers import LatticeError, RatLike, mod_inverse
from .plane import AffMap, Point, basis_completion, det, primitive, vneg, vsub

ORIGIN: Point = (0, 0)


@dataclass(frozen=True)
class OrdinaryAngle:
    """Ordered pair of primitive rays (ray1, ray2) from a lattice vertex."""

    vertex: Point
    ray1: Point
    ray2: Point

    def __post_init__(self):
        for r in (self.ray1, self.ray2):
            if r == (0, 0):
                raise LatticeError("angle ray must be a nonzero vector")
            if primitive(r)[1] != 1:
                raise LatticeError("angle rays must be primitive vectors")
        if self.ray1 == vneg(self.ray2):
            raise LatticeError("straight angle is not ordinary")

    @property
    def is_zero(self) -> bool:
        return self.ray1 == self.ray2


class Trig(NamedTuple):
    sin: int
    cos: int
    tan: Fraction


@dataclass(frozen=True)
class Sail:
    """Sail vertex chain and its length-sine sequence (odd length, positive)."""

    vertices: tuple[Point, ...]
    lls: tuple[int, ...]


def angle_of(a: Point, o: Point, b: Point) -> OrdinaryAngle:
    """The ordinary angle at o with rays toward a and b (in that order)."""
    if a == o or b == o:
        raise LatticeError("angle rays need points distinct from the vertex")
    return OrdinaryAngle(o, primitive(vsub(a, o))[0], primitive(vsub(b, o))[0])


def arctan(q: RatLike) -> OrdinaryAngle:
    """The angle at the origin with rays (1,0) and (n,m) where q = m/n >= 1.

    q = 0 gives the zero angle.
    """
    q = Fraction(q)
    if q == 0:
        return OrdinaryAngle(ORIGIN, (1, 0), (1, 0))
    if q < 1:
        raise LatticeError("tangent below one")
    return OrdinaryAngle(ORIGIN, (1, 0), (q.denominator, q.numerator))


def reduction_frame(a: OrdinaryAngle) -> AffMap:
    """Affine map sending vertex -> origin, ray1 -> (1,0), ray2 -> (cos, sin)."""
    if a.is_zero:
        raise LatticeError("zero angle has no reduction frame")
    m = basis_completion(a.ray1)
    cx, sy = m.apply_vec(a.ray2)
    if sy < 0:
        # an improper frame is fine: the trig functions are invariant
        # under improper maps as well
        m = AffMap((1, 0, 0, -1)).compose(m)
        cx, sy = m.apply_vec(a.ray2)
    # shear to bring the first coordinate into 1..sin
    k = ((cx - 1) % sy + 1 - cx) // sy
    m = AffMap((1, k, 0, 1)).compose(m)
    return AffMap(m.linear, vneg(m.apply_vec(a.vertex)))


def trig(a: OrdinaryAngle) -> Trig:
    """Lattice sine, cosine, tangent of an ordinary angle."""
    if a.is_zero:
        return Trig(0, 1, Fraction(0))
    s = abs(det(a.ray1, a.ray2))
    f = reduction_frame(a)
    c, s2 = f.apply_vec(a.ray2)
    assert s2 == s and 1 <= c <= s
    return Trig(s, c, Fraction(s, c))


def tan_of(a: OrdinaryAngle) -> Fraction:
    return trig(a).tan


def sail(a: OrdinaryAngle) -> Sail:
    """Sail of a nonzero ordinary angle, built from the odd CF of its tangent.

    In the reduced frame the sail vertices are (1, 0) followed by the
    even-index convergents (q_{2i}, p_{2i}) of the odd CF of tan; the
    chain is mapped back through the inverse frame.
    """
    if a.is_zero:
        raise LatticeError("no sail")
    t = trig(a)
    cf = to_odd_cf(t.tan)
    back = reduction_frame(a).inverse()
    verts = [back.apply((1, 0))]
    for p, q in convergents(cf)[0::2]:
        verts.append(back.apply((q, p)))
    return Sail(tuple(verts), tuple(cf))


def transpose(a: OrdinaryAngle) -> OrdinaryAngle:
    """The angle with the two rays swapped."""
    if a.is_zero:
        raise LatticeError("zero angle has no transpose")
    return OrdinaryAngle(a.vertex, a.ray2, a.ray1)


def adjacent(a: OrdinaryAngle) -> OrdinaryAngle:
    """The angle pi - a: rays (ray2, -ray1)."""
    if a.is_zero:
        raise LatticeError("zero angle has no adjacent angle")
    return OrdinaryAngle(a.vertex, a.ray2, vneg(a.ray1))


def transpose_tan(t: Fraction) -> Fraction:
    """Tangent of the transpose: same sine, cosine inverted modulo sine."""
    t = Fraction(t)
    if t < 1:
        raise LatticeError("transpose_tan: tangent must be >= 1")
    return Fraction(t.numerator, mod_inverse(t.denominator, t.numerator))


def adjacent_tan(t: Fraction) -> Fraction:
    """Tangent of pi - arctan(t): same sine, negated cosine inverted mod sine."""
    t = Fraction(t)
    if t < 1:
        raise LatticeError("adjacent_tan: tangent must be >= 1")
    return Fraction(t.numerator, mod_inverse(-t.denominator, t.numerator))


def is_right(a: OrdinaryAngle) -> bool:
    """True iff a is congruent to arctan(1) or arctan(2): transpose- and adjacent-self-congruent."""
    return tan_of(a) in (1, 2)


def congruent(a: OrdinaryAngle, b: OrdinaryAngle) -> bool:
    """Lattice congruence test: equality of lattice tangents."""
    return tan_of(a) == tan_of(b)
