"""The geometric substrate: lattice points, lengths, areas, orientation.

Points and vectors are plain (x, y) tuples of Python ints.  Lattice
length of a segment is the gcd of the coordinate differences; lattice
area is normalized so the simple basis triangle has area 1 (i.e. it is
the bare 2x2 determinant, not half of it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .numbers import LatticeError, sign

Point = tuple[int, int]


def vadd(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def vsub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def vneg(a: Point) -> Point:
    return (-a[0], -a[1])


def smul(k: int, a: Point) -> Point:
    return (k * a[0], k * a[1])


def det(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Point, v: Point) -> int:
    return u[0] * v[0] + u[1] * v[1]


def lattice_length(a: Point, b: Point) -> int:
    """Number of lattice subsegments of segment ab: gcd of coordinate deltas."""
    if a == b:
        raise LatticeError("degenerate segment")
    return math.gcd(b[0] - a[0], b[1] - a[1])


def signed_area(a: Point, b: Point, c: Point) -> int:
    """det(b - a, c - a); its absolute value is the lattice area of triangle abc."""
    return det(vsub(b, a), vsub(c, a))


def ray_orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the orientation of the vector pair (b->a, b->c); 0 iff collinear."""
    return sign(det(vsub(a, b), vsub(c, b)))


def primitive(v: Point) -> tuple[Point, int]:
    """Split v into (primitive direction, positive integer multiplier)."""
    if v == (0, 0):
        raise LatticeError("zero vector has no primitive direction")
    g = math.gcd(v[0], v[1])
    return (v[0] // g, v[1] // g), g


def unit_distance(a: Point, b: Point, c: Point) -> bool:
    """True iff segment ab and the point c span the whole lattice.

    Equivalently the primitive vector of ab together with a->c is a
    lattice basis, which is what "segment on unit distance from c"
    means for broken lines.
    """
    d, _ = primitive(vsub(b, a))
    return abs(det(d, vsub(c, a))) == 1


def polygon_lattice_area(vertices: Sequence[Point]) -> int:
    """Lattice area of a polygon: shoelace determinant sum, absolute value."""
    s = 0
    n = len(vertices)
    for i in range(n):
        s += det(vertices[i], vertices[(i + 1) % n])
    return abs(s)


@dataclass(frozen=True)
class AffMap:
    """Lattice-affine map x -> linear @ x + shift with |det linear| = 1."""

    linear: tuple[int, int, int, int]  # row-major (a, b, c, d)
    shift: Point = (0, 0)

    def __post_init__(self):
        a, b, c, d = self.linear
        if abs(a * d - b * c) != 1:
            raise LatticeError("AffMap: linear part must be unimodular")

    @property
    def is_proper(self) -> bool:
        a, b, c, d = self.linear
        return a * d - b * c == 1

    def apply(self, p: Point) -> Point:
        a, b, c, d = self.linear
        return (a * p[0] + b * p[1] + self.shift[0], c * p[0] + d * p[1] + self.shift[1])

    def apply_vec(self, v: Point) -> Point:
        a, b, c, d = self.linear
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def compose(self, other: "AffMap") -> "AffMap":
        """self after other: (self.compose(other)).apply(p) = self.apply(other.apply(p))."""
        a, b, c, d = self.linear
        e, f, g, h = other.linear
        lin = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return AffMap(lin, vadd(self.apply_vec(other.shift), self.shift))

    def inverse(self) -> "AffMap":
        a, b, c, d = self.linear
        dt = a * d - b * c
        lin = (d * dt, -b * dt, -c * dt, a * dt)
        inv = AffMap(lin)
        return AffMap(lin, vneg(inv.apply_vec(self.shift)))


IDENTITY = AffMap((1, 0, 0, 1))


def basis_completion(v: Point) -> AffMap:
    """A unimodular linear map sending the primitive vector v to (1, 0)."""
    x, y = v
    if math.gcd(x, y) != 1:
        raise LatticeError("basis_completion: vector must be primitive")
    # find u, w with x*w - y*u = 1, then rows ((w, -u), (-y, x)) work
    g, a, b = _egcd(x, y)
    assert g == 1
    return AffMap((a, b, -y, x))


def _egcd(x: int, y: int) -> tuple[int, int, int]:
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
