"""Lattice triangles: trigonometric identities, existence, classification.

Triangles are stored with vertices enumerated clockwise; the angle read
at each vertex has its first ray toward the previous vertex and its
second toward the next one, so the three tangents form a cyclic triple.
Lattice area together with the lexicographically minimal rotation of
that triple is a complete invariant of congruence classes (proper maps
plus cyclic relabeling); reversing the reading order and transposing
each tangent is the dual involution.

The tangent-triple existence test and the canonical minimal triangle
follow the sum-of-tangents criterion: some rotation (alpha, beta,
gamma) must satisfy (i) ]tan a, -1, tan b[ negative or greater than
tan a (infinity counts as greater) and (ii) the five-term bracket
vanishing, with all brackets taken over odd continued fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .angles import OrdinaryAngle, angle_of, tan_of, transpose_tan, trig
from .contfrac import eval_signed, to_odd_cf
from .expanded import NormalForm, corresponding, msum
from .numbers import LatticeError, gcd_lcm, sign
from .plane import Point, _egcd, det, lattice_length, primitive, signed_area, vadd, vsub


@dataclass(frozen=True)
class Triangle:
    """Lattice triangle stored clockwise (counterclockwise input is reordered)."""

    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        s = signed_area(self.a, self.b, self.c)
        if s == 0:
            raise LatticeError("collinear points do not form a triangle")
        if s > 0:
            b, c = self.c, self.b
            object.__setattr__(self, "b", b)
            object.__setattr__(self, "c", c)

    @property
    def area(self) -> int:
        return abs(signed_area(self.a, self.b, self.c))

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)


def angles_of(t: Triangle) -> tuple[OrdinaryAngle, OrdinaryAngle, OrdinaryAngle]:
    """The consecutive ordinary angles (at a, at b, at c), clockwise reading."""
    return (
        angle_of(t.c, t.a, t.b),
        angle_of(t.a, t.b, t.c),
        angle_of(t.b, t.c, t.a),
    )


def tans_of(t: Triangle) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(tan_of(a) for a in angles_of(t))


def sine_formula_check(t: Triangle) -> tuple[Fraction, bool]:
    """Common ratio il(edge)/sin(opposite angle); raises if the identity breaks."""
    aa, ab, ac = angles_of(t)
    il_ab = lattice_length(t.a, t.b)
    il_bc = lattice_length(t.b, t.c)
    il_ca = lattice_length(t.c, t.a)
    ratios = {
        Fraction(il_ab, trig(ac).sin),
        Fraction(il_bc, trig(aa).sin),
        Fraction(il_ca, trig(ab).sin),
        Fraction(il_ab * il_bc * il_ca, t.area),
    }
    if len(ratios) != 1:
        raise LatticeError("sine formula violated: trig bug")
    return next(iter(ratios)), True


def complete_sas(c: int, b: int, alpha: OrdinaryAngle) -> tuple[OrdinaryAngle, OrdinaryAngle, int]:
    """Complete a triangle from il(AB) = c, il(AC) = b and the angle at A.

    Constructs the congruent model triangle with A at the origin,
    C = (b, 0) and B = (q*c, p*c) for alpha = arctan(p/q), and reads the
    remaining angles and the length of CB off it.
    """
    if b < 1 or c < 1:
        raise LatticeError("edge lattice lengths must be >= 1")
    if alpha.is_zero:
        raise LatticeError("zero angle cannot complete a triangle")
    tg = trig(alpha)
    o: Point = (0, 0)
    d: Point = (b, 0)
    e: Point = (tg.cos * c, tg.sin * c)
    angle_bca = angle_of(e, d, o)
    angle_abc = angle_of(o, e, d)
    return angle_bca, angle_abc, lattice_length(d, e)


def _bracket(tans: Sequence[Fraction]):
    seq: list[int] = []
    for i, t in enumerate(tans):
        if i:
            seq.append(-1)
        seq.extend(to_odd_cf(t))
    return eval_signed(seq)


def exists_from_tans(t1: Fraction, t2: Fraction, t3: Fraction) -> Optional[int]:
    """Index of a rotation of (t1, t2, t3) realizable as triangle tangents, else None."""
    tans = (Fraction(t1), Fraction(t2), Fraction(t3))
    if any(t < 1 for t in tans):
        raise LatticeError("triangle tangents must be >= 1")
    for i in range(3):
        a, b, g = tans[i], tans[(i + 1) % 3], tans[(i + 2) % 3]
        two = _bracket([a, b])
        if not (two.is_infinite or two < 0 or two > a):
            continue
        if _bracket([a, b, g]) == 0:
            return i
    return None


def canonical_triangle(
    t1: Fraction, t2: Fraction, t3: Fraction
) -> tuple[Triangle, tuple[int, int]]:
    """Minimal triangle with the given consecutive tangents, plus (lambda1, lambda2).

    The base triangle is (0,0), lambda2*(cos a, sin a), (lambda1, 0).
    The sine formula forces il(AB) : il(AC) = sin(gamma) : sin(beta), so
    the minimal edge lengths are lambda2 = sin(gamma)/g toward the
    second vertex and lambda1 = sin(beta)/g toward the third, with
    g = gcd(sin(beta), sin(gamma)).  Every lattice triangle with these
    consecutive angles is an integer multiple of the returned one.
    """
    ta, tb, tg = Fraction(t1), Fraction(t2), Fraction(t3)
    two = _bracket([ta, tb])
    if not ((two.is_infinite or two < 0 or two > ta) and _bracket([ta, tb, tg]) == 0):
        raise LatticeError("tangent triple is not realizable in this rotation")
    common = gcd(tb.numerator, tg.numerator)
    lam1 = tb.numerator // common
    lam2 = tg.numerator // common
    tri = Triangle((0, 0), (lam2 * ta.denominator, lam2 * ta.numerator), (lam1, 0))
    return tri, (lam1, lam2)


def points_at_unit_distance_count(p1: Point, p2: Point, q: Point) -> int:
    """Count lattice points at unit distance from segment p1p2 inside triangle p1p2q.

    The candidates lie on the single lattice line parallel to p1p2 on
    q's side; clipping that line against the closed triangle reduces the
    count to an integer interval.
    """
    d, _ = primitive(vsub(p2, p1))
    side = sign(det(d, vsub(q, p1)))
    # w with det(d, w) = side: one lattice step from the segment toward q
    _, s, t = _egcd(d[0], d[1])
    w = (-t * side, s * side)
    assert det(d, w) == side
    base = vadd(p1, w)
    lo, hi = None, None  # rational bounds as (num, den) with den > 0
    feasible = True
    for e1, e2, opp in ((p1, p2, q), (p2, q, p1), (q, p1, p2)):
        ed = vsub(e2, e1)
        sgn_in = sign(det(ed, vsub(opp, e1)))
        # f(t) = det(ed, base + t*d - e1) must have sign sgn_in or 0
        alpha = det(ed, vsub(base, e1))
        beta = det(ed, d)
        if beta == 0:
            if alpha * sgn_in < 0:
                feasible = False
                break
            continue
        # sgn_in * (alpha + beta * t) >= 0
        a2, b2 = alpha * sgn_in, beta * sgn_in
        if b2 > 0:
            bound = Fraction(-a2, b2)
            lo = bound if lo is None else max(lo, bound)
        else:
            bound = Fraction(-a2, b2)
            hi = bound if hi is None else min(hi, bound)
    if not feasible or lo is None or hi is None or lo > hi:
        return 0
    return max(0, math.floor(hi) - math.ceil(lo) + 1)


def edge_separators(t: Triangle) -> tuple[int, int, int]:
    """(il - il1 - 1) for edges ab, bc, ca; the sum separators of the triangle."""
    out = []
    for p1, p2, q in ((t.a, t.b, t.c), (t.b, t.c, t.a), (t.c, t.a, t.b)):
        out.append(lattice_length(p1, p2) - points_at_unit_distance_count(p1, p2, q) - 1)
    return tuple(out)


def angle_sum_check(t: Triangle) -> NormalForm:
    """M-sum of the three angles with the edge separators; equals pi for any triangle."""
    seps = edge_separators(t)
    forms = [corresponding(tan_of(a)) for a in angles_of(t)]
    return msum(forms, [seps[0], seps[1]])


def classify_shape(t: Triangle) -> str:
    """'acute' (all separators -1), 'right' (one zero), or 'obtuse' (one positive)."""
    seps = edge_separators(t)
    if any(s > 0 for s in seps):
        return "obtuse"
    if any(s == 0 for s in seps):
        return "right"
    return "acute"


@dataclass(frozen=True, order=True)
class TriangleClass:
    """Complete congruence invariant: lattice area and cyclic clockwise tangents."""

    area: int
    tans: tuple[Fraction, Fraction, Fraction]

    @staticmethod
    def of(area: int, tans: Sequence[Fraction]) -> "TriangleClass":
        rots = [tuple(tans[i:]) + tuple(tans[:i]) for i in range(3)]
        return TriangleClass(area, min(rots))

    def dual(self) -> "TriangleClass":
        rev = tuple(transpose_tan(x) for x in reversed(self.tans))
        return TriangleClass.of(self.area, rev)

    @property
    def is_self_dual(self) -> bool:
        return self == self.dual()

    @property
    def is_pseudo_isosceles(self) -> bool:
        return len(set(self.tans)) <= 2

    @property
    def is_isosceles(self) -> bool:
        return self.is_pseudo_isosceles and self.is_self_dual

    @property
    def is_pseudo_regular(self) -> bool:
        return len(set(self.tans)) == 1

    @property
    def is_regular(self) -> bool:
        return self.is_pseudo_regular and self.is_self_dual


def class_of(t: Triangle) -> TriangleClass:
    return TriangleClass.of(t.area, tans_of(t))


def congruent_tri(t1: Triangle, t2: Triangle) -> bool:
    """Congruence up to lattice-affine maps and cyclic relabeling."""
    return class_of(t1) == class_of(t2)


@dataclass(frozen=True)
class ClassRecord:
    cls: TriangleClass
    example: Triangle
    shape: str

    @property
    def flags(self) -> list[str]:
        out = []
        c = self.cls
        for name in ("self_dual", "pseudo_isosceles", "isosceles", "pseudo_regular", "regular"):
            if getattr(c, f"is_{name}"):
                out.append(name.replace("_", "-"))
        return out


def enumerate_classes(max_area: int) -> list[ClassRecord]:
    """All triangle congruence classes with lattice area <= max_area.

    Scans Hermite-style representatives (0,0), (p,0), (q,r) over all
    factorizations p*r of each area with q reduced modulo r (the shear
    orbit), then dedupes by the class invariant.
    """
    if max_area < 1:
        raise LatticeError("max_area must be >= 1")
    seen: dict[TriangleClass, Triangle] = {}
    for area in range(1, max_area + 1):
        for p in range(1, area + 1):
            if area % p:
                continue
            r = area // p
            for q in range(r):
                tri = Triangle((0, 0), (p, 0), (q, r))
                cls = class_of(tri)
                seen.setdefault(cls, tri)
    return [
        ClassRecord(cls, tri, classify_shape(tri))
        for cls, tri in sorted(seen.items(), key=lambda kv: kv[0])
    ]
