"""Oriented broken lines at unit lattice distance and expanded angles.

A broken line at unit distance from a vertex carries a signed
length-sine sequence (odd length, nonzero entries): even positions are
signed edge lattice lengths, odd positions signed vertex lattice sines.
The sequence determines the line up to proper lattice congruence, and
the line can be reconstructed from it by solving a unimodular 2x2
system per vertex.

An expanded angle is the proper-congruence class of such a line.  It is
pinned down by two invariants: the revolution number (half-sum of the
signed crossing counts of the two half-lines through the starting
direction) and the extended-rational value of the sequence.  Together
they yield the normal form k*pi + arctan(r), which is also how M-sums
(concatenation with integer separators, then renormalization) are
evaluated.  M-sums are neither commutative nor associative.

Sign convention for crossings: a segment crossing a ray
counterclockwise (as seen from the vertex) counts +1, an endpoint touch
counts +1/2.  This makes the sail of any nonzero ordinary angle have
revolution 1/4 and the straight-angle line (1,-2,1) revolution 1/2, so
the normal-form index is k = 2*rho - 1/2 for quarter revolutions and
k = 2*rho for the pure k*pi types.  The index map is calibrated against
generated characteristic sequences in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .angles import OrdinaryAngle, adjacent_tan, trig
from .contfrac import eval_signed, to_odd_cf
from .numbers import INF, ExtRat, LatticeError, sign
from .plane import (
    Point,
    det,
    dot,
    lattice_length,
    primitive,
    ray_orientation,
    smul,
    unit_distance,
    vadd,
    vneg,
    vsub,
)

ORIGIN: Point = (0, 0)


@dataclass(frozen=True)
class BrokenLine:
    """Lattice oriented broken line on unit distance from a vertex."""

    vertex: Point
    points: tuple[Point, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise LatticeError("broken line needs at least one edge")
        pts = self.points
        for i in range(len(pts) - 1):
            if pts[i] == pts[i + 1]:
                raise LatticeError(f"zero-length edge at index {i}")
            if not unit_distance(pts[i], pts[i + 1], self.vertex):
                raise LatticeError(f"edge {i} not on unit distance from the vertex")
        for i in range(1, len(pts) - 1):
            if ray_orientation(pts[i - 1], pts[i], pts[i + 1]) == 0:
                raise LatticeError(f"consecutive collinear segments at vertex {i}")


def signed_lls(b: BrokenLine) -> tuple[int, ...]:
    """Signed length-sine sequence of a broken line."""
    return lls_of_points(b.points, b.vertex)


def lls_of_points(pts: Sequence[Point], v: Point) -> tuple[int, ...]:
    """Signed length-sine sequence of a raw vertex chain.

    Unlike the BrokenLine constructor this tolerates collinear joints,
    which show up as zero sine entries (sail chains cut at non-vertex
    lattice points).
    """
    out: list[int] = []
    for i in range(len(pts) - 1):
        if i > 0:
            s = (
                ray_orientation(pts[i - 1], v, pts[i])
                * ray_orientation(pts[i], v, pts[i + 1])
                * ray_orientation(pts[i - 1], pts[i], pts[i + 1])
                * _lattice_sine(pts[i - 1], pts[i], pts[i + 1])
            )
            out.append(s)
        out.append(ray_orientation(pts[i], v, pts[i + 1]) * lattice_length(pts[i], pts[i + 1]))
    return tuple(out)


def _lattice_sine(a: Point, o: Point, c: Point) -> int:
    d1, _ = primitive(vsub(a, o))
    d2, _ = primitive(vsub(c, o))
    return abs(det(d1, d2))


def reconstruct_points(seq: Sequence[int]) -> list[Point]:
    """Vertices of the broken line with sequence seq, anchored at (1,0), (1,a0).

    Zero sine entries are tolerated (they produce collinear joints);
    they arise when sails are cut at non-vertex lattice points.
    """
    if len(seq) % 2 == 0:
        raise LatticeError("signed length-sine sequences have odd length")
    if any(seq[i] == 0 for i in range(0, len(seq), 2)):
        raise LatticeError("zero length entry")
    pts = [(1, 0), (1, seq[0])]
    for k in range(1, (len(seq) + 1) // 2):
        pts.append(next_vertex(pts[k - 1], pts[k], seq[2 * k - 1], seq[2 * k]))
    return pts


def next_vertex(prev: Point, cur: Point, a_sin: int, a_len: int) -> Point:
    """Solve for the vertex after cur given the signed sine at cur and next length."""
    u, _ = primitive(vsub(cur, prev))
    rhs1 = a_len
    rhs2 = det(u, cur) - sign(det(prev, cur)) * a_sin * a_len
    # det(cur, C) = rhs1, det(u, C) = rhs2; the matrix is unimodular
    d = -det(u, cur)
    x = (u[0] * rhs1 - cur[0] * rhs2) // d
    y = (u[1] * rhs1 - cur[1] * rhs2) // d
    assert d * x == u[0] * rhs1 - cur[0] * rhs2 and d * y == u[1] * rhs1 - cur[1] * rhs2
    return (x, y)


def reconstruct(seq: Sequence[int]) -> BrokenLine:
    """The broken line at the origin realizing a signed length-sine sequence."""
    validate_lls(seq)
    return BrokenLine(ORIGIN, tuple(reconstruct_points(seq)))


def validate_lls(seq: Sequence[int]) -> None:
    if len(seq) % 2 == 0 or not seq:
        raise LatticeError("signed length-sine sequences have odd length")
    if any(a == 0 for a in seq):
        raise LatticeError("signed length-sine sequences have nonzero entries")


def line_value(b: BrokenLine) -> ExtRat:
    """q/p for the endpoint (p, q) of a reconstruction-framed line.

    Lines in general position are frame-reduced by taking their
    sequence and reconstructing, which represents the same expanded
    angle.
    """
    pts = b.points
    if pts[0] == vadd(b.vertex, (1, 0)) and pts[1][0] - b.vertex[0] == 1:
        end = vsub(pts[-1], b.vertex)
        return ExtRat.of(Fraction(end[1], end[0])) if end[0] != 0 else INF
    return eval_signed(signed_lls(b))


def _segment_ray_crossing(u: Point, a: Point, b: Point) -> Fraction:
    """Signed crossing count of segment a->b with the ray {t*u, t>=0} from the origin."""
    sa, sb = det(u, a), det(u, b)
    if sa == 0:
        if dot(u, a) > 0:
            return Fraction(sign(det(u, vsub(b, a))), 2)
        return Fraction(0)
    if sb == 0:
        if dot(u, b) > 0:
            return Fraction(sign(det(u, vsub(b, a))), 2)
        return Fraction(0)
    if (sa > 0) == (sb > 0):
        return Fraction(0)
    # intersection point scaled by (sa - sb) to stay in integers
    w = vadd(smul(sa - sb, a), smul(sa, vsub(b, a)))
    if dot(u, w) * sign(sa - sb) > 0:
        return Fraction(sign(det(u, vsub(b, a))), 1)
    return Fraction(0)


def revolution_of_points(pts: Sequence[Point], vertex: Point = ORIGIN) -> Fraction:
    """Revolution number: half-sum of crossing counts of the two start rays."""
    u = vsub(pts[0], vertex)
    total = Fraction(0)
    for w in (u, vneg(u)):
        for i in range(len(pts) - 1):
            total += _segment_ray_crossing(w, vsub(pts[i], vertex), vsub(pts[i + 1], vertex))
    return total / 2


def revolution(b: BrokenLine) -> Fraction:
    return revolution_of_points(b.points, b.vertex)


@dataclass(frozen=True)
class NormalForm:
    """An expanded angle reduced to k*pi + arctan(phi_tan)."""

    k: int
    phi_tan: Fraction

    def __post_init__(self):
        object.__setattr__(self, "phi_tan", Fraction(self.phi_tan))
        if self.phi_tan != 0 and self.phi_tan < 1:
            raise LatticeError("normal form tangent must be 0 or >= 1")

    def __str__(self) -> str:
        from .numbers import format_rat

        return f"{self.k}*pi + arctan({format_rat(self.phi_tan)})"


def normalize(x: Union[BrokenLine, Sequence[int]]) -> NormalForm:
    """Normal form of an expanded angle given by a line or its sequence.

    The revolution number fixes the pi-count k; the associated ordinary
    angle is then measured directly between the start ray (negated for
    odd k) and the endpoint of the reconstructed line.
    """
    if isinstance(x, BrokenLine):
        seq: Sequence[int] = signed_lls(x)
    else:
        seq = tuple(x)
    if not seq:
        return NormalForm(0, Fraction(0))
    pts = reconstruct_points(seq)
    rho = revolution_of_points(pts)
    quarters = rho * 4
    assert quarters.denominator == 1
    if quarters % 2 == 0:
        if not eval_signed(seq) == 0:
            raise LatticeError("inconsistent revolution/value pair")
        return NormalForm(int(2 * rho), Fraction(0))
    k = 2 * rho - Fraction(1, 2)
    assert k.denominator == 1
    k = int(k)
    end = pts[-1] if k % 2 == 0 else vneg(pts[-1])
    if end[1] <= 0:
        raise LatticeError("inconsistent revolution/endpoint pair")
    return NormalForm(k, trig(OrdinaryAngle(ORIGIN, (1, 0), end)).tan)


def characteristic_sequence(nf: NormalForm) -> tuple[int, ...]:
    """The canonical signed length-sine sequence of a normal form.

    Empty for the zero angle; ((1,-2,1,-2) x k, odd CF of phi) for
    k >= 0 and the mirrored blocks for k < 0; for pure k*pi the last
    block element is dropped.
    """
    if nf.k >= 0:
        blocks = [1, -2, 1, -2] * nf.k
    else:
        blocks = [-1, 2, -1, 2] * (-nf.k)
    if nf.phi_tan == 0:
        return tuple(blocks[:-1])
    return tuple(blocks + to_odd_cf(nf.phi_tan))


def msum(forms: Sequence[NormalForm], seps: Sequence[int]) -> NormalForm:
    """M-sum: concatenate characteristic sequences with separators, renormalize.

    Separators are arbitrary integers; zero occurs naturally (the edge
    separators of a right triangle include 0, and sail chains cut at
    non-vertex points produce 0 as well).
    """
    if len(seps) != len(forms) - 1:
        raise LatticeError("msum needs exactly len(forms) - 1 separators")
    chars = [characteristic_sequence(nf) for nf in forms]
    if len(forms) > 1 and any(not c for c in chars):
        raise LatticeError("empty characteristic sequence")
    return normalize(interleave(chars, seps))


def interleave(chars: Sequence[Sequence[int]], seps: Sequence[int]) -> list[int]:
    seq = list(chars[0])
    for m, c in zip(seps, chars[1:]):
        seq.append(m)
        seq.extend(c)
    return seq


def opposite(nf: NormalForm) -> NormalForm:
    """The class of the inverse line: -(k*pi + phi) = (-k-1)*pi + (pi - phi)."""
    if nf.phi_tan == 0:
        return NormalForm(-nf.k, Fraction(0))
    return NormalForm(-nf.k - 1, adjacent_tan(nf.phi_tan))


def corresponding(tan: Fraction) -> NormalForm:
    """Embedding of an ordinary angle (given by its tangent) as 0*pi + arctan(tan)."""
    return NormalForm(0, Fraction(tan))
