"""Convex lattice polygons and toric-singularity constructions.

A tuple of nonzero ordinary angles bounds a convex lattice polygon iff
for some integer separators M the M-sum of the adjacent angles
(pi - alpha_i) equals 2*pi.  Extraction reads the separators off the
union of the sails of the exterior angles of a given polygon; synthesis
reconstructs direction vectors from the concatenated characteristic
sequence and closes them up with a positive integer combination.

Separator entries equal to zero are legal here (they mark smooth
vertices obtained by cutting a sail at a non-vertex lattice point, as
the toric construction does); the expanded-angle machinery evaluates
such sequences without complaint even though hand-written signed
sequences reject zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Optional, Sequence

from .angles import (
    OrdinaryAngle,
    adjacent_tan,
    angle_of,
    arctan,
    sail,
    tan_of,
    transpose_tan,
)
from .contfrac import to_odd_cf
from .expanded import (
    NormalForm,
    interleave,
    lls_of_points,
    normalize,
    reconstruct_points,
)
from .numbers import LatticeError
from .plane import Point, det, primitive, smul, vadd, vsub

ORIGIN: Point = (0, 0)
TWO_PI = NormalForm(2, Fraction(0))


@dataclass(frozen=True)
class Polygon:
    """Strictly convex lattice polygon, vertices counterclockwise."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise LatticeError("polygon needs at least three vertices")
        n = len(vs)
        for i in range(n):
            e1 = vsub(vs[(i + 1) % n], vs[i])
            e2 = vsub(vs[(i + 2) % n], vs[(i + 1) % n])
            if e1 == (0, 0):
                raise LatticeError("zero-length polygon edge")
            if det(e1, e2) <= 0:
                raise LatticeError("polygon must be strictly convex counterclockwise")

    def interior_angles(self) -> list[OrdinaryAngle]:
        """Angle at each vertex, first ray toward the next vertex, second toward the previous.

        With this reading the exterior angle between the arriving and
        leaving edge directions is exactly pi minus the interior angle.
        """
        vs = self.vertices
        n = len(vs)
        return [angle_of(vs[(i + 1) % n], vs[i], vs[i - 1]) for i in range(n)]

    def angle_tans(self) -> list[Fraction]:
        return [tan_of(a) for a in self.interior_angles()]


def _exterior_blocks(angles: Sequence[OrdinaryAngle]) -> list[tuple[int, ...]]:
    blocks = []
    for a in angles:
        if a.is_zero:
            raise LatticeError("polygon angles must be nonzero")
        blocks.append(tuple(to_odd_cf(adjacent_tan(tan_of(a)))))
    return blocks


def msum_of_exterior(angles: Sequence[OrdinaryAngle], seps: Sequence[int]) -> NormalForm:
    """Normal form of the M-sum of the angles (pi - alpha_i) under separators seps."""
    blocks = _exterior_blocks(angles)
    if len(seps) != len(blocks) - 1:
        raise LatticeError("separator count must be one less than the angle count")
    return normalize(interleave(blocks, seps))


def polygon_criterion(
    angles: Sequence[OrdinaryAngle], bound: int = 4
) -> Optional[list[int]]:
    """Search for separators M with sum of (pi - alpha_i) equal to 2*pi.

    The search scans the box |m_i| <= bound in increasing sup-norm; the
    criterion is a semi-decision (no a-priori bound on M exists), but
    separators extracted from an actual polygon are found whenever they
    fit the box.
    """
    if len(angles) < 3:
        raise LatticeError("a polygon needs at least three angles")
    blocks = _exterior_blocks(angles)
    n = len(blocks) - 1
    for radius in range(bound + 1):
        ring = [m for m in range(-radius, radius + 1)]
        for seps in product(ring, repeat=n):
            if max((abs(m) for m in seps), default=0) != radius:
                continue
            if normalize(interleave(blocks, seps)) == TWO_PI:
                return list(seps)
    return None


def extract_separators(p: Polygon) -> list[int]:
    """Separators realized by a polygon: junction sines of its exterior-angle sails."""
    vs = p.vertices
    n = len(vs)
    edges = [vsub(vs[i], vs[i - 1]) for i in range(n)]  # edge arriving at vertex i
    chains: list[tuple[Point, ...]] = []
    for i in range(n):
        b1, _ = primitive(edges[i])
        b2, _ = primitive(edges[(i + 1) % n])
        chains.append(sail(OrdinaryAngle(ORIGIN, b1, b2)).vertices)
    full: list[Point] = list(chains[0])
    junctions = []
    for ch in chains[1:]:
        junctions.append(len(full) - 1)
        full.extend(ch[1:])
    seq = lls_of_points(tuple(full), ORIGIN)
    return [seq[2 * j - 1] for j in junctions]


def synthesize_polygon(angles: Sequence[OrdinaryAngle], seps: Sequence[int]) -> Polygon:
    """Build a convex polygon with the given interior angles from valid separators.

    Reconstructs the concatenated characteristic sequence, reads one
    direction vector per angle block off the broken line, and scales the
    directions by a positive integer combination summing to zero.
    """
    blocks = _exterior_blocks(angles)
    if len(seps) != len(blocks) - 1:
        raise LatticeError("separator count must be one less than the angle count")
    seq = interleave(blocks, seps)
    if normalize(seq) != TWO_PI:
        raise LatticeError("separators do not certify the 2*pi angle sum")
    pts = reconstruct_points(seq)
    dirs: list[Point] = []
    idx = 0
    for b in blocks:
        dirs.append(pts[idx])
        idx += (len(b) + 1) // 2
    coeffs = _positive_combination(dirs)
    vertex = ORIGIN
    out = []
    for a, d in zip(coeffs, dirs):
        vertex = vadd(vertex, smul(a, d))
        out.append(vertex)
    return Polygon(tuple(out))


def _positive_combination(dirs: Sequence[Point]) -> list[int]:
    """Positive integers a_i with sum a_i * dirs_i = 0.

    The directions wind counterclockwise exactly once, so the negated
    all-ones deficit lies in the cone of some consecutive pair; seed
    every coefficient at one and correct within that pair.
    """
    n = len(dirs)
    deficit = (0, 0)
    for d in dirs:
        deficit = vsub(deficit, d)
    coeffs = [Fraction(1)] * n
    if deficit != (0, 0):
        for i in range(n):
            u, v = dirs[i], dirs[(i + 1) % n]
            duv = det(u, v)
            x = Fraction(det(deficit, v), duv)
            y = Fraction(det(u, deficit), duv)
            if x >= 0 and y >= 0:
                coeffs[i] += x
                coeffs[(i + 1) % n] += y
                break
        else:
            raise LatticeError("directions do not positively span the plane")
    scale = 1
    for c in coeffs:
        scale = math.lcm(scale, c.denominator)
    out = [int(c * scale) for c in coeffs]
    assert all(a >= 1 for a in out)
    return out


@dataclass(frozen=True)
class SingularityPair:
    """Unordered tangent pair {t, transpose(t)} of a toric surface singularity.

    The partner member is computed from the transpose identity rather
    than trusted from input: each given member must name the same
    singularity (equal the first member or its transpose), and the
    stored pair is always the genuine transpose couple.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if a < 1 or b < 1:
            raise LatticeError("singularity tangents must be >= 1")
        partner = transpose_tan(a)
        if b not in (a, partner):
            raise LatticeError("pair members must be transpose tangents of each other")
        lo, hi = min(a, partner), max(a, partner)
        object.__setattr__(self, "a", lo)
        object.__setattr__(self, "b", hi)


def toric_triangle_check(
    pairs: Sequence[SingularityPair],
) -> Optional[tuple[tuple[int, int, int], tuple[int, int, int]]]:
    """Witness (permutation, member choices) making three singularities triangle-realizable."""
    if len(pairs) != 3:
        raise LatticeError("exactly three singularity pairs expected")
    from .triangles import exists_from_tans

    for perm in permutations(range(3)):
        for choice in product((0, 1), repeat=3):
            tans = [
                (pairs[perm[i]].a if choice[i] == 0 else pairs[perm[i]].b)
                for i in range(3)
            ]
            if exists_from_tans(*tans) == 0:
                return perm, choice
    return None


def toric_polygon_build(pairs: Sequence[SingularityPair]) -> Polygon:
    """A convex polygon whose non-smooth vertices realize exactly the given singularities.

    All other vertices are smooth (angle congruent to arctan 1).  The
    singular angles are summed with separators 1; the residual angle is
    cancelled by the lattice-point chain of its adjacent angle's sail
    followed by two smooth corners (three when the residual is itself
    smooth).
    """
    if not pairs:
        raise LatticeError("at least one singularity pair required")
    angles = [arctan(p.a) for p in pairs]
    blocks = _exterior_blocks(angles)
    seps = [1] * (len(blocks) - 1)
    phi = normalize(interleave(blocks, seps))
    assert phi.k == 0 and phi.phi_tan != 0
    one = arctan(Fraction(1))
    if phi.phi_tan == 1:
        angles += [one, one, one]
        seps += [-2, -2, -2]
    else:
        chain = sail(arctan(adjacent_tan(phi.phi_tan)))
        steps: list[Point] = []
        for i in range(len(chain.vertices) - 1):
            a, b = chain.vertices[i], chain.vertices[i + 1]
            d, ln = primitive(vsub(b, a))
            steps.extend(vadd(a, smul(k, d)) for k in range(ln))
        steps.append(chain.vertices[-1])
        # turning sines at the interior chain points; straight points give 0
        sines = [
            abs(det(vsub(steps[i - 1], steps[i]), vsub(steps[i + 1], steps[i])))
            for i in range(1, len(steps) - 1)
        ]
        n_units = len(steps) - 1
        angles += [one] * (n_units + 2)
        seps += [-1] + sines + [-2, -2]
    result = msum_of_exterior(angles, seps)
    if result != TWO_PI:
        raise LatticeError("toric construction failed to close up")
    return synthesize_polygon(angles, seps)
