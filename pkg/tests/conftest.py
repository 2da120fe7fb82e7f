"""Shared helpers: random lattice-affine maps and brute-force oracles.

The oracles here deliberately avoid the code paths they check: the sail
oracle builds an integer convex hull from an enumerated point cloud,
and the unit-distance point count enumerates a bounding box.
"""

from __future__ import annotations

import random
from fractions import Fraction

from latticetrig.plane import AffMap, Point, det, primitive, vsub


def random_unimodular(rng: random.Random, proper: bool = True, size: int = 6) -> AffMap:
    """Random unimodular map as a product of shears, with a random shift."""
    m = AffMap((1, 0, 0, 1))
    for _ in range(rng.randrange(1, 4)):
        a = rng.randrange(-size, size + 1)
        b = rng.randrange(-size, size + 1)
        m = AffMap((1, a, 0, 1)).compose(AffMap((1, 0, b, 1))).compose(m)
    if not proper:
        m = AffMap((1, 0, 0, -1)).compose(m)
    shift = (rng.randrange(-size, size + 1), rng.randrange(-size, size + 1))
    return AffMap(m.linear, shift)


def convex_hull(points: list[Point]) -> list[Point]:
    """Counterclockwise convex hull (Andrew monotone chain, integers only)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        h: list[Point] = []
        for p in seq:
            while len(h) >= 2 and det(vsub(h[-1], h[-2]), vsub(p, h[-2])) <= 0:
                h.pop()
            h.append(p)
        return h

    lower = half(pts)
    upper = half(list(reversed(pts)))
    return lower[:-1] + upper[:-1]


def oracle_sail(r1: Point, r2: Point) -> list[Point]:
    """Sail of cone(r1, r2) by brute force: enumerate, hull, walk the chain.

    Every sail vertex lies in the triangle spanned by the origin and the
    two primitive ray points, so that triangle is the whole search
    region; two far points along the rays close the hull so the chain
    between the ray points is exactly the sail.
    """
    d = det(r1, r2)
    assert d != 0
    sd = 1 if d > 0 else -1
    far = 4 * (abs(d) + 1)
    xs = (0, r1[0], r2[0])
    ys = (0, r1[1], r2[1])
    cloud = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if (x, y) == (0, 0):
                continue
            u = det((x, y), r2) * sd
            v = det(r1, (x, y)) * sd
            if u >= 0 and v >= 0 and u + v <= abs(d):
                cloud.append((x, y))
    far1 = (far * r1[0], far * r1[1])
    far2 = (far * r2[0], far * r2[1])
    cloud += [far1, far2]
    boundary = convex_hull(cloud)
    n = len(boundary)
    start = boundary.index(r1)
    chain = [r1]
    i = start
    while chain[-1] != r2:
        i += 1
        chain.append(boundary[i % n])
    if far1 in chain or far2 in chain:
        chain = [r1]
        i = start
        while chain[-1] != r2:
            i -= 1
            chain.append(boundary[i % n])
    assert far1 not in chain and far2 not in chain
    return chain


def oracle_unit_distance_count(p1: Point, p2: Point, q: Point) -> int:
    """Brute-force count of unit-distance points from segment p1p2 in triangle p1p2q."""
    d, _ = primitive(vsub(p2, p1))
    xs = [p1[0], p2[0], q[0]]
    ys = [p1[1], p2[1], q[1]]
    count = 0
    for x in range(min(xs) - 1, max(xs) + 2):
        for y in range(min(ys) - 1, max(ys) + 2):
            p = (x, y)
            if abs(det(d, vsub(p, p1))) != 1:
                continue
            if _in_closed_triangle(p, p1, p2, q):
                count += 1
    return count


def _in_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    s1 = det(vsub(b, a), vsub(p, a))
    s2 = det(vsub(c, b), vsub(p, b))
    s3 = det(vsub(a, c), vsub(p, c))
    ref = det(vsub(b, a), vsub(c, a))
    if ref < 0:
        s1, s2, s3 = -s1, -s2, -s3
    return s1 >= 0 and s2 >= 0 and s3 >= 0


def random_triangle(rng: random.Random, span: int = 15):
    from latticetrig.triangles import Triangle

    while True:
        pts = [(rng.randrange(-span, span + 1), rng.randrange(-span, span + 1)) for _ in range(3)]
        try:
            return Triangle(*pts)
        except Exception:
            continue


def random_convex_polygon(rng: random.Random, max_dirs: int = 4, max_mult: int = 3):
    """Random convex lattice polygon from a symmetric fan of edge vectors."""
    from functools import cmp_to_key

    from latticetrig.polygons import Polygon

    while True:
        fan: dict[Point, int] = {}
        for _ in range(rng.randrange(1, max_dirs + 1)):
            v = (rng.randrange(-4, 5), rng.randrange(-4, 5))
            if v == (0, 0):
                continue
            v = primitive(v)[0]
            mult = rng.randrange(1, max_mult + 1)
            fan[v] = fan.get(v, 0) + mult
            w = (-v[0], -v[1])
            fan[w] = fan.get(w, 0) + mult
        if len(fan) < 3:
            continue

        def cmp(u, v):
            hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
            hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
            if hu != hv:
                return hu - hv
            return -det(u, v)

        dirs = sorted(fan, key=cmp_to_key(cmp))
        verts = []
        cur = (0, 0)
        for v in dirs:
            cur = (cur[0] + fan[v] * v[0], cur[1] + fan[v] * v[1])
            verts.append(cur)
        try:
            return Polygon(tuple(verts))
        except Exception:
            continue
