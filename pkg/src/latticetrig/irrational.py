"""Irrational lattice angles with eventually-periodic sail data.

Only quadratic-irrational slopes are representable: an infinite
length-sine sequence is a finite (possibly signed) head followed by a
positive eventually-periodic tail.  R-side sequences read outward to
the right of the anchor ray, L-side data is stored outward (mirror
reading), and LR sequences are infinite both ways.

Normal forms exist for the R and L sides: k*pi + an infinite arctan,
characterized by the blocks (1,-2,1,-2) x k (or the negated blocks)
followed by a positive tail.  The revolution index k is computed
exactly: the reconstruction is extended period by period while the two
anchor rays can still be crossed; once the remaining motion cone
excludes both rays no further crossing is possible, because a sail
crosses each ray at most once.  The positive tail is recovered from two
stabilized finite truncations (the class of an infinite line keeps its
far tail literally, so the eventual period survives normalization).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .contfrac import PeriodicCF, periodic_eval, to_odd_cf
from .expanded import (
    NormalForm,
    _segment_ray_crossing,
    characteristic_sequence,
    interleave,
    next_vertex,
    normalize,
)
from .numbers import LatticeError
from .plane import Point, det, vsub

Side = Literal["R", "L", "LR"]


@dataclass(frozen=True)
class InfiniteLLS:
    """Infinite signed length-sine sequence with periodic tail(s).

    side R: prefix (natural order, even length) then tail_r outward.
    side L: stored mirrored; prefix and tail_l are read outward from the
    anchor, so they look exactly like an R sequence.
    side LR: natural-order finite middle (odd length) with tails both
    ways, tail_l stored outward.
    """

    side: Side
    prefix: tuple[int, ...] = ()
    tail_l: Optional[PeriodicCF] = None
    tail_r: Optional[PeriodicCF] = None

    def __post_init__(self):
        if any(a == 0 for a in self.prefix):
            raise LatticeError("zero entry in sequence head")
        if self.side == "R":
            if self.tail_r is None or self.tail_l is not None:
                raise LatticeError("side R needs exactly tail_r")
            if len(self.prefix) % 2:
                raise LatticeError("R head must have even length")
        elif self.side == "L":
            if self.tail_l is None or self.tail_r is not None:
                raise LatticeError("side L needs exactly tail_l")
            if len(self.prefix) % 2:
                raise LatticeError("L head must have even length")
        elif self.side == "LR":
            if self.tail_l is None or self.tail_r is None:
                raise LatticeError("side LR needs both tails")
            if len(self.prefix) % 2 == 0:
                raise LatticeError("LR middle must have odd length")
        else:
            raise LatticeError(f"unknown side {self.side!r}")

    @property
    def all_positive(self) -> bool:
        return all(a > 0 for a in self.prefix)

    def outward_elements(self, n: int) -> list[int]:
        """First n elements reading away from the anchor (sides R and L)."""
        if self.side == "LR":
            raise LatticeError("LR sequences have no single outward reading")
        tail = self.tail_r if self.side == "R" else self.tail_l
        out = list(self.prefix[:n])
        if len(out) < n:
            out.extend(tail.elements(n - len(out)))
        return out


@dataclass(frozen=True)
class IrrationalNormalForm:
    """k*pi + the infinite arctan of a positive eventually-periodic tail."""

    k: int
    tail: PeriodicCF
    side: Literal["R", "L"]

    def blocks(self) -> list[int]:
        if self.k >= 0:
            return [1, -2, 1, -2] * self.k
        return [-1, 2, -1, 2] * (-self.k)

    def characteristic(self, n: int) -> list[int]:
        """First n outward elements of the characteristic sequence."""
        head = self.blocks()
        out = head[:n]
        if len(out) < n:
            out.extend(self.tail.elements(n - len(out)))
        return out

    def as_sequence(self) -> InfiniteLLS:
        blocks = tuple(self.blocks())
        if self.side == "R":
            return InfiniteLLS("R", blocks, tail_r=self.tail)
        return InfiniteLLS("L", blocks, tail_l=self.tail)


def irr_arctan(cf: PeriodicCF) -> InfiniteLLS:
    """Sail sequence of the R-irrational angle with lattice tangent [cf].

    The length-sine sequence of the sail is the continued fraction
    itself, exactly as in the finite case.
    """
    return InfiniteLLS("R", (), tail_r=cf)


def tangent_convergent(s: InfiniteLLS, depth: int) -> Fraction:
    """Value of the depth-th convergent of an all-positive R or L sequence."""
    if not s.all_positive:
        raise LatticeError("tangent of a signed sequence is not defined")
    elems = s.outward_elements(depth)
    return periodic_eval(PeriodicCF(tuple(elems), (1,)), depth)


def _r_engine(elems, period_len: int, pos0: int) -> tuple[int, int]:
    """Exact revolution index of an almost-positive R sequence.

    elems(i) yields the i-th element; all elements at positions >= pos0
    are positive.  Returns (k, number of elements consumed).  Extends
    the line while either anchor ray might still be crossed: a future
    crossing is impossible once the ray lies outside the open cone
    spanned by the current vertex direction and the last edge direction.
    """
    total = Fraction(0)
    pts: list[Point] = [(1, 0), (1, elems(0))]
    rays = ((1, 0), (-1, 0))
    for u in rays:
        total += _segment_ray_crossing(u, pts[0], pts[1])
    i = 1  # next sine position
    consumed = 1
    while True:
        cur = pts[-1]
        edge = vsub(pts[-1], pts[-2])
        # certification needs the incoming edge inside the positive
        # regime too, hence the -1
        if consumed - 1 >= pos0 and consumed > 1:
            pending = False
            for u in rays:
                side = det(cur, u)
                if side == 0 or (side > 0 and det(u, edge) > 0):
                    pending = True
                    break
            if not pending:
                break
        if consumed > pos0 + 600 * max(period_len, 1):
            raise LatticeError("revolution index failed to stabilize")
        nxt = next_vertex(pts[-2], pts[-1], elems(i), elems(i + 1))
        for u in rays:
            total += _segment_ray_crossing(u, cur, nxt)
        pts.append(nxt)
        i += 2
        consumed += 2
    rho = total / 2
    k = 2 * rho - Fraction(1, 2)
    if k.denominator != 1:
        raise LatticeError("infinite line has non-quarter revolution")
    return int(k), consumed


def _normalize_outward(head: tuple[int, ...], tail: PeriodicCF) -> tuple[int, PeriodicCF]:
    """Normal form (k, positive tail) of the outward sequence head ++ tail."""
    tail = tail.canonical()
    if all(a > 0 for a in head):
        return 0, PeriodicCF(tuple(head) + tail.pre, tail.period).canonical()

    def elem(i: int) -> int:
        if i < len(head):
            return head[i]
        j = i - len(head)
        if j < len(tail.pre):
            return tail.pre[j]
        return tail.period[(j - len(tail.pre)) % len(tail.period)]

    per = len(tail.period)
    k, consumed = _r_engine(elem, per, len(head))
    base_len = len(head) + len(tail.pre)
    reps = max(3, (consumed - base_len) // per + 2)
    for attempt in range(6):
        cf_a = _truncated_cf(elem, base_len + (reps + attempt) * per, k)
        cf_b = _truncated_cf(elem, base_len + (reps + attempt + 1) * per, k)
        common = 0
        while common < min(len(cf_a), len(cf_b)) and cf_a[common] == cf_b[common]:
            common += 1
        if common < len(cf_a) - 2:
            continue
        found = _find_periodic_split(cf_a[:common], tail.period)
        if found is None:
            continue
        h, rot = found
        result = PeriodicCF(tuple(cf_a[:h]), rot).canonical()
        if _verify_normal_form(k, result, elem, base_len, per):
            return k, result
    raise LatticeError("periodic tail extraction failed to stabilize")


def _truncated_cf(elem, n: int, expect_k: int) -> list[int]:
    if n % 2 == 0:
        n += 1
    nf = normalize([elem(i) for i in range(n)])
    if nf.k != expect_k:
        raise LatticeError("truncation revolution disagrees with the exact index")
    return to_odd_cf(nf.phi_tan)


def _find_periodic_split(
    window: Sequence[int], period: Sequence[int]
) -> Optional[tuple[int, tuple[int, ...]]]:
    per = len(period)
    for h in range(len(window)):
        if len(window) - h < 2 * per:
            return None
        for phase in range(per):
            rot = tuple(period[phase:]) + tuple(period[:phase])
            span = len(window) - h
            if all(window[h + j] == rot[j % per] for j in range(span)):
                return h, rot
    return None


def _verify_normal_form(k: int, tail: PeriodicCF, elem, base_len: int, per: int) -> bool:
    nf = IrrationalNormalForm(k, tail, "R")
    for extra in (2, 3):
        n = len(nf.blocks()) + len(tail.pre) + extra * max(per, len(tail.period), 1)
        if n % 2 == 0:
            n += 1
        got = normalize(nf.characteristic(n))
        ref_n = base_len + (extra + 2) * per
        if ref_n % 2 == 0:
            ref_n += 1
        ref = normalize([elem(i) for i in range(ref_n)])
        if got.k != ref.k:
            return False
        ca, cb = to_odd_cf(got.phi_tan), to_odd_cf(ref.phi_tan)
        m = min(len(ca), len(cb)) - 2
        if m > 0 and ca[:m] != cb[:m]:
            return False
    return True


def irr_normalize(s: InfiniteLLS) -> IrrationalNormalForm:
    """Normal form of an almost-positive R- or L-infinite expanded angle."""
    if s.side == "LR":
        raise LatticeError("LR angles have no normal form")
    tail = s.tail_r if s.side == "R" else s.tail_l
    k, t = _normalize_outward(s.prefix, tail)
    return IrrationalNormalForm(k, t, s.side)


def irr_congruent(a: InfiniteLLS, b: InfiniteLLS) -> bool:
    """Proper congruence of two same-side infinite angles.

    R and L sides always decide (via normal forms); the LR side decides
    only all-positive sequences, the signed case being open.
    """
    if a.side != b.side:
        raise LatticeError("cannot compare different sides")
    if a.side in ("R", "L"):
        return irr_normalize(a) == irr_normalize(b)
    if not (a.all_positive and b.all_positive):
        raise LatticeError("undecided")
    return _lr_shift_equal(a, b)


def _lr_window(z: InfiniteLLS, margin: int) -> list[int]:
    tl = z.tail_l.canonical()
    tr = z.tail_r.canonical()
    nl = len(tl.pre) + margin * len(tl.period)
    nr = len(tr.pre) + margin * len(tr.period)
    return list(reversed(tl.elements(nl))) + list(z.prefix) + tr.elements(nr)


def _lr_shift_equal(a: InfiniteLLS, b: InfiniteLLS) -> bool:
    pa, pb = a.tail_l.canonical().period, b.tail_l.canonical().period
    qa, qb = a.tail_r.canonical().period, b.tail_r.canonical().period
    if len(pa) != len(pb) or len(qa) != len(qb):
        return False
    wa = _lr_window(a, 6)
    wb = _lr_window(b, 3)
    if len(wb) > len(wa):
        wa, wb = wb, wa
    return any(wa[off : off + len(wb)] == wb for off in range(len(wa) - len(wb) + 1))


def irr_sum(
    left: Optional[IrrationalNormalForm],
    middles: Sequence[NormalForm],
    right: Optional[IrrationalNormalForm],
    seps: Sequence[int],
) -> "InfiniteLLS | IrrationalNormalForm":
    """M-sum with an optional L-infinite first term and R-infinite last term.

    R- and L-side results are renormalized; an LR result is returned as
    the concatenated sequence, since no LR normal form exists.
    """
    if left is None and right is None:
        raise LatticeError("at least one infinite summand required")
    if left is not None and left.side != "L":
        raise LatticeError("left summand must be L-side")
    if right is not None and right.side != "R":
        raise LatticeError("right summand must be R-side")
    mids = [characteristic_sequence(nf) for nf in middles]
    if any(not c for c in mids):
        raise LatticeError("empty characteristic sequence")
    expected = max(0, len(middles) - 1 + (left is not None) + (right is not None))
    if len(seps) != expected:
        raise LatticeError(f"expected {expected} separators, got {len(seps)}")
    seps = list(seps)
    inner = seps[(left is not None) : len(seps) - (right is not None)] if mids else []
    mid_seq = list(interleave(mids, inner)) if mids else []
    if left is not None and right is not None:
        prefix = list(reversed(left.blocks())) + [seps[0]]
        if mids:
            prefix += mid_seq + [seps[-1]]
        prefix += right.blocks()
        return InfiniteLLS("LR", tuple(prefix), tail_l=left.tail, tail_r=right.tail)
    if right is not None:
        head = mid_seq + ([seps[-1]] if seps else []) + right.blocks()
        return irr_normalize(InfiniteLLS("R", tuple(head), tail_r=right.tail))
    head = list(reversed(mid_seq)) + ([seps[0]] if seps else []) + left.blocks()
    return irr_normalize(InfiniteLLS("L", tuple(head), tail_l=left.tail))
