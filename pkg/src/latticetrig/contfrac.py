"""Finite and eventually-periodic continued fractions.

Ordinary continued fractions [a0, a1, ..., an] have positive elements
after a0; every rational has exactly one odd-length and one even-length
such expansion, related by [..., x] = [..., x-1, 1].  Square-bracket
evaluation of arbitrary integer sequences ]a0, ..., an[ is carried out
over the extended rationals, where intermediate 0 and infinity are
legal values rather than errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .numbers import ExtRat, LatticeError, RatLike


def to_cf(q: RatLike) -> list[int]:
    """Canonical (Euclidean) continued fraction of a rational."""
    q = Fraction(q)
    out: list[int] = []
    while True:
        a = q.numerator // q.denominator
        out.append(a)
        q -= a
        if q == 0:
            return out
        q = 1 / q


def _flip_parity(cf: list[int]) -> list[int]:
    if cf[-1] == 1 and len(cf) > 1:
        return cf[:-2] + [cf[-2] + 1]
    return cf[:-1] + [cf[-1] - 1, 1]


def to_odd_cf(q: RatLike) -> list[int]:
    """The unique odd-length ordinary continued fraction of q."""
    cf = to_cf(q)
    return cf if len(cf) % 2 == 1 else _flip_parity(cf)


def to_even_cf(q: RatLike) -> list[int]:
    """The unique even-length ordinary continued fraction of q."""
    cf = to_cf(q)
    return cf if len(cf) % 2 == 0 else _flip_parity(cf)


def eval_signed(seq: Sequence[int]) -> ExtRat:
    """Evaluate ]a0, a1, ..., an[ right to left over the extended rationals."""
    if not seq:
        raise LatticeError("eval_signed: empty sequence")
    val = ExtRat.of(seq[-1])
    for a in reversed(seq[:-1]):
        val = ExtRat.of(a) + val.recip()
    return val


def concat_rationals(qs: Sequence[RatLike]) -> ExtRat:
    """Evaluate ]q1, ..., qk[: concatenate the odd CFs of the qi, then evaluate."""
    if not qs:
        raise LatticeError("concat_rationals: empty operand list")
    seq: list[int] = []
    for q in qs:
        seq.extend(to_odd_cf(q))
    return eval_signed(seq)


def convergents(cf: Sequence[int]) -> list[tuple[int, int]]:
    """Convergents (p_i, q_i) of [a0, ..., an] via the standard recurrence."""
    out = []
    p0, p1 = 0, 1
    q0, q1 = 1, 0
    for a in cf:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        out.append((p1, q1))
    return out


@dataclass(frozen=True)
class PeriodicCF:
    """An eventually-periodic continued fraction [pre..., (period...) repeating].

    All elements are positive integers, so the value is a quadratic
    irrational greater than or equal to 1.
    """

    pre: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise LatticeError("PeriodicCF: empty period")
        if any(a < 1 for a in self.pre) or any(a < 1 for a in self.period):
            raise LatticeError("PeriodicCF: elements must be >= 1")

    def elements(self, n: int) -> list[int]:
        """The first n elements of the expansion."""
        out = list(self.pre[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out

    def canonical(self) -> "PeriodicCF":
        """Minimal period and shortest preperiod representing the same expansion."""
        per = list(self.period)
        for d in range(1, len(per) + 1):
            if len(per) % d == 0 and per == per[:d] * (len(per) // d):
                per = per[:d]
                break
        pre = list(self.pre)
        while pre and pre[-1] == per[-1]:
            per = [per[-1]] + per[:-1]
            pre.pop()
        return PeriodicCF(tuple(pre), tuple(per))


def periodic_eval(cf: PeriodicCF, depth: int) -> Fraction:
    """Value of the depth-th convergent of an eventually-periodic CF."""
    if depth < 1:
        raise LatticeError("periodic_eval: depth must be >= 1")
    v = eval_signed(cf.elements(depth))
    return v.finite
