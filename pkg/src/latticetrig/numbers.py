"""Exact arithmetic base layer.

Arbitrary-precision integers and rationals (Python ints and
``fractions.Fraction``) plus the extension of the rationals by a single
infinity, with the rules ``q + inf = inf``, ``1/0 = inf``, ``1/inf = 0``.
``inf + inf`` is undefined and raises.  Everything downstream is exact;
no floats appear anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

RatLike = Union[int, Fraction]


class LatticeError(ValueError):
    """Raised when an input violates an operation's domain contract."""


def gcd_lcm(xs: Iterable[int]) -> tuple[int, int]:
    """Return (gcd, lcm) of a nonempty collection of integers.

    gcd follows the convention gcd(0, x) = |x|; lcm requires every
    operand to be nonzero.
    """
    xs = list(xs)
    if not xs:
        raise LatticeError("gcd_lcm: empty operand list")
    g = 0
    for x in xs:
        g = math.gcd(g, x)
    if any(x == 0 for x in xs):
        raise LatticeError("zero operand")
    return g, math.lcm(*xs)


def mod_inverse(b: int, c: int) -> int:
    """Inverse of b modulo c, normalized to the range 1..c.

    For c = 1 the inverse is taken to be 1.
    """
    if c < 1:
        raise LatticeError("mod_inverse: modulus must be >= 1")
    try:
        r = pow(b, -1, c)
    except ValueError:
        raise LatticeError("not invertible") from None
    return r if r != 0 else c


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


class ExtRat:
    """A rational number or the single infinity of the extended rationals.

    Arithmetic follows: q + inf = inf, 1/0 = inf, 1/inf = 0.  The sum
    inf + inf is undefined and raises LatticeError.  When ordered,
    infinity compares greater than every finite value.
    """

    __slots__ = ("finite",)

    def __init__(self, finite: Fraction | None):
        object.__setattr__(self, "finite", finite)

    def __setattr__(self, *args):
        raise AttributeError("ExtRat is immutable")

    @staticmethod
    def of(x: "ExtRat | RatLike") -> "ExtRat":
        if isinstance(x, ExtRat):
            return x
        return ExtRat(Fraction(x))

    @property
    def is_infinite(self) -> bool:
        return self.finite is None

    def __add__(self, other) -> "ExtRat":
        other = ExtRat.of(other)
        if self.is_infinite and other.is_infinite:
            raise LatticeError("undefined extended sum")
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtRat(self.finite + other.finite)

    __radd__ = __add__

    def recip(self) -> "ExtRat":
        if self.is_infinite:
            return ExtRat(Fraction(0))
        if self.finite == 0:
            return INF
        return ExtRat(1 / self.finite)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtRat):
            return self.finite == other.finite
        if isinstance(other, (int, Fraction)):
            return self.finite is not None and self.finite == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        other = ExtRat.of(other)
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.finite < other.finite

    def __le__(self, other) -> bool:
        return self == ExtRat.of(other) or self < other

    def __gt__(self, other) -> bool:
        return ExtRat.of(other) < self

    def __ge__(self, other) -> bool:
        return ExtRat.of(other) <= self

    def __hash__(self) -> int:
        return hash(self.finite)

    def __repr__(self) -> str:
        return f"ExtRat({format_extrat(self)!r})"

    def __str__(self) -> str:
        return format_extrat(self)


INF = ExtRat(None)


def extrat_add(a: "ExtRat | RatLike", b: "ExtRat | RatLike") -> ExtRat:
    return ExtRat.of(a) + ExtRat.of(b)


def extrat_recip(a: "ExtRat | RatLike") -> ExtRat:
    return ExtRat.of(a).recip()


def format_rat(q: RatLike) -> str:
    """Serialize a rational as "p/q", omitting the denominator when 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise LatticeError(f"malformed rational {s!r}") from exc


def format_extrat(v: ExtRat) -> str:
    return "inf" if v.is_infinite else format_rat(v.finite)


def parse_extrat(s: str) -> ExtRat:
    s = s.strip()
    if s in ("inf", "oo"):
        return INF
    return ExtRat(parse_rat(s))
