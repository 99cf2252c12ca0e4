"""Exact rational scalars, points and the predicates built on them.

Every coordinate is a :class:`fractions.Fraction`; nothing in here touches
binary floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

Rational = Fraction

INSIDE = "inside"
OUTSIDE = "outside"
BOUNDARY = "boundary"

_NUMBER_RE = re.compile(
    r"""^\s*(?:
        (?P<num>[+-]?\d+)\s*/\s*(?P<den>[+-]?\d+)      # p/q
      | (?P<dec>[+-]?(?:\d+\.?\d*|\.\d+))              # 12, 3.25, .5
    )\s*$""",
    re.VERBOSE,
)


class RationalParseError(ValueError):
    """Raised for text that is not an integer, fraction or finite decimal."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"5"``, ``"-3/4"`` or ``"3.25"`` into an exact Fraction.

    Decimals are read digit by digit (denominator ``10**k``), so ``"0.1"`` is
    exactly 1/10.
    """
    if not isinstance(text, str):
        raise RationalParseError(f"expected a string, got {type(text).__name__}")
    m = _NUMBER_RE.match(text)
    if m is None:
        raise RationalParseError(f"malformed number: {text!r}")
    if m.group("dec") is not None:
        return Fraction(m.group("dec"))
    den = int(m.group("den"))
    if den == 0:
        raise RationalParseError(f"zero denominator: {text!r}")
    return Fraction(int(m.group("num")), den)


def to_rational(value) -> Fraction:
    """Coerce int / Fraction / str to Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise RationalParseError("booleans are not numbers here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalParseError(f"cannot take {value!r} as an exact number")


def render_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def point(x, y) -> Point:
    return Point(to_rational(x), to_rational(y))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"zero-length segment at {self.a}")


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def cross(p: Point, q: Point, r: Point) -> Fraction:
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orient(p: Point, q: Point, r: Point) -> int:
    """+1 for a left turn p->q->r, -1 for a right turn, 0 when collinear."""
    return _sign(cross(p, q, r))


def edge_x_at_level(s: Segment, y: Fraction) -> Fraction:
    a, b = s.a, s.b
    if a.y == b.y:
        raise ValueError("horizontal segment has no unique crossing")
    lo, hi = (a.y, b.y) if a.y < b.y else (b.y, a.y)
    if not lo <= y <= hi:
        raise ValueError(f"level {y} outside segment span [{lo}, {hi}]")
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y)


def signed_area(ring: Sequence[Point]) -> Fraction:
    """Shoelace area; positive for counter-clockwise rings."""
    if len(ring) < 3:
        raise ValueError("a ring needs at least 3 vertices")
    total = Fraction(0)
    k = len(ring)
    for i in range(k):
        p, q = ring[i], ring[(i + 1) % k]
        total += p.x * q.y - q.x * p.y
    return total / 2


def on_segment(p: Point, s: Segment) -> bool:
    """True iff p lies on the closed segment s."""
    a, b = s.a, s.b
    if orient(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def point_in_ring(p: Point, ring: Sequence[Point]) -> str:
    """Classify p against a simple ring by exact crossing count.

    An edge counts when its lower endpoint is strictly below the rightward ray
    and its upper endpoint is at or above it, which handles vertex hits.
    """
    k = len(ring)
    crossings = 0
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        if on_segment(p, Segment(a, b)):
            return BOUNDARY
        lo, hi = (a, b) if a.y < b.y else (b, a)
        if lo.y < p.y <= hi.y:
            # crossing is right of p iff p is left of the upward edge lo->hi
            if orient(lo, hi, p) > 0:
                crossings += 1
    return INSIDE if crossings % 2 else OUTSIDE


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """Closed-segment intersection test (any shared point counts)."""
    d1 = orient(s2.a, s2.b, s1.a)
    d2 = orient(s2.a, s2.b, s1.b)
    d3 = orient(s1.a, s1.b, s2.a)
    d4 = orient(s1.a, s1.b, s2.b)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and on_segment(s1.a, s2))
        or (d2 == 0 and on_segment(s1.b, s2))
        or (d3 == 0 and on_segment(s2.a, s1))
        or (d4 == 0 and on_segment(s2.b, s1))
    )


def segments_cross(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments meet anywhere besides a shared endpoint."""
    shared = {s1.a, s1.b} & {s2.a, s2.b}
    if not shared:
        return segments_intersect(s1, s2)
    if len(shared) == 2:
        return True  # same segment
    (c,) = shared
    u = s1.b if s1.a == c else s1.a
    v = s2.b if s2.a == c else s2.a
    # two segments from a common endpoint overlap only if they point the same way
    if orient(c, u, v) != 0:
        return False
    return (u.x - c.x) * (v.x - c.x) + (u.y - c.y) * (v.y - c.y) > 0
