"""Polygons with holes: validation, normalization and local vertex kinds."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .exactgeom import (
    INSIDE,
    Point,
    Segment,
    orient,
    point,
    point_in_ring,
    segments_cross,
    segments_intersect,
    signed_area,
)

Ring = tuple[Point, ...]


class VertexKind(enum.Enum):
    SOURCE = "so"
    SINK = "si"
    REGULAR_LEFT = "rl"
    REGULAR_RIGHT = "rr"
    MERGE = "me"
    SPLIT = "sp"

    @property
    def code(self) -> str:
        return self.value

    @property
    def is_regular(self) -> bool:
        return self in (VertexKind.REGULAR_LEFT, VertexKind.REGULAR_RIGHT)

    @classmethod
    def from_code(cls, code: str) -> "VertexKind":
        return cls(code)


class PolygonError(ValueError):
    """Base class for validation failures.

    ``ring`` and ``vertices`` index into the *raw* input, ring 0 being the
    outer ring and ring ``k`` the hole ``k - 1``.
    """

    def __init__(self, message: str, ring: int | None = None, vertices: tuple = ()):
        super().__init__(message)
        self.ring = ring
        self.vertices = vertices

    @property
    def kind(self) -> str:
        return type(self).__name__


class DegenerateRing(PolygonError):
    pass


class NonSimpleRing(PolygonError):
    pass


class HoleNotInside(PolygonError):
    pass


class RingsIntersect(PolygonError):
    pass


class HolesOverlap(PolygonError):
    pass


class DuplicateHeight(PolygonError):
    pass


@dataclass(frozen=True)
class PolygonWithHoles:
    """A validated region. Outer ring is CCW, holes CW (interior on the left)."""

    outer: Ring
    holes: tuple[Ring, ...] = ()

    @property
    def rings(self) -> tuple[Ring, ...]:
        return (self.outer,) + self.holes

    @property
    def connectivity(self) -> int:
        return 1 + len(self.holes)

    @property
    def vertex_count(self) -> int:
        return sum(len(r) for r in self.rings)

    def vertices(self) -> Iterator[tuple[int, int, Point]]:
        for r, ring in enumerate(self.rings):
            for i, p in enumerate(ring):
                yield r, i, p

    def edge(self, ring: int, index: int) -> Segment:
        """Directed edge from vertex ``index`` to its successor."""
        rg = self.rings[ring]
        return Segment(rg[index], rg[(index + 1) % len(rg)])

    def transformed(self, sx: int = 1, sy: int = 1) -> "PolygonWithHoles":
        """Reflect coordinates (sx, sy in {1, -1}) and re-validate."""
        def tr(ring):
            return [Point(p.x * sx, p.y * sy) for p in ring]
        return validate(tr(self.outer), [tr(h) for h in self.holes])


def _coerce_ring(raw) -> Ring:
    out = []
    for p in raw:
        if isinstance(p, Point):
            out.append(Point(Fraction(p.x), Fraction(p.y)))
        else:
            x, y = p
            out.append(point(x, y))
    return tuple(out)


def _ring_edges(ring: Ring) -> list[Segment | None]:
    k = len(ring)
    edges = []
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        edges.append(Segment(a, b) if a != b else None)
    return edges


def _ring_problems(ring: Ring, r: int) -> list[PolygonError]:
    k = len(ring)
    if k < 3:
        return [DegenerateRing(f"ring {r} has {k} vertices (need >= 3)", r)]
    edges = _ring_edges(ring)
    for i, e in enumerate(edges):
        if e is None:
            return [DegenerateRing(f"ring {r}: vertices {i} and {(i + 1) % k} coincide",
                                   r, (i, (i + 1) % k))]
    if signed_area(ring) == 0:
        return [DegenerateRing(f"ring {r} has zero area", r)]
    problems = []
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            if adjacent:
                hit = segments_cross(edges[i], edges[j])
            else:
                hit = segments_intersect(edges[i], edges[j])
            if hit:
                problems.append(NonSimpleRing(
                    f"ring {r}: edges {i} and {j} intersect", r, (i, j)))
    return problems


def diagnose(raw_outer, raw_holes=()) -> list[PolygonError]:
    """Every validation problem of the raw input, in a stable order."""
    try:
        rings = [_coerce_ring(raw_outer)] + [_coerce_ring(h) for h in raw_holes]
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad coordinates: {exc}") from exc

    problems: list[PolygonError] = []
    simple = []
    for r, ring in enumerate(rings):
        ring_probs = _ring_problems(ring, r)
        problems.extend(ring_probs)
        simple.append(not ring_probs)

    # general position: distinct heights everywhere
    labelled = sorted(
        ((p.y, r, i) for r, ring in enumerate(rings) for i, p in enumerate(ring)),
    )
    for (y0, r0, i0), (y1, r1, i1) in zip(labelled, labelled[1:]):
        if y0 == y1:
            problems.append(DuplicateHeight(
                f"vertices ({r0},{i0}) and ({r1},{i1}) share height {y0}",
                r0, ((r0, i0), (r1, i1))))

    if not all(simple):
        return problems

    outer = rings[0]
    outer_edges = _ring_edges(outer)
    hole_edges = [_ring_edges(h) for h in rings[1:]]
    for h, hole in enumerate(rings[1:], start=1):
        for i, p in enumerate(hole):
            if point_in_ring(p, outer) != INSIDE:
                problems.append(HoleNotInside(
                    f"hole ring {h}: vertex {i} is not strictly inside the outer ring", h, (i,)))
                break
        if any(segments_intersect(e, f) for e in hole_edges[h - 1] for f in outer_edges):
            problems.append(RingsIntersect(f"hole ring {h} meets the outer ring", h))
    for h1 in range(1, len(rings)):
        for h2 in range(h1 + 1, len(rings)):
            if any(segments_intersect(e, f)
                   for e in hole_edges[h1 - 1] for f in hole_edges[h2 - 1]):
                problems.append(RingsIntersect(f"hole rings {h1} and {h2} intersect", h1, (h2,)))
            elif (point_in_ring(rings[h1][0], rings[h2]) == INSIDE
                  or point_in_ring(rings[h2][0], rings[h1]) == INSIDE):
                problems.append(HolesOverlap(f"hole rings {h1} and {h2} are nested", h1, (h2,)))
    return problems


def _oriented(ring: Ring, ccw: bool) -> Ring:
    if (signed_area(ring) > 0) == ccw:
        return ring
    # reverse but keep vertex 0 in place
    return (ring[0],) + tuple(reversed(ring[1:]))


def validate(raw_outer, raw_holes=()) -> PolygonWithHoles:
    """Check and normalize a polygon; raises the first :class:`PolygonError`.

    Use :func:`diagnose` to see all problems at once.
    """
    problems = diagnose(raw_outer, raw_holes)
    if problems:
        raise problems[0]
    outer = _oriented(_coerce_ring(raw_outer), ccw=True)
    holes = tuple(_oriented(_coerce_ring(h), ccw=False) for h in raw_holes)
    return PolygonWithHoles(outer, holes)


def classify_vertex(poly: PolygonWithHoles, ring_index: int, vertex_index: int) -> VertexKind:
    """Local event kind of a vertex under the upward sweep.

    Indices refer to the normalized rings of ``poly``.
    """
    rings = poly.rings
    if not 0 <= ring_index < len(rings):
        raise IndexError(f"ring index {ring_index} out of range")
    ring = rings[ring_index]
    if not 0 <= vertex_index < len(ring):
        raise IndexError(f"vertex index {vertex_index} out of range")
    k = len(ring)
    a = ring[vertex_index - 1]
    v = ring[vertex_index]
    b = ring[(vertex_index + 1) % k]
    if a.y > v.y and b.y > v.y:
        return VertexKind.SOURCE if orient(a, v, b) > 0 else VertexKind.SPLIT
    if a.y < v.y and b.y < v.y:
        return VertexKind.SINK if orient(a, v, b) > 0 else VertexKind.MERGE
    # boundary runs upward through v -> interior on the -x side
    return VertexKind.REGULAR_RIGHT if a.y < v.y else VertexKind.REGULAR_LEFT


def net_area(poly: PolygonWithHoles) -> Fraction:
    return abs(signed_area(poly.outer)) - sum(abs(signed_area(h)) for h in poly.holes)


def vertex_kinds(poly: PolygonWithHoles) -> dict[tuple[int, int], VertexKind]:
    return {(r, i): classify_vertex(poly, r, i) for r, i, _ in poly.vertices()}


def ring_points(raw: Sequence) -> Ring:
    """Public helper: coerce a sequence of pairs into exact points."""
    return _coerce_ring(raw)
