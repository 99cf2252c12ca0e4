"""Upward sweep producing the Reeb graph and the trapezoidal map in one pass.

Each active component is the open strip between two polygon edges (its
walls). Every event closes one or two components and opens zero, one or two,
and every closed component is one trapezoid and one Reeb edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactgeom import Point, edge_x_at_level
from .polygon import PolygonWithHoles, VertexKind, classify_vertex
from .reebgraph import ReebGraph

VertexRef = tuple[int, int]   # (ring, index) in the normalized polygon
EdgeRef = tuple[int, int]     # edge from vertex (ring, index) to its successor
Span = tuple[Fraction, Fraction]


class InternalInvariantViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class Trapezoid:
    lower_vertex: VertexRef
    upper_vertex: VertexRef
    left_wall: EdgeRef
    right_wall: EdgeRef
    bottom_span: Span
    top_span: Span
    bottom_y: Fraction
    top_y: Fraction
    reeb_edge: int

    @property
    def area(self) -> Fraction:
        widths = (self.bottom_span[1] - self.bottom_span[0]) + (self.top_span[1] - self.top_span[0])
        return (self.top_y - self.bottom_y) * widths / 2

    def corners(self) -> list[Point]:
        """Counter-clockwise corners, repeated where a side is a point."""
        (b0, b1), (t0, t1) = self.bottom_span, self.top_span
        return [Point(b0, self.bottom_y), Point(b1, self.bottom_y),
                Point(t1, self.top_y), Point(t0, self.top_y)]


@dataclass(frozen=True)
class Ray:
    vertex: VertexRef
    direction: str   # "left" | "right"
    start: Point
    end: Point


@dataclass(frozen=True)
class TrapezoidalMap:
    cells: tuple[Trapezoid, ...]
    inserted_segments: tuple[Ray, ...]
    polygon_vertex_count: int

    @property
    def map_vertex_count(self) -> int:
        return self.polygon_vertex_count + len(self.inserted_segments)

    @property
    def area(self) -> Fraction:
        return sum((c.area for c in self.cells), Fraction(0))


@dataclass
class _Component:
    left: EdgeRef
    right: EdgeRef
    tail: int            # rank of the Reeb vertex the open edge leaves from
    lower: VertexRef
    bottom: Span


@dataclass(frozen=True)
class SweepResult:
    graph: ReebGraph
    trapezoids: TrapezoidalMap
    rank_of: dict
    vertex_at_rank: tuple

    def __iter__(self):
        # unpacks as (graph, trapezoidal map)
        return iter((self.graph, self.trapezoids))


def event_order(poly: PolygonWithHoles) -> list[VertexRef]:
    """Vertices by ascending height (general position makes this strict)."""
    return [(r, i) for r, i, _ in sorted(poly.vertices(), key=lambda t: t[2].y)]


def build(poly: PolygonWithHoles) -> SweepResult:
    """Sweep ``poly`` bottom to top; see module docstring."""
    rings = poly.rings
    order = event_order(poly)
    rank_of = {v: k for k, v in enumerate(order)}
    kinds: list[VertexKind] = []

    def pt(v: VertexRef) -> Point:
        return rings[v[0]][v[1]]

    def wall_x(e: EdgeRef, y: Fraction) -> Fraction:
        return edge_x_at_level(poly.edge(*e), y)

    active: list[_Component] = []
    raw_edges: list[tuple[int, int]] = []
    cells: list[dict] = []
    rays: list[Ray] = []

    def close(c: _Component, v: VertexRef, rank: int, top: Span) -> None:
        raw_edges.append((c.tail, rank))
        cells.append(dict(lower_vertex=c.lower, upper_vertex=v, left_wall=c.left,
                          right_wall=c.right, bottom_span=c.bottom, top_span=top,
                          bottom_y=pt(c.lower).y, top_y=pt(v).y, edge_index=len(raw_edges) - 1))

    def ray(v: VertexRef, direction: str, x: Fraction) -> None:
        p = pt(v)
        if x == p.x:
            raise InternalInvariantViolation(f"zero-length ray at {v}")
        rays.append(Ray(v, direction, p, Point(x, p.y)))

    def find(pred, what: str, v: VertexRef) -> int:
        for idx, c in enumerate(active):
            if pred(c):
                return idx
        raise InternalInvariantViolation(f"no active component {what} for vertex {v}")

    for rank, v in enumerate(order):
        r, i = v
        k = len(rings[r])
        e_in: EdgeRef = (r, (i - 1) % k)
        e_out: EdgeRef = (r, i)
        p = pt(v)
        y = p.y
        kind = classify_vertex(poly, r, i)
        kinds.append(kind)

        if kind is VertexKind.SOURCE:
            idx = len(active)
            for j, c in enumerate(active):
                if wall_x(c.left, y) > p.x:
                    idx = j
                    break
            active.insert(idx, _Component(e_in, e_out, rank, v, (p.x, p.x)))

        elif kind is VertexKind.SINK:
            idx = find(lambda c: c.left == e_out and c.right == e_in, "bounded by both edges", v)
            close(active.pop(idx), v, rank, (p.x, p.x))

        elif kind is VertexKind.SPLIT:
            idx = find(lambda c: wall_x(c.left, y) < p.x < wall_x(c.right, y), "containing", v)
            c = active.pop(idx)
            xl, xr = wall_x(c.left, y), wall_x(c.right, y)
            close(c, v, rank, (xl, xr))
            ray(v, "left", xl)
            ray(v, "right", xr)
            active[idx:idx] = [
                _Component(c.left, e_out, rank, v, (xl, p.x)),
                _Component(e_in, c.right, rank, v, (p.x, xr)),
            ]

        elif kind is VertexKind.MERGE:
            idx = find(lambda c: c.right == e_in, "ending at the left edge", v)
            if idx + 1 >= len(active) or active[idx + 1].left != e_out:
                raise InternalInvariantViolation(f"merge at {v} is not flanked by two components")
            lc, rc = active[idx], active[idx + 1]
            xl, xr = wall_x(lc.left, y), wall_x(rc.right, y)
            close(lc, v, rank, (xl, p.x))
            close(rc, v, rank, (p.x, xr))
            ray(v, "left", xl)
            ray(v, "right", xr)
            active[idx:idx + 2] = [_Component(lc.left, rc.right, rank, v, (xl, xr))]

        elif kind is VertexKind.REGULAR_RIGHT:
            # boundary runs up through v; v sits on a right wall
            idx = find(lambda c: c.right == e_in, "with this right wall", v)
            c = active[idx]
            xl = wall_x(c.left, y)
            close(c, v, rank, (xl, p.x))
            ray(v, "left", xl)
            active[idx] = _Component(c.left, e_out, rank, v, (xl, p.x))

        else:  # REGULAR_LEFT: boundary runs down through v; v sits on a left wall
            idx = find(lambda c: c.left == e_out, "with this left wall", v)
            c = active[idx]
            xr = wall_x(c.right, y)
            close(c, v, rank, (p.x, xr))
            ray(v, "right", xr)
            active[idx] = _Component(e_in, c.right, rank, v, (p.x, xr))

    if active:
        raise InternalInvariantViolation(f"{len(active)} components still open after the sweep")

    graph = ReebGraph(tuple(kinds), tuple(raw_edges))
    # graph.edges is sorted; map each cell to its slot in that order
    slots: dict[tuple[int, int], list[int]] = {}
    for pos, e in enumerate(graph.edges):
        slots.setdefault(e, []).append(pos)
    used: dict[tuple[int, int], int] = {}
    trapezoids = []
    for cell in cells:
        e = raw_edges[cell.pop("edge_index")]
        n_used = used.get(e, 0)
        used[e] = n_used + 1
        trapezoids.append(Trapezoid(reeb_edge=slots[e][n_used], **cell))
    tmap = TrapezoidalMap(tuple(trapezoids), tuple(rays), poly.vertex_count)
    return SweepResult(graph, tmap, rank_of, tuple(order))
