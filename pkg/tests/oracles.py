"""Independent reference computations used only by the tests.

Nothing here calls into the sweep; these are slower, brute-force routes to
the same answers.
"""

from __future__ import annotations

import random
from fractions import Fraction

from reebtrap.exactgeom import Point, Segment, on_segment
from reebtrap.polygon import PolygonError, diagnose, validate

F = Fraction


def winding_number(p: Point, ring) -> int:
    """Signed winding number (Sunday's rule); boundary points are not handled."""
    wn = 0
    k = len(ring)
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        is_left = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)
        if a.y <= p.y < b.y and is_left > 0:
            wn += 1
        elif b.y <= p.y < a.y and is_left < 0:
            wn -= 1
    return wn


def winding_classify(p: Point, ring) -> str:
    k = len(ring)
    if any(on_segment(p, Segment(ring[i], ring[(i + 1) % k])) for i in range(k)):
        return "boundary"
    return "inside" if winding_number(p, ring) != 0 else "outside"


def inside_region(p: Point, poly) -> bool:
    if winding_classify(p, poly.outer) != "inside":
        return False
    return all(winding_classify(p, h) == "outside" for h in poly.holes)


def _crossings_at(poly, y: Fraction):
    """x-coordinates where the horizontal line at y crosses edges (strict spans)."""
    xs = []
    for r, ring in enumerate(poly.rings):
        k = len(ring)
        for i in range(k):
            a, b = ring[i], ring[(i + 1) % k]
            lo, hi = (a, b) if a.y < b.y else (b, a)
            if lo.y < y < hi.y:
                xs.append((lo.x + (hi.x - lo.x) * (y - lo.y) / (hi.y - lo.y), (r, i)))
    return sorted(xs)


def probe_kind(poly, r: int, i: int) -> str:
    """Vertex kind code from probe points and an exact inside test."""
    ring = poly.rings[r]
    a, v, b = ring[i - 1], ring[i], ring[(i + 1) % len(ring)]
    heights = sorted({p.y for _, _, p in poly.vertices()})
    gap = min(h2 - h1 for h1, h2 in zip(heights, heights[1:]))
    delta = gap / 4
    if (a.y > v.y) == (b.y > v.y):
        up = a.y > v.y
        while True:
            y = v.y + delta if up else v.y - delta

            def x_on(p):
                return v.x + (p.x - v.x) * (y - v.y) / (p.y - v.y)

            lo_x, hi_x = sorted((x_on(a), x_on(b)))
            # shrink until no foreign edge passes between the two incident edges
            if not any(lo_x < x < hi_x for x, _ in _crossings_at(poly, y)):
                break
            delta /= 2
        probe = Point((lo_x + hi_x) / 2, y)
        inside = inside_region(probe, poly)
        if up:
            return "so" if inside else "sp"
        return "si" if inside else "me"
    # regular vertex: step right by less than the distance to the next crossing
    others = []
    for rr, rg in enumerate(poly.rings):
        k = len(rg)
        for j in range(k):
            p, q = rg[j], rg[(j + 1) % k]
            if v in (p, q) or p.y == q.y:
                continue
            lo, hi = (p, q) if p.y < q.y else (q, p)
            if lo.y <= v.y <= hi.y:
                x = lo.x + (hi.x - lo.x) * (v.y - lo.y) / (hi.y - lo.y)
                if x > v.x:
                    others.append(x)
    step = (min(others) - v.x) / 2 if others else F(1)
    return "rl" if inside_region(Point(v.x + step, v.y), poly) else "rr"


def slice_reeb_graph(poly):
    """Ranked Reeb graph from per-slab fibers.

    In each slab between consecutive event heights the fibers are the
    intervals between consecutive edge crossings at the slab's mid-height.
    A fiber whose wall pair also bounded a fiber in the slab below continues
    the same Reeb edge; otherwise the edge starts at the slab's lower vertex.
    Returns (kind codes by rank, sorted edge list).
    """
    verts = sorted(poly.vertices(), key=lambda t: t[2].y)
    heights = [p.y for _, _, p in verts]
    kinds = [probe_kind(poly, r, i) for r, i, _ in verts]
    open_edges: dict = {}   # wall pair -> tail rank
    edges = []
    for j in range(len(heights) - 1):
        mid = (heights[j] + heights[j + 1]) / 2
        xs = _crossings_at(poly, mid)
        assert len(xs) % 2 == 0
        pairs = [(xs[k][1], xs[k + 1][1]) for k in range(0, len(xs), 2)]
        now = {}
        for pair in pairs:
            now[pair] = open_edges.get(pair, j)
        for pair, tail in open_edges.items():
            if pair not in now:
                edges.append((tail, j))
        open_edges = now
    top = len(heights) - 1
    for tail in open_edges.values():
        edges.append((tail, top))
    return kinds, sorted(edges)


def shoelace(points) -> Fraction:
    pts = []
    for p in points:
        if not pts or pts[-1] != p:
            pts.append(p)
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    if len(pts) < 3:
        return F(0)
    s = F(0)
    for k in range(len(pts)):
        p, q = pts[k], pts[(k + 1) % len(pts)]
        s += p.x * q.y - q.x * p.y
    return abs(s) / 2


# ---------------------------------------------------------------- fuzz corpus

def star_ring(rng: random.Random, cx: int, cy: int, radius: int, k: int):
    """Random star-shaped ring around (cx, cy); may be invalid, callers validate."""
    import math
    angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(k))
    pts = []
    for t in angles:
        r = rng.uniform(radius * 0.3, radius)
        pts.append((cx + round(r * math.cos(t)), cy + round(r * math.sin(t))))
    return pts


def thin_triangle(rng: random.Random, x: int, y0: int, y1: int):
    ym = rng.randint(y0 + 1, y1 - 1)
    dx = rng.choice([-1, 1]) * rng.randint(1, 3)
    return [(x, y0), (x + dx, ym), (x + rng.randint(-1, 1), y1)]


def random_polygon(rng: random.Random):
    """One valid polygon, retrying until validation passes."""
    while True:
        style = rng.random()
        if style < 0.4:
            outer = star_ring(rng, 0, 0, 400, rng.randint(3, 12))
            holes = []
        elif style < 0.75:
            # big triangle with thin triangular holes in separate columns
            outer = [(rng.randint(-50, -40), rng.randint(-300, -250)),
                     (rng.randint(900, 1000), rng.randint(-200, 200)),
                     (rng.randint(-50, -40), rng.randint(250, 300))]
            holes = []
            for c in range(rng.randint(1, 3)):
                y0 = rng.randint(-150, 100)
                holes.append(thin_triangle(rng, 30 + 40 * c, y0, y0 + rng.randint(3, 100)))
        else:
            outer = star_ring(rng, 0, 0, 1000, rng.randint(3, 10))
            holes = [star_ring(rng, rng.randint(-150, 150), rng.randint(-150, 150), 60,
                               rng.randint(3, 5)) for _ in range(rng.randint(1, 2))]
        if diagnose(outer, holes):
            continue
        try:
            return validate(outer, holes)
        except PolygonError:
            continue


def fuzz_corpus(count: int, seed: int = 20240411):
    rng = random.Random(seed)
    return [random_polygon(rng) for _ in range(count)]
