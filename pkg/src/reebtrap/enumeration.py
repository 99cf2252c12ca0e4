"""Exhaustive enumeration of optimal Reeb graphs on n-connected polygons.

An optimal polygon is a triangle with n - 1 triangular holes. A
:class:`Configuration` fixes the combinatorics (height ranks, which side each
middle vertex sits on, left-to-right order of holes); :func:`realize` turns it
into coordinates and the sweep gives the graph.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .exactgeom import Point
from .polygon import PolygonError, PolygonWithHoles, VertexKind, classify_vertex, validate
from .reebgraph import (
    DEFAULT_SETTINGS,
    ORDERED_SETTINGS,
    EquivalenceSettings,
    ReebGraph,
    class_certificate,
    is_optimal,
)
from .sweep import build

LEFT, RIGHT = "left", "right"

PUBLISHED_COUNTS = {1: 1, 2: 4, 3: 133}
# left/right B-position tallies for the thirteen published overlapping-hole arrangements
PUBLISHED_OVERLAP_PAIRS = [(4, 6), (3, 7), (3, 6), (4, 5), (5, 4), (5, 5), (4, 6),
                       (5, 5), (4, 5), (3, 6), (5, 4), (4, 4), (3, 5)]
PUBLISHED_SEPARATED_TOTAL = 13
PUBLISHED_OVERLAP_TOTAL = sum(a + b for a, b in PUBLISHED_OVERLAP_PAIRS)


class RealizationFailed(RuntimeError):
    pass


class OptimalityViolation(RuntimeError):
    pass


def _other(side: str) -> str:
    return LEFT if side == RIGHT else RIGHT


@dataclass(frozen=True)
class HoleSpec:
    rank_top: int
    rank_mid: int
    rank_bottom: int
    side: str
    slot: int

    def __post_init__(self):
        if not self.rank_top > self.rank_mid > self.rank_bottom:
            raise ValueError(f"hole ranks must descend: {self}")
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be left or right, got {self.side!r}")

    @property
    def ranks(self) -> tuple[int, int, int]:
        return self.rank_top, self.rank_mid, self.rank_bottom


@dataclass(frozen=True)
class Configuration:
    connectivity: int
    b_rank: int
    b_side: str
    holes: tuple[HoleSpec, ...] = field(default_factory=tuple)

    def __post_init__(self):
        n = self.connectivity
        if len(self.holes) != n - 1:
            raise ValueError(f"need {n - 1} holes, got {len(self.holes)}")
        if sorted(h.slot for h in self.holes) != list(range(n - 1)):
            raise ValueError("hole slots must be 0..n-2")
        ranks = [self.b_rank] + [r for h in self.holes for r in h.ranks]
        if sorted(ranks) != list(range(1, 3 * n - 1)):
            raise ValueError("B and hole ranks must cover 1..3n-2 exactly once")
        if self.b_side not in (LEFT, RIGHT):
            raise ValueError(f"b_side must be left or right, got {self.b_side!r}")

    def mirrored(self) -> "Configuration":
        """Configuration of the x-reflected polygon."""
        last = self.connectivity - 2
        holes = tuple(
            HoleSpec(h.rank_top, h.rank_mid, h.rank_bottom, _other(h.side), last - h.slot)
            for h in self.holes)
        return Configuration(self.connectivity, self.b_rank, _other(self.b_side),
                             tuple(sorted(holes, key=lambda h: h.slot)))

    def label(self) -> str:
        parts = [f"n={self.connectivity}", f"B={self.b_rank}{self.b_side[0].upper()}"]
        for h in sorted(self.holes, key=lambda h: h.slot):
            parts.append(f"H{h.slot}=({h.rank_top},{h.rank_mid},{h.rank_bottom}){h.side[0].upper()}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "connectivity": self.connectivity,
            "b_rank": self.b_rank,
            "b_side": self.b_side,
            "holes": [
                {"ranks": list(h.ranks), "side": h.side, "slot": h.slot}
                for h in sorted(self.holes, key=lambda h: h.slot)
            ],
        }


def _ordered_triples(ranks: tuple[int, ...]) -> Iterator[tuple[tuple[int, int, int], ...]]:
    if not ranks:
        yield ()
        return
    for trio in itertools.combinations(ranks, 3):
        rest = tuple(r for r in ranks if r not in trio)
        top, mid, bot = sorted(trio, reverse=True)
        for tail in _ordered_triples(rest):
            yield ((top, mid, bot),) + tail


def generate_configs(n: int) -> Iterator[Configuration]:
    """Every configuration for connectivity ``n``, each exactly once."""
    if n < 1:
        raise ValueError("connectivity must be >= 1")
    inner = tuple(range(1, 3 * n - 1))
    for b_rank in inner:
        rest = tuple(r for r in inner if r != b_rank)
        for triples in _ordered_triples(rest):
            for b_side in (RIGHT, LEFT):
                for sides in itertools.product((RIGHT, LEFT), repeat=n - 1):
                    holes = tuple(HoleSpec(t, m, b, s, k)
                                  for k, ((t, m, b), s) in enumerate(zip(triples, sides)))
                    yield Configuration(n, b_rank, b_side, holes)


def count_configs(n: int) -> int:
    return sum(1 for _ in generate_configs(n))


def _recipe(config: Configuration) -> tuple[list[Point], list[list[Point]]]:
    n = config.connectivity
    width = 1000 * n
    outer = [Point(1, 0), Point(width, config.b_rank), Point(2, 3 * n - 1)]
    holes = []
    for h in sorted(config.holes, key=lambda h: h.slot):
        x = 10 * (h.slot + 1)
        dx = 1 if h.side == RIGHT else -1
        holes.append([Point(x, h.rank_bottom), Point(x + dx, h.rank_mid), Point(x, h.rank_top)])
    return outer, holes


def expected_kinds(config: Configuration) -> dict[int, VertexKind]:
    """Kind each rank must have in the realized polygon."""
    n = config.connectivity
    kinds = {0: VertexKind.SOURCE, 3 * n - 1: VertexKind.SINK,
             config.b_rank: VertexKind.REGULAR_RIGHT if config.b_side == RIGHT
             else VertexKind.REGULAR_LEFT}
    for h in config.holes:
        kinds[h.rank_bottom] = VertexKind.SPLIT
        kinds[h.rank_top] = VertexKind.MERGE
        # the channel is on the far side from the middle vertex's bulge
        kinds[h.rank_mid] = VertexKind.REGULAR_LEFT if h.side == RIGHT else VertexKind.REGULAR_RIGHT
    return kinds


def realize(config: Configuration) -> PolygonWithHoles:
    """Coordinates for ``config``; heights equal ranks.

    Left-sided B is handled by realizing the mirror image and reflecting.
    The result is always re-validated and its vertex kinds re-checked.
    """
    if config.b_side == RIGHT:
        outer, holes = _recipe(config)
    else:
        outer, holes = _recipe(config.mirrored())
        outer = [Point(-p.x, p.y) for p in outer]
        holes = [[Point(-p.x, p.y) for p in h] for h in holes]
    try:
        poly = validate(outer, holes)
    except PolygonError as exc:
        raise RealizationFailed(f"{config.label()}: {exc}") from exc

    want = expected_kinds(config)
    for r, i, p in poly.vertices():
        got = classify_vertex(poly, r, i)
        if got is not want.get(int(p.y)) or p.y.denominator != 1:
            raise RealizationFailed(
                f"{config.label()}: vertex at height {p.y} is {got.code}, "
                f"expected {want.get(int(p.y))}")
    # holes must keep their slot order left to right
    xs = [min(p.x for p in h) for h in poly.holes]
    if config.b_side == RIGHT and xs != sorted(xs) or config.b_side == LEFT and xs != sorted(xs, reverse=True):
        raise RealizationFailed(f"{config.label()}: hole order lost")
    return poly


def reeb_graph_of(config: Configuration) -> ReebGraph:
    return build(realize(config)).graph


def _classify_chunk(args) -> list[tuple[int, str, str]]:
    """Worker: (index, class certificate, ordered certificate) per config."""
    n, indices, settings = args
    wanted = set(indices)
    out = []
    for idx, config in enumerate(generate_configs(n)):
        if idx not in wanted:
            continue
        g = reeb_graph_of(config)
        if not is_optimal(g, n):
            raise OptimalityViolation(f"{config.label()}: graph is not optimal")
        out.append((idx, class_certificate(g, settings), class_certificate(g, ORDERED_SETTINGS)))
    return out


@dataclass
class ClassRecord:
    certificate: str
    representative: Configuration
    members: int


@dataclass
class EnumerationResult:
    connectivity: int
    settings: EquivalenceSettings
    raw_count: int
    classes: list[ClassRecord]
    config_classes: list[str]   # class certificate per generated config, in generation order

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def certificates(self) -> list[str]:
        return [c.certificate for c in self.classes]


def classify_all(n: int, settings: EquivalenceSettings = DEFAULT_SETTINGS,
                 workers: int = 1) -> list[str]:
    """Class certificate of every configuration, in generation order."""
    total = count_configs(n)
    if workers <= 1:
        rows = _classify_chunk((n, range(total), settings))
    else:
        chunks = [(n, list(range(w, total, workers)), settings) for w in range(workers)]
        rows = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_classify_chunk, chunks):
                rows.extend(part)
        rows.sort()
    return [cert for _, cert, _ in rows]


def enumerate_classes(n: int, settings: EquivalenceSettings = DEFAULT_SETTINGS,
                      workers: int = 1) -> EnumerationResult:
    """Realize and sweep every configuration; count distinct classes.

    The representative of a class is its first configuration in generation
    order, so the result does not depend on ``workers``.
    """
    configs = list(generate_configs(n))
    per_config = classify_all(n, settings, workers)
    first: dict[str, int] = {}
    members: dict[str, int] = defaultdict(int)
    for idx, cert in enumerate(per_config):
        first.setdefault(cert, idx)
        members[cert] += 1
    classes = [ClassRecord(cert, configs[first[cert]], members[cert]) for cert in sorted(first)]
    return EnumerationResult(n, settings, len(configs), classes, per_config)


def default_workers() -> int:
    return min(4, os.cpu_count() or 1)


# ---------------------------------------------------------------- arrangements

SEPARATED, OVERLAPPING = "separated", "overlapping"


def _upper_lower(config: Configuration) -> tuple[HoleSpec, HoleSpec]:
    a, b = config.holes
    return (a, b) if a.rank_top > b.rank_top else (b, a)


def arrangement_signature(config: Configuration) -> tuple[str, str, str, str]:
    """(height pattern, hole sides, slot order, B side) for a 2-hole config.

    The upper hole (higher top) is labelled D>E>F, the lower one G>H>I; the
    pattern lists the six labels from highest to lowest.
    """
    up, lo = _upper_lower(config)
    names = {up.rank_top: "D", up.rank_mid: "E", up.rank_bottom: "F",
             lo.rank_top: "G", lo.rank_mid: "H", lo.rank_bottom: "I"}
    pattern = "".join(names[r] for r in sorted(names, reverse=True))
    sides = up.side[0].upper() + lo.side[0].upper()
    slots = "DEF|GHI" if up.slot < lo.slot else "GHI|DEF"
    return pattern, sides, slots, config.b_side


def regime(config: Configuration) -> str:
    up, lo = _upper_lower(config)
    return SEPARATED if up.rank_bottom > lo.rank_top else OVERLAPPING


@dataclass
class ArrangementRow:
    pattern: str
    sides: str
    slots: str
    regime: str
    left: int      # distinct classes with B on the left
    right: int     # distinct classes with B on the right
    union: int     # distinct classes over both B sides


@dataclass
class ArrangementReport:
    settings: EquivalenceSettings
    rows: list[ArrangementRow]
    regime_classes: dict[str, int]
    total: int
    shared_between_regimes: int


def arrangement_report(result: EnumerationResult) -> ArrangementReport:
    """Break an n=3 enumeration down by hole arrangement and B side."""
    if result.connectivity != 3:
        raise ValueError("arrangement report is defined for connectivity 3 only")
    configs = list(generate_configs(3))
    groups: dict[tuple[str, str, str], dict[str, set]] = defaultdict(lambda: {LEFT: set(), RIGHT: set()})
    by_regime: dict[str, set] = {SEPARATED: set(), OVERLAPPING: set()}
    for config, cert in zip(configs, result.config_classes):
        pattern, sides, slots, b_side = arrangement_signature(config)
        groups[(pattern, sides, slots)][b_side].add(cert)
        by_regime[regime(config)].add(cert)
    rows = []
    for (pattern, sides, slots), per_side in sorted(groups.items()):
        reg = SEPARATED if pattern == "DEFGHI" else OVERLAPPING
        rows.append(ArrangementRow(pattern, sides, slots, reg, len(per_side[LEFT]),
                                   len(per_side[RIGHT]), len(per_side[LEFT] | per_side[RIGHT])))
    shared = len(by_regime[SEPARATED] & by_regime[OVERLAPPING])
    return ArrangementReport(result.settings, rows,
                             {k: len(v) for k, v in by_regime.items()}, result.count, shared)


# ---------------------------------------------------------------- closure

def _edit_neighbours(g: ReebGraph) -> Iterator[ReebGraph]:
    from .reebgraph import attach_leaf, subdivide
    for t, h in sorted(set(g.edges)):
        for slot in range(t + 1, h + 1):
            for mark in (VertexKind.REGULAR_LEFT, VertexKind.REGULAR_RIGHT):
                yield subdivide(g, (t, h), mark, slot)
    for v, k in enumerate(g.kinds):
        if not k.is_regular:
            continue
        for slot in range(0, v + 1):
            yield attach_leaf(g, v, VertexKind.SOURCE, slot)
        for slot in range(v + 1, g.vertex_count + 1):
            yield attach_leaf(g, v, VertexKind.SINK, slot)


def closure_classes(max_vertices: int, settings: EquivalenceSettings) -> dict[int, dict[str, ReebGraph]]:
    """Classes reachable from the 3-vertex paths by subdivision and leaf attachment."""
    if max_vertices < 3:
        raise ValueError("max_vertices must be >= 3")
    seeds = [ReebGraph.from_codes(["so", mark, "si"], [(0, 1), (1, 2)]) for mark in ("rl", "rr")]
    levels: dict[int, dict[str, ReebGraph]] = {3: {}}
    for g in seeds:
        levels[3].setdefault(class_certificate(g, settings), g)
    for size in range(4, max_vertices + 1):
        found: dict[str, ReebGraph] = {}
        for cert in sorted(levels[size - 1]):
            for h in _edit_neighbours(levels[size - 1][cert]):
                found.setdefault(class_certificate(h, settings), h)
        levels[size] = dict(sorted(found.items()))
    return levels


PUBLISHED_SIMPLE_COUNTS = {3: 1, 4: 3, 5: 6}


def closure_simple(max_vertices: int,
                   settings: EquivalenceSettings = DEFAULT_SETTINGS) -> dict[int, dict[str, int]]:
    """Per-size class counts under the unordered and ordered variants of ``settings``."""
    unordered = EquivalenceSettings(False, settings.quotient_mirror, settings.quotient_flip)
    ordered = EquivalenceSettings(True, settings.quotient_mirror, settings.quotient_flip)
    u = closure_classes(max_vertices, unordered)
    o = closure_classes(max_vertices, ordered)
    return {size: {"unordered": len(u[size]), "ordered": len(o[size])}
            for size in range(3, max_vertices + 1)}
