"""Ranked, marked, oriented Reeb multigraphs.

A graph is stored by rank: vertex ``i`` is the ``i``-th lowest critical or
regular point, and every edge ``(t, h)`` has ``t < h``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .polygon import VertexKind

SO, SI = VertexKind.SOURCE, VertexKind.SINK
RL, RR = VertexKind.REGULAR_LEFT, VertexKind.REGULAR_RIGHT
ME, SP = VertexKind.MERGE, VertexKind.SPLIT

# (in-degree, out-degree) per kind
DEGREES = {SO: (0, 1), SI: (1, 0), RL: (1, 1), RR: (1, 1), ME: (2, 1), SP: (1, 2)}

_MIRROR = {RL: RR, RR: RL}
_FLIP = {SO: SI, SI: SO, ME: SP, SP: ME}


class InvalidReebGraph(ValueError):
    pass


class EditError(ValueError):
    """Raised when an edit operation's precondition fails."""


class ConnectivityMismatch(ValueError):
    """Cycle rank of a graph disagrees with the claimed connectivity."""


@dataclass(frozen=True)
class EquivalenceSettings:
    ordered: bool = False
    quotient_mirror: bool = True
    quotient_flip: bool = True


DEFAULT_SETTINGS = EquivalenceSettings()
ORDERED_SETTINGS = EquivalenceSettings(ordered=True)


@dataclass(frozen=True)
class ReebGraph:
    kinds: tuple[VertexKind, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "kinds", tuple(self.kinds))
        object.__setattr__(self, "edges", tuple(sorted((int(t), int(h)) for t, h in self.edges)))
        self._check()

    def _check(self) -> None:
        V = len(self.kinds)
        if V == 0:
            raise InvalidReebGraph("empty graph")
        indeg = [0] * V
        outdeg = [0] * V
        for t, h in self.edges:
            if not (0 <= t < h < V):
                raise InvalidReebGraph(f"edge ({t},{h}) does not ascend within 0..{V - 1}")
            outdeg[t] += 1
            indeg[h] += 1
        for v, k in enumerate(self.kinds):
            if (indeg[v], outdeg[v]) != DEGREES[k]:
                raise InvalidReebGraph(
                    f"vertex {v} of kind {k.code} has degree ({indeg[v]},{outdeg[v]})")
        # connectivity via union-find
        parent = list(range(V))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h in self.edges:
            parent[find(t)] = find(h)
        if len({find(v) for v in range(V)}) != 1:
            raise InvalidReebGraph("graph is disconnected")

    @property
    def vertex_count(self) -> int:
        return len(self.kinds)

    @property
    def cycle_rank(self) -> int:
        return len(self.edges) - len(self.kinds) + 1

    def degree(self, v: int) -> int:
        return sum(DEGREES[self.kinds[v]])

    @classmethod
    def from_codes(cls, codes: str | Sequence[str], edges: Iterable) -> "ReebGraph":
        if isinstance(codes, str):
            codes = codes.split(",")
        return cls(tuple(VertexKind(c) for c in codes), tuple(edges))


def _serialize(kind_codes: Sequence[str], edges: Sequence[tuple[int, int]]) -> str:
    return "RG1|V={}|kinds={}|edges={}".format(
        len(kind_codes), ",".join(kind_codes), ";".join(f"({t},{h})" for t, h in edges))


def certificate(g: ReebGraph) -> str:
    """Stable text form; equal strings iff equal ranked graphs."""
    return _serialize([k.code for k in g.kinds], g.edges)


def parse_certificate(text: str) -> ReebGraph:
    try:
        tag, v, kinds, edges = text.strip().split("|")
        if tag != "RG1" or not v.startswith("V=") or not kinds.startswith("kinds="):
            raise ValueError
        codes = kinds[len("kinds="):].split(",")
        body = edges[len("edges="):]
        pairs = []
        if body:
            for item in body.split(";"):
                t, h = item.strip("()").split(",")
                pairs.append((int(t), int(h)))
        g = ReebGraph.from_codes(codes, pairs)
    except (ValueError, KeyError) as exc:
        raise ValueError(f"not a Reeb graph certificate: {text!r}") from exc
    if g.vertex_count != int(v[2:]):
        raise ValueError(f"vertex count mismatch in {text!r}")
    return g


def mirror(g: ReebGraph) -> ReebGraph:
    """Reflect about a vertical axis: left and right marks swap."""
    return ReebGraph(tuple(_MIRROR.get(k, k) for k in g.kinds), g.edges)


def flip(g: ReebGraph) -> ReebGraph:
    """Reflect about a horizontal axis: ranks reverse, edges turn around."""
    top = g.vertex_count - 1
    kinds = tuple(_FLIP.get(k, k) for k in reversed(g.kinds))
    return ReebGraph(kinds, tuple((top - h, top - t) for t, h in g.edges))


def group_images(g: ReebGraph, settings: EquivalenceSettings = DEFAULT_SETTINGS) -> list[ReebGraph]:
    images = [g]
    if settings.quotient_mirror:
        images.append(mirror(g))
    if settings.quotient_flip:
        images.extend([flip(h) for h in images])
    return images


def abstract_certificate(kind_codes: Sequence[str], edges: Sequence[tuple[int, int]]) -> str:
    """Lexicographically least certificate over kind-preserving relabelings.

    New labels are handed out in sorted-code order, so the kinds field is the
    sorted code list; only permutations inside each kind class are searched.
    """
    V = len(kind_codes)
    order = sorted(range(V), key=lambda v: kind_codes[v])
    sorted_codes = [kind_codes[v] for v in order]
    classes = [list(grp) for _, grp in itertools.groupby(order, key=lambda v: kind_codes[v])]
    best = None
    label = [0] * V
    for combo in itertools.product(*(itertools.permutations(c) for c in classes)):
        pos = 0
        for perm in combo:
            for v in perm:
                label[v] = pos
                pos += 1
        relabeled = sorted((label[t], label[h]) for t, h in edges)
        cert = _serialize(sorted_codes, relabeled)
        if best is None or cert < best:
            best = cert
    return best


@lru_cache(maxsize=65536)
def _class_certificate_cached(cert: str, settings: EquivalenceSettings) -> str:
    g = parse_certificate(cert)
    candidates = []
    for h in group_images(g, settings):
        if settings.ordered:
            candidates.append(certificate(h))
        else:
            candidates.append(abstract_certificate([k.code for k in h.kinds], h.edges))
    return min(candidates)


def class_certificate(g: ReebGraph, settings: EquivalenceSettings = DEFAULT_SETTINGS) -> str:
    """Canonical key of the equivalence class of ``g`` under ``settings``."""
    return _class_certificate_cached(certificate(g), settings)


def equivalent(g1: ReebGraph, g2: ReebGraph,
               settings: EquivalenceSettings = DEFAULT_SETTINGS) -> bool:
    return class_certificate(g1, settings) == class_certificate(g2, settings)


def degree_census(g: ReebGraph) -> Counter:
    return Counter(g.degree(v) for v in range(g.vertex_count))


def is_optimal(g: ReebGraph, n: int) -> bool:
    """Optimality test for an n-connected polygon's Reeb graph.

    Optimal means 3n vertices: one source, one sink, n regular vertices and
    2n - 2 saddles (merge or split).
    """
    if g.cycle_rank != n - 1:
        raise ConnectivityMismatch(
            f"graph has cycle rank {g.cycle_rank}, expected {n - 1} for n={n}")
    if g.vertex_count != 3 * n:
        return False
    kinds = Counter(g.kinds)
    return (
        kinds[SO] == 1
        and kinds[SI] == 1
        and kinds[RL] + kinds[RR] == n
        and kinds[ME] + kinds[SP] == 2 * n - 2
    )


def _shift(r: int, slot: int) -> int:
    return r + 1 if r >= slot else r


def subdivide(g: ReebGraph, edge: tuple[int, int], mark: str | VertexKind, rank_slot: int) -> ReebGraph:
    """Insert a regular vertex of the given mark on ``edge`` at rank ``rank_slot``.

    Ranks at or above the slot move up by one; the slot must land strictly
    between the (shifted) endpoints, i.e. ``tail < rank_slot <= head``.
    """
    kind = _regular_kind(mark)
    t, h = edge
    if (t, h) not in g.edges:
        raise EditError(f"edge {edge} not in graph")
    if not t < rank_slot <= h:
        raise EditError(f"slot {rank_slot} not inside edge {edge}")
    edges = list(g.edges)
    edges.remove((t, h))
    new_edges = [(_shift(a, rank_slot), _shift(b, rank_slot)) for a, b in edges]
    new_edges += [(t, rank_slot), (rank_slot, h + 1)]
    kinds = list(g.kinds)
    kinds.insert(rank_slot, kind)
    return ReebGraph(tuple(kinds), tuple(new_edges))


def attach_leaf(g: ReebGraph, at_vertex: int, leaf_kind: str | VertexKind, rank_slot: int) -> ReebGraph:
    """Hang a new source (below) or sink (above) on a regular vertex.

    A source leaf needs ``rank_slot <= at_vertex``, a sink leaf
    ``rank_slot > at_vertex``. The target turns into a merge or split.
    """
    leaf = _leaf_kind(leaf_kind)
    if not 0 <= at_vertex < g.vertex_count:
        raise EditError(f"vertex {at_vertex} out of range")
    if not g.kinds[at_vertex].is_regular:
        raise EditError(f"vertex {at_vertex} is {g.kinds[at_vertex].code}, not regular")
    if leaf is SO and not 0 <= rank_slot <= at_vertex:
        raise EditError(f"source leaf slot {rank_slot} must be at or below {at_vertex}")
    if leaf is SI and not at_vertex < rank_slot <= g.vertex_count:
        raise EditError(f"sink leaf slot {rank_slot} must be above {at_vertex}")
    target = _shift(at_vertex, rank_slot)
    kinds = list(g.kinds)
    kinds[at_vertex] = ME if leaf is SO else SP
    kinds.insert(rank_slot, leaf)
    new_edges = [(_shift(a, rank_slot), _shift(b, rank_slot)) for a, b in g.edges]
    new_edges.append((rank_slot, target) if leaf is SO else (target, rank_slot))
    return ReebGraph(tuple(kinds), tuple(new_edges))


def smooth(g: ReebGraph, v: int) -> ReebGraph:
    """Remove regular vertex ``v``, joining its two edges (inverse of subdivide)."""
    if not g.kinds[v].is_regular:
        raise EditError(f"vertex {v} is not regular")
    (t,) = [a for a, b in g.edges if b == v]
    (h,) = [b for a, b in g.edges if a == v]
    edges = list(g.edges)
    edges.remove((t, v))
    edges.remove((v, h))
    edges.append((t, h))

    def down(r):
        return r - 1 if r > v else r

    kinds = g.kinds[:v] + g.kinds[v + 1:]
    return ReebGraph(kinds, tuple((down(a), down(b)) for a, b in edges))


def _regular_kind(mark) -> VertexKind:
    if isinstance(mark, VertexKind):
        if not mark.is_regular:
            raise EditError(f"{mark} is not a regular mark")
        return mark
    table = {"left": RL, "l": RL, "rl": RL, "right": RR, "r": RR, "rr": RR}
    try:
        return table[str(mark).lower()]
    except KeyError:
        raise EditError(f"unknown mark {mark!r}") from None


def _leaf_kind(kind) -> VertexKind:
    if isinstance(kind, VertexKind):
        if kind not in (SO, SI):
            raise EditError(f"{kind} cannot be a leaf")
        return kind
    table = {"source": SO, "so": SO, "sink": SI, "si": SI}
    try:
        return table[str(kind).lower()]
    except KeyError:
        raise EditError(f"unknown leaf kind {kind!r}") from None
