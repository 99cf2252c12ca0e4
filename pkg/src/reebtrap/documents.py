"""JSON documents for polygons and Reeb graphs."""

from __future__ import annotations

import json
from pathlib import Path

from .exactgeom import Point, RationalParseError, parse_rational, render_rational
from .polygon import VertexKind
from .reebgraph import ReebGraph, certificate
from .sweep import SweepResult


class DocumentError(ValueError):
    """Malformed document; the message names the offending position."""


def _number(value, where: str):
    if isinstance(value, bool):
        raise DocumentError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, int):
        return parse_rational(str(value))
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except RationalParseError as exc:
            raise DocumentError(f"{where}: {exc}") from None
    raise DocumentError(f"{where}: expected a number, got {value!r}")


def _ring(raw, where: str) -> list[Point]:
    if not isinstance(raw, list):
        raise DocumentError(f"{where}: expected a list of [x, y] pairs")
    pts = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"{where}[{i}]: expected an [x, y] pair")
        pts.append(Point(_number(pair[0], f"{where}[{i}][0]"), _number(pair[1], f"{where}[{i}][1]")))
    return pts


def parse_polygon_document(text: str) -> tuple[list[Point], list[list[Point]]]:
    """Raw rings from a polygon document (validation is up to the caller).

    JSON number literals are kept as text and parsed exactly, so ``0.1``
    means 1/10.
    """
    try:
        doc = json.loads(text, parse_float=str, parse_constant=lambda c: c)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "outer" not in doc:
        raise DocumentError("document must be an object with an 'outer' ring")
    unknown = set(doc) - {"outer", "holes"}
    if unknown:
        raise DocumentError(f"unknown keys: {', '.join(sorted(unknown))}")
    outer = _ring(doc["outer"], "outer")
    holes_raw = doc.get("holes", [])
    if not isinstance(holes_raw, list):
        raise DocumentError("holes: expected a list of rings")
    holes = [_ring(h, f"holes[{k}]") for k, h in enumerate(holes_raw)]
    return outer, holes


def load_polygon_document(path: str | Path):
    return parse_polygon_document(Path(path).read_text(encoding="utf-8"))


def polygon_document(outer, holes=()) -> str:
    def ring(r):
        return [[render_rational(p.x), render_rational(p.y)] for p in r]
    return json.dumps({"outer": ring(outer), "holes": [ring(h) for h in holes]}, indent=2) + "\n"


def graph_document(result: SweepResult, rings) -> dict:
    g = result.graph
    vertices = []
    for rank, (r, i) in enumerate(result.vertex_at_rank):
        p = rings[r][i]
        vertices.append({
            "id": f"r{r}v{i}",
            "rank": rank,
            "kind": g.kinds[rank].code,
            "x": render_rational(p.x),
            "y": render_rational(p.y),
        })
    ids = [v["id"] for v in vertices]
    return {
        "vertices": vertices,
        "edges": [[ids[t], ids[h]] for t, h in g.edges],
        "certificate": certificate(g),
    }


def graph_from_document(doc: dict) -> ReebGraph:
    """Rebuild the ranked graph from a graph document and check its certificate."""
    try:
        verts = sorted(doc["vertices"], key=lambda v: v["rank"])
        if [v["rank"] for v in verts] != list(range(len(verts))):
            raise DocumentError("vertex ranks must be 0..V-1")
        rank_of = {v["id"]: v["rank"] for v in verts}
        kinds = tuple(VertexKind(v["kind"]) for v in verts)
        edges = tuple((rank_of[t], rank_of[h]) for t, h in doc["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad graph document: {exc}") from None
    g = ReebGraph(kinds, edges)
    if "certificate" in doc and doc["certificate"] != certificate(g):
        raise DocumentError("certificate does not match vertices and edges")
    return g
