"""SVG and DOT output.

SVG is presentational only, so coordinates are written as rounded decimals.
"""

from __future__ import annotations

from fractions import Fraction

from .polygon import PolygonWithHoles
from .reebgraph import ReebGraph
from .sweep import SweepResult

KIND_NAMES = {
    "so": "source", "si": "sink", "rl": "regular_left",
    "rr": "regular_right", "me": "merge", "sp": "split",
}


def _num(v: Fraction) -> str:
    text = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _xy(x: Fraction, y: Fraction) -> str:
    # SVG y grows downward; mathematical y grows upward
    return f"{_num(x)},{_num(-y)}"


def render_svg(poly: PolygonWithHoles, result: SweepResult) -> str:
    xs = [p.x for _, _, p in poly.vertices()]
    ys = [p.y for _, _, p in poly.vertices()]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pad = max(x1 - x0, y1 - y0) / 20
    vb = (x0 - pad, -(y1 + pad), (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    stroke = _num(max(x1 - x0, y1 - y0) / 400)
    dot = _num(max(x1 - x0, y1 - y0) / 120)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{" ".join(_num(v) for v in vb)}">',
    ]
    path = " ".join("M " + " L ".join(_xy(p.x, p.y) for p in ring) + " Z" for ring in poly.rings)
    out.append(f'<path class="boundary" d="{path}" fill="#eeeeee" fill-rule="evenodd" '
               f'stroke="black" stroke-width="{stroke}"/>')
    for ray in result.trapezoids.inserted_segments:
        out.append(
            f'<line class="ray" x1="{_num(ray.start.x)}" y1="{_num(-ray.start.y)}" '
            f'x2="{_num(ray.end.x)}" y2="{_num(-ray.end.y)}" stroke="red" '
            f'stroke-width="{stroke}" stroke-dasharray="{stroke},{stroke}"/>')
    rings = poly.rings
    for cell in result.trapezoids.cells:
        lo = rings[cell.lower_vertex[0]][cell.lower_vertex[1]]
        hi = rings[cell.upper_vertex[0]][cell.upper_vertex[1]]
        (b0, b1), (t0, t1) = cell.bottom_span, cell.top_span
        mid_y = (cell.bottom_y + cell.top_y) / 2
        pts = [
            (lo.x, lo.y),
            ((b0 + b1) / 2, cell.bottom_y),
            ((b0 + b1 + t0 + t1) / 4, mid_y),
            ((t0 + t1) / 2, cell.top_y),
            (hi.x, hi.y),
        ]
        out.append(f'<polyline class="reeb-edge" points="{" ".join(_xy(x, y) for x, y in pts)}" '
                   f'fill="none" stroke="black" stroke-width="{stroke}"/>')
    for v in result.vertex_at_rank:
        p = rings[v[0]][v[1]]
        out.append(f'<circle class="reeb-vertex" cx="{_num(p.x)}" cy="{_num(-p.y)}" '
                   f'r="{dot}" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dot(g: ReebGraph, name: str = "reeb") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for rank, kind in enumerate(g.kinds):
        lines.append(f'  v{rank} [label="{rank}:{kind.code}", kind="{KIND_NAMES[kind.code]}", '
                     f'rank_hint={rank}];')
    for t, h in g.edges:
        lines.append(f"  v{t} -> v{h};")
    lines.append("}")
    return "\n".join(lines) + "\n"
