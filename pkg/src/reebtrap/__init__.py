"""Trapezoidal maps and Reeb graphs of height functions on planar polygons."""

from .exactgeom import Point, orient, parse_rational, point
from .polygon import PolygonWithHoles, VertexKind, classify_vertex, net_area, validate
from .reebgraph import (
    EquivalenceSettings,
    ReebGraph,
    certificate,
    class_certificate,
    equivalent,
    is_optimal,
)
from .sweep import build

__all__ = [
    "Point", "point", "orient", "parse_rational",
    "PolygonWithHoles", "VertexKind", "validate", "classify_vertex", "net_area",
    "ReebGraph", "EquivalenceSettings", "certificate", "class_certificate",
    "equivalent", "is_optimal", "build",
]
