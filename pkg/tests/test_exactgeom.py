import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from reebtrap.exactgeom import (
    Point,
    RationalParseError,
    Segment,
    edge_x_at_level,
    orient,
    parse_rational,
    point,
    point_in_ring,
    render_rational,
    segments_cross,
    signed_area,
)

from oracles import star_ring, winding_classify

fractions = st.fractions(max_denominator=10**6)
pts = st.builds(Point, fractions, fractions)


@pytest.mark.parametrize("text, expected", [
    ("0.5", F(1, 2)),
    ("-3", F(-3)),
    ("14/9", F(14, 9)),
    ("3.25", F(13, 4)),
    ("0.1", F(1, 10)),
    ("-6/4", F(-3, 2)),
    (".5", F(1, 2)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "abc", "1e5", "", "nan", "1/2/3", "0x10", "inf"])
def test_parse_rational_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_parse_keeps_lowest_terms():
    r = parse_rational("10/-4")
    assert (r.numerator, r.denominator) == (-5, 2)


@given(fractions)
def test_render_parse_round_trip(r):
    assert parse_rational(render_rational(r)) == r


def test_floats_refused():
    with pytest.raises(RationalParseError):
        point(0.5, 1)


def test_orient_examples():
    assert orient(point(0, 0), point(1, 0), point(0, 1)) == 1
    assert orient(point(0, 0), point(1, 1), point(2, 2)) == 0
    assert orient(point(0, 0), point(1, 0), point(1, -1)) == -1


@given(pts, pts, pts)
def test_orient_antisymmetric(p, q, r):
    assert orient(p, q, r) == -orient(p, r, q)


def test_edge_x_at_level():
    assert edge_x_at_level(Segment(point(0, 0), point(2, 4)), F(2)) == 1
    # substituting x = 2/3 back: the line through (0,0),(2,9) is y = 9x/2 -> 3
    x = edge_x_at_level(Segment(point(2, 9), point(0, 0)), F(3))
    assert x == F(2, 3) and F(9, 2) * x == 3
    assert edge_x_at_level(Segment(point(5, 3), point(6, 5)), F(4)) == F(11, 2)


def test_edge_x_at_level_errors():
    with pytest.raises(ValueError):
        edge_x_at_level(Segment(point(0, 0), point(2, 0)), F(0))
    with pytest.raises(ValueError):
        edge_x_at_level(Segment(point(0, 0), point(2, 4)), F(5))


@given(pts, pts)
def test_edge_x_at_endpoint(a, b):
    if a.y == b.y:
        return
    assert edge_x_at_level(Segment(a, b), a.y) == a.x


def test_signed_area_examples():
    assert signed_area([point(0, 0), point(1, 0), point(1, 1), point(0, 1)]) == 1
    # 1/2 * |12*9 - 2*4| = 50
    assert signed_area([point(0, 0), point(12, 4), point(2, 9)]) == 50
    assert signed_area([point(5, 3), point(6, 5), point(5, 7)]) == 2
    with pytest.raises(ValueError):
        signed_area([point(0, 0), point(1, 1)])


@given(st.lists(pts, min_size=3, max_size=8))
def test_signed_area_reversal(ring):
    assert signed_area(ring[::-1]) == -signed_area(ring)


TRI = [point(0, 0), point(12, 4), point(2, 9)]


def test_point_in_ring_examples():
    assert point_in_ring(point(5, 7), TRI) == "inside"
    assert point_in_ring(point(0, 0), TRI) == "boundary"
    assert point_in_ring(point(100, 100), TRI) == "outside"
    assert point_in_ring(point(6, 2), TRI) == "boundary"   # on edge C-B


def test_point_in_ring_vertex_level_ties():
    # the ray from (1, 4) passes exactly through vertex (12, 4)
    assert point_in_ring(point(1, 4), TRI) == "inside"
    assert point_in_ring(point(13, 4), TRI) == "outside"


def test_point_in_ring_matches_winding_number():
    rng = random.Random(7)
    checked = 0
    for _ in range(200):
        ring = [point(x, y) for x, y in star_ring(rng, 0, 0, 50, rng.randint(3, 9))]
        if signed_area(ring) == 0:
            continue
        for _ in range(25):
            p = point(rng.randint(-60, 60), rng.randint(-60, 60))
            assert point_in_ring(p, ring) == winding_classify(p, ring)
            checked += 1
    assert checked > 4000


@pytest.mark.parametrize("s1, s2, expected", [
    (((0, 0), (2, 2)), ((0, 2), (2, 0)), True),
    (((0, 0), (1, 0)), ((2, 0), (3, 0)), False),
    (((0, 0), (1, 1)), ((1, 1), (2, 0)), False),
    (((0, 0), (2, 0)), ((1, 0), (3, 0)), True),     # collinear overlap
    (((0, 0), (2, 0)), ((2, 0), (1, 0)), True),     # shared endpoint, folds back
    (((0, 0), (2, 0)), ((1, 0), (1, 5)), True),     # T junction
])
def test_segments_cross(s1, s2, expected):
    a = Segment(point(*s1[0]), point(*s1[1]))
    b = Segment(point(*s2[0]), point(*s2[1]))
    assert segments_cross(a, b) is expected
    assert segments_cross(b, a) is expected


def test_zero_length_segment():
    with pytest.raises(ValueError):
        Segment(point(1, 1), point(1, 1))
