"""Polygon ingestion and validation."""

import json

import pytest

from outerbilliards.errors import (
    DegenerateVerticesError,
    NotConvexError,
    ParallelEdgesError,
    ParseError,
)
from outerbilliards.geometry import Location, pt
from outerbilliards.polygon import (
    NicePolygon,
    parse_polygon,
    polygon_to_text,
)

TRIANGLE = [pt(0, 0), pt(1, 3), pt(4, 0)]


def doc(vertices, field="rational"):
    return json.dumps({"field": field, "vertices": vertices})


def test_square_rejected_for_parallel_edges():
    with pytest.raises(ParallelEdgesError) as err:
        parse_polygon(doc([["0", "0"], ["0", "1"], ["1", "1"], ["1", "0"]]))
    assert len(err.value.indices) == 2


def test_triangle_is_nice_with_distinct_slopes():
    p = parse_polygon(doc([["0", "0"], ["1", "3"], ["4", "0"]]))
    assert p.n == 3
    # edge slopes {3, -1, 0} pairwise distinct
    slopes = set()
    for e in p.edges:
        d = p.vertices[e.head] - p.vertices[e.tail]
        slopes.add(None if d.x == 0 else d.y / d.x)
    assert slopes == {3, -1, 0}


def test_collinear_vertices_rejected():
    with pytest.raises(DegenerateVerticesError):
        parse_polygon(doc([["0", "0"], ["1", "0"], ["2", "0"], ["0", "1"]]))


def test_repeated_vertex_rejected():
    with pytest.raises(DegenerateVerticesError):
        NicePolygon.from_points([pt(0, 0), pt(1, 3), pt(0, 0)])


def test_nonconvex_rejected():
    with pytest.raises((NotConvexError, DegenerateVerticesError)):
        NicePolygon.from_points([pt(0, 0), pt(2, 1), pt(4, 0), pt(2, 6), pt(3, 1)])


def test_clockwise_normalization_flag():
    cw = NicePolygon.from_points(TRIANGLE)
    assert not cw.reoriented
    ccw = NicePolygon.from_points(list(reversed(TRIANGLE)))
    assert ccw.reoriented
    assert ccw.vertices == cw.vertices


def test_point_location():
    p = NicePolygon.from_points(TRIANGLE)
    assert p.point_location(pt(1, 1)) is Location.INTERIOR
    assert p.point_location(pt(2, 0)) is Location.BOUNDARY
    assert p.point_location(pt(8, -2)) is Location.OUTSIDE
    assert p.point_location(pt(0, 0)) is Location.BOUNDARY


def test_edges_positive_toward_interior():
    p = NicePolygon.from_points(TRIANGLE)
    inner = pt(1, 1)
    for e in p.edges:
        assert e.line.signed_offset(inner) > 0
        assert e.line.signed_offset(p.vertices[e.tail]) == 0
        assert e.line.signed_offset(p.vertices[e.head]) == 0


def test_serialization_round_trip_bit_exact():
    p = NicePolygon.from_points(TRIANGLE)
    text = polygon_to_text(p)
    again = parse_polygon(text)
    assert again == p
    assert polygon_to_text(again) == text


def test_reversed_then_reparsed_round_trip():
    p = NicePolygon.from_points(list(reversed(TRIANGLE)))
    text = polygon_to_text(p)
    assert parse_polygon(text) == p


def test_quad_field_polygon():
    body = {
        "field": {"quad": 5},
        "vertices": [
            ["-1", "0"],
            ["0", "1"],
            [{"a": "-1/2", "b": "1/2", "d": 5}, "0"],
            ["0", "-1"],
        ],
    }
    p = parse_polygon(json.dumps(body))
    assert p.quad_d == 5
    assert p.n == 4
    again = parse_polygon(polygon_to_text(p))
    assert again == p


def test_parse_error_reports_position():
    with pytest.raises(ParseError):
        parse_polygon("{not json")
    with pytest.raises(ParseError):
        parse_polygon(json.dumps({"field": "rational"}))
    with pytest.raises(ParseError):
        parse_polygon(doc([["0", "0"], ["1"], ["4", "0"]]))
    with pytest.raises(ParseError):
        parse_polygon(doc([["0", "0"], ["1", {"a": "1", "b": "1", "d": 5}], ["4", "0"]]))
