"""Pinwheel pairs, spokes and strip maps."""

from fractions import Fraction

import pytest

from outerbilliards.errors import OnStripBoundaryError
from outerbilliards.geometry import Location, pt, segments_intersect, slope_angle_cmp, vec
from outerbilliards.polygon import NicePolygon
from outerbilliards.strips import (
    build_pinwheel_system,
    compose_strip_maps,
    sigma_range,
    strip_map,
)

TRIANGLE = NicePolygon.from_points([pt(0, 0), pt(1, 3), pt(4, 0)])
PENTAGON = NicePolygon.from_points(
    [pt(0, 0), pt(-1, 3), pt(2, 5), pt(5, 2), pt(4, -1)])


def triangle_system():
    return build_pinwheel_system(TRIANGLE)


def test_triangle_bottom_edge_pair():
    sys = triangle_system()
    p0 = sys.pair(0)  # smallest direction angle: the horizontal bottom edge
    assert p0.v == pt(0, 0)      # head of the clockwise edge (4,0) -> (0,0)
    assert p0.w == pt(1, 3)      # farthest vertex from y = 0
    assert p0.V == vec(2, 6)
    assert p0.offset(pt(7, 0)) == 0
    assert p0.offset(pt(0, 6)) == 6
    assert p0.width == 6         # strip {0 <= y <= 6}
    assert p0.strip_region().contains(pt(0, 3)) is Location.INTERIOR
    assert p0.strip_region().contains(pt(123, 6)) is Location.BOUNDARY


def test_strips_sorted_by_slope_angle():
    for poly in (TRIANGLE, PENTAGON):
        sys = build_pinwheel_system(poly)
        dirs = []
        for p in sys.pairs:
            e = poly.edges[p.edge_index]
            dirs.append(poly.vertices[e.head] - poly.vertices[e.tail])
        for i in range(len(dirs) - 1):
            assert slope_angle_cmp(dirs[i], dirs[i + 1]) < 0


def test_head_on_centerline_and_slab_spanning():
    for poly in (TRIANGLE, PENTAGON):
        sys = build_pinwheel_system(poly)
        for p in sys.pairs:
            assert p.offset(p.w) == p.width / 2  # w equidistant from L and L'
            assert p.offset(p.v) == 0            # tail on the edge line
            # translation by V carries L onto L'
            assert p.offset(p.v + p.V) == p.width


def test_consecutive_spokes_share_vertex():
    for poly in (TRIANGLE, PENTAGON):
        sys = build_pinwheel_system(poly)
        for j in range(sys.n):
            s, t = sys.spoke(j), sys.spoke(j + 1)
            assert {s.tail_index, s.head_index} & {t.tail_index, t.head_index}


def test_edge_spoke_bijection():
    for poly in (TRIANGLE, PENTAGON):
        sys = build_pinwheel_system(poly)
        assert len({s.endpoint_indices() for s in sys.spokes}) == sys.n
        assert sorted(p.edge_index for p in sys.pairs) == list(range(poly.n))


def test_any_two_spokes_intersect():
    for poly in (TRIANGLE, PENTAGON):
        sys = build_pinwheel_system(poly)
        for i in range(sys.n):
            for j in range(i + 1, sys.n):
                a, b = sys.spoke(i), sys.spoke(j)
                assert segments_intersect(a.tail, a.head, b.tail, b.head)


def test_spoke_slope_order_compatible_with_strip_order():
    for poly in (TRIANGLE, PENTAGON):
        sys = build_pinwheel_system(poly)
        n = sys.n
        # sort spokes by slope angle; the result must be a rotation of 0..n-1
        import functools
        order = sorted(range(n), key=functools.cmp_to_key(
            lambda i, j: slope_angle_cmp(sys.spoke(i).direction(),
                                         sys.spoke(j).direction())))
        shift = order.index(0)
        rotated = order[shift:] + order[:shift]
        assert rotated == list(range(n))


def test_strip_map_fixed_inside():
    sys = triangle_system()
    assert strip_map(sys.pair(0), pt(1, 3)) == pt(1, 3)


def test_strip_map_one_step_closer_entering():
    sys = triangle_system()
    # offset -1: candidates +V gives 5 (inside), -V gives -7; closer wins
    assert strip_map(sys.pair(0), pt(0, -1)) == pt(2, 5)


def test_strip_map_one_step_closer_still_outside():
    sys = triangle_system()
    # offset 13: -V gives 7 (distance 1, still outside), +V gives 19
    assert strip_map(sys.pair(0), pt(0, 13)) == pt(-2, 7)


def test_strip_map_boundary_is_error():
    sys = triangle_system()
    with pytest.raises(OnStripBoundaryError):
        strip_map(sys.pair(0), pt(5, 0))
    with pytest.raises(OnStripBoundaryError):
        strip_map(sys.pair(0), pt(5, 6))


def test_strip_map_contracts_offset_distance():
    sys = build_pinwheel_system(PENTAGON)
    for j in range(sys.n):
        pair = sys.pair(j)
        p = pt(31, 47)
        guard = 0
        while pair.location(p) != 1:
            d_before = pair.slab_distance(p)
            p = strip_map(pair, p)
            d_after = pair.slab_distance(p)
            # the offset moves by exactly one width toward the slab
            assert d_after == max(d_before - pair.width, 0)
            assert d_after < d_before
            guard += 1
            assert guard < 100


def test_compose_single_stage_when_a_equals_b():
    sys = triangle_system()
    p = pt(0, -1)
    assert compose_strip_maps(sys, 0, 0, p) == strip_map(sys.pair(0), p)


def test_compose_fixes_point_interior_to_all_strips():
    sys = build_pinwheel_system(PENTAGON)
    inner = pt(2, 2)  # interior of the polygon lies inside every strip
    for j in range(sys.n):
        assert sys.pair(j).location(inner) == 1
    assert compose_strip_maps(sys, 0, sys.n - 1, inner) == inner


def test_compose_matches_stepwise_loop():
    sys = triangle_system()
    p = pt(Fraction(37, 5), Fraction(-22, 7))
    manual = p
    for i in (0, 1, 2):
        manual = strip_map(sys.pair(i), manual)
    assert compose_strip_maps(sys, 0, 2, p) == manual


def test_compose_wraps_indices():
    sys = triangle_system()
    p = pt(Fraction(19, 3), Fraction(14, 5))
    manual = strip_map(sys.pair(2), p)
    manual = strip_map(sys.pair(0), manual)
    assert compose_strip_maps(sys, 2, 0, p) == manual


def test_sigma_range_whole_plane_when_equal():
    sys = triangle_system()
    r = sigma_range(sys, 1, 1)
    assert not r.is_empty
    assert len(r.constraints) == 0


def test_sigma_range_single_strip():
    sys = triangle_system()
    assert sigma_range(sys, 0, 1) == sys.strip(0)


def test_sigma_range_parallelogram_area_48():
    sys = triangle_system()
    r = sigma_range(sys, 0, 2)  # strips 0 and 1
    assert r.is_bounded()
    assert r.area() == 48


def test_next_vector_spans_previous_strip_exactly():
    # the translation of strip j+1 crosses strip j corner to corner, which is
    # what forces a strip-map step to leave the previous strip in one move
    from outerbilliards.generate import random_nice_polygon

    for poly in (TRIANGLE, PENTAGON, random_nice_polygon(6, 31),
                 random_nice_polygon(7, 8)):
        sys = build_pinwheel_system(poly)
        for j in range(sys.n):
            pj, nxt = sys.pair(j), sys.pair(j + 1)
            delta = pj.line.a * nxt.V.x + pj.line.b * nxt.V.y
            assert abs(delta) == pj.width


def test_compose_reports_failing_stage():
    sys = triangle_system()
    # (5, 0) sits on the boundary of strip 0, so stage 0 must be blamed
    with pytest.raises(OnStripBoundaryError) as err:
        compose_strip_maps(sys, 0, 2, pt(5, 0))
    assert err.value.stage == 0


def test_strip_widths_double_minimal_strip():
    # the slab is twice as fat as the minimal polygon-supporting slab
    for poly in (TRIANGLE, PENTAGON):
        sys = build_pinwheel_system(poly)
        for p in sys.pairs:
            farthest = max(p.offset(v) for v in poly.vertices)
            assert p.width == 2 * farthest
