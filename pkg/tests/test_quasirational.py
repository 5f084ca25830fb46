"""Quasirationality, necklace rings, and the boundedness certificate."""

from fractions import Fraction

import pytest

from outerbilliards.dynamics import IndexedPoint, orbit, strip_system_return
from outerbilliards.errors import AnnulusNotFoundError, NotQuasirationalError
from outerbilliards.generate import random_nice_polygon
from outerbilliards.geometry import Location, Point, norm2_sq, pt
from outerbilliards.model import BilliardModel
from outerbilliards.polygon import NicePolygon
from outerbilliards.quasirational import (
    annulus_windows,
    boundedness_certificate,
    in_annulus,
    necklace,
    necklace_shift,
    overlap_area_determinant,
    quasi_analyze,
    transfer_ratio,
)
from outerbilliards.scalars import QuadExt, quadext
from outerbilliards.verify import check_necklace_invariance

TRIANGLE = NicePolygon.from_points([pt(0, 0), pt(1, 3), pt(4, 0)])


def sqrt5_kite():
    # kite with apex exactly sqrt(5); a nice polygon over Q(sqrt 5)
    return NicePolygon.from_points(
        [Point(Fraction(-1), Fraction(0)), Point(Fraction(0), Fraction(1)),
         Point(quadext(0, 1, 5), Fraction(0)), Point(Fraction(0), Fraction(-1))],
        quad_d=5)


def test_triangle_overlap_areas_all_48():
    m = BilliardModel(TRIANGLE)
    q = quasi_analyze(m.system)
    assert q.areas == (Fraction(48), Fraction(48), Fraction(48))
    assert q.quasirational
    assert q.D == 48
    assert q.D_int == (1, 1, 1)


def test_area_two_routes_agree():
    for n in (3, 4, 5, 6, 7):
        m = BilliardModel(random_nice_polygon(n, seed=3 * n + 7))
        q = quasi_analyze(m.system)
        for j in range(n):
            assert q.areas[j] == overlap_area_determinant(m.system, j)
            assert q.areas[j] > 0


def test_rational_polygons_always_quasirational():
    for n in (3, 5, 7):
        m = BilliardModel(random_nice_polygon(n, seed=n))
        q = quasi_analyze(m.system)
        assert q.quasirational
        for j in range(n):
            d_over_a = q.D / q.areas[j]
            assert d_over_a == q.D_int[j] and q.D_int[j] >= 1


def test_least_common_multiple_is_least():
    m = BilliardModel(random_nice_polygon(5, seed=21))
    q = quasi_analyze(m.system)
    # half of D fails to be an integer multiple of some area
    half = q.D / 2
    assert any((half / a).denominator != 1 for a in q.areas)


def test_sqrt5_kite_not_quasirational():
    m = BilliardModel(sqrt5_kite())
    q = quasi_analyze(m.system)
    assert not q.quasirational
    assert q.D is None and q.D_int is None
    # the computed ratio of the first two overlap areas is exactly sqrt(5)
    ratio = q.areas[0] / q.areas[1]
    assert ratio == QuadExt(0, 1, 5)
    assert q.areas[0] == QuadExt(20, 12, 5)
    assert q.areas[1] == QuadExt(12, 4, 5)


def test_necklace_zero_shift_is_polygon():
    m = BilliardModel(TRIANGLE)
    spec = necklace(m.system, 0, 0)
    assert spec.p_vertices == m.polygon.vertices
    assert spec.q_vertices == tuple(
        v.reflect_through(spec.center) for v in m.polygon.vertices)
    assert spec.center == m.system.pair(0).w


def test_necklace_copies_preserve_area():
    m = BilliardModel(random_nice_polygon(5, seed=2))
    base = abs(_signed_area(m.polygon.vertices))
    for j in range(m.n):
        for mm in (-2, 1, 3):
            spec = necklace(m.system, j, mm)
            assert abs(_signed_area(spec.p_vertices)) == base
            assert abs(_signed_area(spec.q_vertices)) == base


def _signed_area(verts):
    acc = Fraction(0)
    for i, v in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        acc += v.x * w.y - w.x * v.y
    return acc / 2


def test_necklace_shift_spans_next_strip():
    m = BilliardModel(random_nice_polygon(6, seed=8))
    for j in range(m.n):
        d = necklace_shift(m.system, j)
        nxt = m.system.pair(j + 1)
        assert nxt.line.a * d.x + nxt.line.b * d.y == nxt.width
        # parallel to edge j
        e = m.polygon.edges[m.system.pair(j).edge_index]
        ed = m.polygon.vertices[e.head] - m.polygon.vertices[e.tail]
        assert d.cross(ed) == 0


def test_transfer_ratio_magnitude_and_cycle_sign():
    """Carrying a ring one strip ahead scales the shift exponent by exactly
    A_j / A_{j+1} in magnitude; the signs multiply to -1 around the cycle
    (one full turn lands on the other side of the polygon)."""
    for n in (3, 4, 5, 6, 7):
        m = BilliardModel(random_nice_polygon(n, seed=9 * n + 1))
        q = quasi_analyze(m.system)
        prod = 1
        for j in range(n):
            lam = transfer_ratio(m.system, j)
            assert abs(lam) == q.areas[j] / q.areas[(j + 1) % n]
            prod *= 1 if lam > 0 else -1
        assert prod == -1


def test_necklace_invariance_sampled_and_exact():
    for seed in (5, 6):
        m = BilliardModel(random_nice_polygon(5, seed=seed))
        for mm in (1, 2):
            rep = check_necklace_invariance(m, m=mm, samples=20, seed=seed)
            assert rep.passed, rep.violations[:2]


def test_necklace_invariance_wrong_exponent_fails():
    m = BilliardModel(random_nice_polygon(5, seed=5))
    rep = check_necklace_invariance(m, m=1, samples=16, seed=1,
                                    exponent_offset=1)
    assert not rep.passed


def test_annulus_windows_and_membership():
    m = BilliardModel(TRIANGLE)
    q = quasi_analyze(m.system)
    for j in range(m.n):
        (a1, b1), (a2, b2) = annulus_windows(m.system, j, q.D_int[j])
        assert a1 < b1 and a2 < b2  # D_j = 1 rings leave a gap here
    assert not in_annulus(m.system, 0, 1, pt(1, 1))  # interior of P


def test_boundedness_certificate_triangle():
    m = BilliardModel(TRIANGLE)
    q = quasi_analyze(m.system)
    # hunt a certified point inside strip 0's m=1 annulus
    (a1, b1), _ = annulus_windows(m.system, 0, q.D_int[0])
    from outerbilliards.quasirational import _solve_frame

    pair = m.system.pair(0)
    d = necklace_shift(m.system, 0)
    p = _solve_frame(pair.line.a, pair.line.b, pair.line.c + Fraction(7, 3),
                     d.x, d.y, (a1 + b1) / 2)
    assert in_annulus(m.system, 0, q.D_int[0], p)
    bounded, radius = boundedness_certificate(m.system, q, p, m=1)
    assert bounded
    assert radius > 0
    # empirical confirmation: a long orbit stays within the L1 radius
    rec = orbit(m, p, "psi", budget=3000)
    for e in rec.events:
        assert abs(e.point.x) + abs(e.point.y) <= radius
    assert rec.final.tag == "budget-exhausted"


def test_certificate_radius_monotone_in_m():
    m = BilliardModel(TRIANGLE)
    q = quasi_analyze(m.system)
    (a1, b1), _ = annulus_windows(m.system, 0, q.D_int[0])
    from outerbilliards.quasirational import _solve_frame

    pair = m.system.pair(0)
    d = necklace_shift(m.system, 0)
    p = _solve_frame(pair.line.a, pair.line.b, pair.line.c + Fraction(7, 3),
                     d.x, d.y, (a1 + b1) / 2)
    _, r1 = boundedness_certificate(m.system, q, p, m=1)
    _, r2 = boundedness_certificate(m.system, q, p, m=2)
    _, r3 = boundedness_certificate(m.system, q, p, m=3)
    assert r1 <= r2 <= r3


def test_certificate_errors():
    kite = BilliardModel(sqrt5_kite())
    qk = quasi_analyze(kite.system)
    with pytest.raises(NotQuasirationalError):
        boundedness_certificate(kite.system, qk, pt(10, 10), m=1)
    m = BilliardModel(TRIANGLE)
    q = quasi_analyze(m.system)
    with pytest.raises(AnnulusNotFoundError):
        boundedness_certificate(m.system, q, pt(1, 1), m=1)  # inside P
    with pytest.raises(ValueError):
        boundedness_certificate(m.system, q, pt(1, 1), m=0)


def test_strip_system_maps_polygon_copy_to_itself():
    """The zero-shift copy: interior polygon points simply advance the index."""
    m = BilliardModel(random_nice_polygon(4, seed=4))
    inner = m.polygon.vertices[0] + (m.polygon.vertices[2] - m.polygon.vertices[0]) * Fraction(1, 3)
    assert m.polygon.point_location(inner) is Location.INTERIOR
    for j in range(m.n):
        land, steps = strip_system_return(m.system, IndexedPoint(inner, j))
        assert land.point == inner
        assert steps == 1
        assert land.index == (j + 1) % m.n
