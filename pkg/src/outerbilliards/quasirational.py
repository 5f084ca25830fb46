"""Quasirationality, necklace polygons, and the orbit-boundedness certificate.

A polygon is quasirational when the areas of the n overlap parallelograms of
consecutive strips have pairwise rational ratios (equivalently, the polygon
scales so all the areas are integers).  For such polygons the ring of
polygon copies spaced m*D_j shifts apart along each strip is carried around
strip by strip, which traps every orbit between consecutive rings.

One wrinkle the construction must respect: carrying a shifted copy from strip
j to strip j+1 multiplies the shift exponent by +-A_j/A_{j+1}, and the product
of the signs around the full cycle is -1 (the ring crosses each strip twice,
on opposite sides of the polygon, and one full turn lands on the other side).
The invariance checks therefore work with the two-sided ring |exponent| = m*D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from .errors import AnnulusNotFoundError, NotQuasirationalError
from .geometry import ConvexRegion, Point, Vec, polygon_region
from .scalars import Scalar, sign
from .strips import PinwheelSystem


@dataclass(frozen=True)
class QuasiData:
    areas: Tuple[Scalar, ...]          # A_j = area(strip_j overlap strip_{j+1})
    quasirational: bool
    D: Optional[Scalar]                # least positive value with D/A_j integral
    D_int: Optional[Tuple[int, ...]]   # the integers D/A_j


def overlap_area(system: PinwheelSystem, j: int) -> Scalar:
    return system.strip(j).intersect(system.strip(j + 1)).area()


def overlap_area_determinant(system: PinwheelSystem, j: int) -> Scalar:
    """Independent route: W_j * W_{j+1} / |det of the two strip normals|."""
    a, b = system.pair(j), system.pair(j + 1)
    det = a.line.a * b.line.b - b.line.a * a.line.b
    return abs(a.width * b.width / det)


def quasi_analyze(system: PinwheelSystem) -> QuasiData:
    n = system.n
    areas = tuple(overlap_area(system, j) for j in range(n))
    assert all(sign(a) > 0 for a in areas)
    if all(isinstance(a, Fraction) for a in areas):
        num, den = 1, 1
        for a in areas:
            num = num * a.numerator // gcd(num, a.numerator)
            den = gcd(den, a.denominator)
        d = Fraction(num, den)
        ints = tuple(int(d / a) for a in areas)
        return QuasiData(areas, True, d, ints)
    ratios = [areas[j] / areas[0] for j in range(n)]
    if not all(isinstance(r, Fraction) for r in ratios):
        return QuasiData(areas, False, None, None)
    # irrational areas with rational ratios: D = lcm(ratio numerators) * A_0
    t = 1
    for r in ratios:
        t = t * r.numerator // gcd(t, r.numerator)
    d = areas[0] * t
    ints = []
    for a in areas:
        q = d / a
        assert isinstance(q, Fraction) and q.denominator == 1
        ints.append(int(q))
    return QuasiData(areas, True, d, tuple(ints))


# ---------------------------------------------------------------------------
# necklace polygons


@dataclass(frozen=True)
class NecklaceSpec:
    """The m-th translated copy pair along strip j."""

    j: int
    m: int
    shift: Vec                     # vector parallel to edge j spanning strip j+1
    center: Point                  # the vertex of P on the centerline of strip j
    p_vertices: Tuple[Point, ...]  # P + m*shift
    q_vertices: Tuple[Point, ...]  # (180-degree rotation of P about center) + m*shift

    def p_region(self, open_region: bool = True) -> ConvexRegion:
        return polygon_region(self.p_vertices, open_region=open_region)

    def q_region(self, open_region: bool = True) -> ConvexRegion:
        return polygon_region(self.q_vertices, open_region=open_region)

    def contains(self, p: Point) -> bool:
        from .geometry import Location

        return (self.p_region().contains(p) is Location.INTERIOR
                or self.q_region().contains(p) is Location.INTERIOR)


def necklace_shift(system: PinwheelSystem, j: int) -> Vec:
    """The vector parallel to edge j that spans strip j+1, oriented so the
    strip-(j+1) offset increases by one width."""
    pj = system.pair(j)
    nxt = system.pair(j + 1)
    e = system.polygon.edges[pj.edge_index]
    d = system.polygon.vertices[e.head] - system.polygon.vertices[e.tail]
    t = nxt.width / (nxt.line.a * d.x + nxt.line.b * d.y)
    return d * t


def transfer_ratio(system: PinwheelSystem, j: int) -> Scalar:
    """Signed ratio lambda with shift_j - V_{j+1} = lambda * shift_{j+1}.

    |lambda| always equals A_j / A_{j+1}; the sign says on which side of the
    polygon the carried ring lands.  The cycle product of the signs is -1.
    """
    lhs = necklace_shift(system, j) - system.pair(j + 1).V
    rhs = necklace_shift(system, (j + 1) % system.n)
    lam = lhs.x / rhs.x if rhs.x != 0 else lhs.y / rhs.y
    assert lhs.x == lam * rhs.x and lhs.y == lam * rhs.y
    return lam


def necklace(system: PinwheelSystem, j: int, m: int) -> NecklaceSpec:
    j = j % system.n
    shift = necklace_shift(system, j)
    center = system.pair(j).w
    offset = shift * m
    p_vertices = tuple(v + offset for v in system.polygon.vertices)
    q_vertices = tuple(v.reflect_through(center) + offset
                       for v in system.polygon.vertices)
    return NecklaceSpec(j=j, m=m, shift=shift, center=center,
                        p_vertices=p_vertices, q_vertices=q_vertices)


# ---------------------------------------------------------------------------
# annulus membership and the boundedness certificate


def _axis_coord(system: PinwheelSystem, j: int, p: Point) -> Scalar:
    d = necklace_shift(system, j)
    return d.x * p.x + d.y * p.y


def _ring_axis_range(system: PinwheelSystem, j: int, m: int):
    spec = necklace(system, j, m)
    vals = [_axis_coord(system, j, v) for v in spec.p_vertices]
    vals += [_axis_coord(system, j, v) for v in spec.q_vertices]
    return min(vals), max(vals)


def annulus_windows(system: PinwheelSystem, j: int, m_exponent: int):
    """The two axis-coordinate windows of strip j strictly between the base
    ring and the +-m_exponent rings."""
    lo0, hi0 = _ring_axis_range(system, j, 0)
    lo_p, _ = _ring_axis_range(system, j, m_exponent)
    _, hi_m = _ring_axis_range(system, j, -m_exponent)
    return ((hi0, lo_p), (hi_m, lo0))


def in_annulus(system: PinwheelSystem, j: int, m_exponent: int, p: Point) -> bool:
    """Conservative membership: strictly between the hull extents of the base
    ring and the +-m_exponent rings (a subset of the pictorial 'between')."""
    if system.pair(j).location(p) != 1:
        return False
    s = _axis_coord(system, j, p)
    (a1, b1), (a2, b2) = annulus_windows(system, j, m_exponent)
    return (a1 < s < b1) or (a2 < s < b2)


def in_trapped_extent(system: PinwheelSystem, j: int, m_exponent: int,
                      p: Point) -> bool:
    """Loose membership: inside the strip, within the closed axis extent of
    the two outer rings, and not interior to either outer ring copy.  The
    image of any between-point lands here; points here can never escape."""
    from .geometry import Location

    if system.pair(j).location(p) != 1:
        return False
    s = _axis_coord(system, j, p)
    lo, _ = _ring_axis_range(system, j, -m_exponent)
    _, hi = _ring_axis_range(system, j, m_exponent)
    if not (lo <= s <= hi):
        return False
    for m_out in (m_exponent, -m_exponent):
        spec = necklace(system, j, m_out)
        if spec.contains(p):
            return False
    return True


def boundedness_certificate(system: PinwheelSystem, quasi: QuasiData,
                            p: Point, m: int) -> Tuple[bool, Scalar]:
    """Certify that p's orbit is bounded: p must sit in some strip's m-ring
    annulus; the returned radius is an L1 bound every future orbit point obeys.

    The certificate rests on the carried-ring invariance (checked separately);
    the radius covers the two-sided rings of every strip, so the orbit cannot
    leave the disk |x| + |y| <= radius.
    """
    if not quasi.quasirational:
        raise NotQuasirationalError("polygon is not quasirational")
    if m < 1:
        raise ValueError("m must be >= 1")
    n = system.n
    home = None
    for j in range(n):
        if in_annulus(system, j, m * quasi.D_int[j], p):
            home = j
            break
    if home is None:
        raise AnnulusNotFoundError(
            f"point {p} is not inside any strip's m={m} annulus")
    radius = Fraction(0)
    for j in range(n):
        pair = system.pair(j)
        lo, _ = _ring_axis_range(system, j, -m * quasi.D_int[j])
        _, hi = _ring_axis_range(system, j, m * quasi.D_int[j])
        d = necklace_shift(system, j)
        for s_val in (lo, hi):
            for off in (Fraction(0), pair.width):
                corner = _solve_frame(pair.line.a, pair.line.b,
                                      pair.line.c + off, d.x, d.y, s_val)
                radius = max(radius, abs(corner.x) + abs(corner.y))
    return True, radius


def _solve_frame(a1, b1, c1, a2, b2, c2) -> Point:
    det = a1 * b2 - a2 * b1
    x = (c1 * b2 - c2 * b1) / det
    y = (a1 * c2 - a2 * c1) / det
    return Point(x, y)
