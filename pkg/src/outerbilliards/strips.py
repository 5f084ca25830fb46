"""Pinwheel pairs, spokes, strip maps and their compositions.

For every polygon edge e there is a strip bounded by the edge's line L and the
parallel line L' placed so the vertex farthest from L sits exactly halfway,
together with the vector V = 2(w - v) from the edge's head vertex v to twice
the far vertex w.  The strips are indexed by the cyclic order of edge slopes;
index 0 goes to the edge whose direction angle in [0, pi) is smallest, so runs
are reproducible even though only the cyclic order is geometrically forced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Tuple

from .errors import OnStripBoundaryError
from .geometry import (
    ConvexRegion,
    HalfPlane,
    Line,
    Point,
    Sense,
    Vec,
    region,
    slope_angle_cmp,
)
from .polygon import NicePolygon
from .scalars import Scalar, sign


@dataclass(frozen=True)
class PinwheelPair:
    """Strip and translation vector attached to one polygon edge."""

    index: int              # position in the slope-cyclic order, 0-based
    edge_index: int         # index into polygon.edges (vertex order)
    line: Line              # L, contains the edge; polygon on the positive side
    line_far: Line          # L', parallel, offset = width
    width: Scalar           # signed_offset(L, .) evaluated on L'; always > 0
    v_index: int            # head vertex of the edge
    w_index: int            # vertex farthest from L, on the centerline
    v: Point
    w: Point
    V: Vec                  # 2*(w - v); translation spanning the strip

    def offset(self, p: Point) -> Scalar:
        return self.line.signed_offset(p)

    def slab_distance(self, p: Point) -> Scalar:
        """Offset distance from p to the closed slab; 0 inside."""
        t = self.offset(p)
        if t < 0:
            return -t
        if t > self.width:
            return t - self.width
        return Fraction(0)

    def location(self, p: Point) -> int:
        """-1 outside, 0 on the boundary, +1 strictly inside the strip."""
        t = self.offset(p)
        if t == 0 or t == self.width:
            return 0
        return 1 if 0 < t < self.width else -1

    def strip_region(self) -> ConvexRegion:
        return region([
            HalfPlane(self.line, Sense.GE),
            HalfPlane(self.line_far, Sense.LE),
        ])

    def centerline(self) -> Line:
        return self.line.parallel_offset(self.width / 2)


@dataclass(frozen=True)
class Spoke:
    """Oriented segment from the edge's head vertex to the far vertex."""

    index: int
    tail_index: int
    head_index: int
    tail: Point
    head: Point
    special: bool

    def direction(self) -> Vec:
        return self.head - self.tail

    def endpoint_indices(self) -> Tuple[int, int]:
        return (self.tail_index, self.head_index)


class PinwheelSystem:
    """All pinwheel pairs and spokes of a nice polygon, slope ordered."""

    __slots__ = ("polygon", "pairs", "spokes", "_strip_regions")

    def __init__(self, polygon: NicePolygon, pairs: Tuple[PinwheelPair, ...],
                 spokes: Tuple[Spoke, ...]):
        self.polygon = polygon
        self.pairs = pairs
        self.spokes = spokes
        self._strip_regions = tuple(p.strip_region() for p in pairs)

    @property
    def n(self) -> int:
        return len(self.pairs)

    def pair(self, j: int) -> PinwheelPair:
        return self.pairs[j % self.n]

    def spoke(self, j: int) -> Spoke:
        return self.spokes[j % self.n]

    def strip(self, j: int) -> ConvexRegion:
        return self._strip_regions[j % self.n]

    def mu(self, j: int, p: Point) -> Point:
        return strip_map(self.pair(j), p)

    def max_width(self) -> Scalar:
        return max(p.width for p in self.pairs)

    def with_pair(self, j: int, pair: PinwheelPair) -> "PinwheelSystem":
        """Copy with one pair replaced (used by harness negative controls)."""
        pairs = list(self.pairs)
        pairs[j % self.n] = pair
        return PinwheelSystem(self.polygon, tuple(pairs), self.spokes)


def _canonical_positive_line(raw: Line, inner: Point) -> Line:
    lead = raw.a if raw.a != 0 else raw.b
    line = Line(raw.a / lead, raw.b / lead, raw.c / lead)
    if sign(line.signed_offset(inner)) < 0:
        line = Line(-line.a, -line.b, -line.c)
    return line


def build_pinwheel_system(polygon: NicePolygon) -> PinwheelSystem:
    """Construct the n pinwheel pairs and spokes, slope-cyclically indexed."""
    n = polygon.n
    entries = []
    for e in polygon.edges:
        tail, head = polygon.vertices[e.tail], polygon.vertices[e.head]
        line = _canonical_positive_line(e.line, _inner_reference(polygon, e.tail))
        offsets = [line.signed_offset(v) for v in polygon.vertices]
        far = max(range(n), key=lambda i: offsets[i])
        ties = [i for i in range(n) if offsets[i] == offsets[far]]
        if len(ties) != 1:
            # two equidistant vertices would mean an edge parallel to this one
            raise AssertionError(f"farthest vertex not unique for edge {e.tail}")
        width = 2 * offsets[far]
        entries.append((head - tail, e, line, far, width))

    entries.sort(key=cmp_to_key(lambda x, y: slope_angle_cmp(x[0], y[0])))

    pairs = []
    for j, (_, e, line, far, width) in enumerate(entries):
        v = polygon.vertices[e.head]
        w = polygon.vertices[far]
        pairs.append(PinwheelPair(
            index=j,
            edge_index=e.tail,
            line=line,
            line_far=line.parallel_offset(width),
            width=width,
            v_index=e.head,
            w_index=far,
            v=v,
            w=w,
            V=(w - v) * 2,
        ))

    spokes = []
    for j, p in enumerate(pairs):
        prev = pairs[(j - 1) % n]
        nxt = pairs[(j + 1) % n]
        shared = ({prev.v_index, prev.w_index}
                  & {p.v_index, p.w_index}
                  & {nxt.v_index, nxt.w_index})
        spokes.append(Spoke(
            index=j,
            tail_index=p.v_index,
            head_index=p.w_index,
            tail=p.v,
            head=p.w,
            special=bool(shared),
        ))

    system = PinwheelSystem(polygon, tuple(pairs), tuple(spokes))
    _assert_chain(system)
    return system


def _inner_reference(polygon: NicePolygon, edge_tail: int) -> Point:
    # any vertex off the edge works as an interior-side witness
    return polygon.vertices[(edge_tail + 2) % polygon.n]


def _assert_chain(system: PinwheelSystem):
    """Consecutive spokes must share a vertex (pinwheel chain structure)."""
    n = system.n
    for j in range(n):
        s, t = system.spoke(j), system.spoke(j + 1)
        if not ({s.tail_index, s.head_index} & {t.tail_index, t.head_index}):
            raise AssertionError(f"spokes {j} and {(j + 1) % n} share no vertex")


def strip_map(pair: PinwheelPair, p: Point) -> Point:
    """One application of the strip map: identity strictly inside the slab,
    otherwise the translate by +-V that is strictly closer to the slab.  The
    result may still be outside; each application moves the offset by exactly
    one width toward the slab.  Undefined on the slab boundary."""
    t = pair.offset(p)
    if t == 0 or t == pair.width:
        raise OnStripBoundaryError(p, stage=pair.index)
    if 0 < t < pair.width:
        return p
    plus = p + pair.V
    minus = p - pair.V
    d_plus = pair.slab_distance(plus)
    d_minus = pair.slab_distance(minus)
    # ties are impossible off the boundary: equal distances would put p on
    # the centerline, which is inside the slab
    assert d_plus != d_minus
    return plus if d_plus < d_minus else minus


def strip_jump(pair: PinwheelPair, p: Point) -> Tuple[Point, int]:
    """Where iterating the strip map lands p strictly inside the slab, plus
    the number of translations taken; exact closed form on the offset.

    Equivalent to applying `strip_map` until the point is interior (each
    application moves the offset by one width), but O(1).  Raises
    OnStripBoundaryError when the offset is an exact multiple of the width,
    which is where some iterate would sit on the slab boundary.
    """
    t = pair.offset(p)
    w = pair.width
    steps = -_floor_div(t, w)
    if steps == 0:
        if t == 0 or t == w:
            raise OnStripBoundaryError(p, stage=pair.index)
        return p, 0
    if steps > 0:
        q = p + pair.V * steps
    else:
        steps = -steps
        q = p - pair.V * steps
    if pair.location(q) != 1:
        raise OnStripBoundaryError(q, stage=pair.index)
    return q, steps


def _floor_div(t, w) -> int:
    """floor(t / w) for exact scalars, w > 0."""
    q = t / w
    if isinstance(q, Fraction):
        return q.numerator // q.denominator
    # quadratic scalar a + b*sqrt(d): seed with an integer-sqrt estimate of
    # the radical part, then correct with exact comparisons
    import math

    s = q.b * q.b * q.d
    root = math.isqrt(s.numerator * s.denominator) // s.denominator
    est = (q.a.numerator // q.a.denominator) + (root if q.b > 0 else -root - 1)
    lo = est - 2
    while q >= lo + 1:
        lo += 1
    while q < lo:
        lo -= 1
    return lo


def compose_strip_maps(system: PinwheelSystem, a: int, b: int, p: Point) -> Point:
    """Apply mu_a, ..., mu_b' in order, b' the smallest index >= a congruent
    to b mod n.  Raises OnStripBoundaryError with the failing stage."""
    n = system.n
    b_lifted = a + (b - a) % n
    q = p
    for i in range(a, b_lifted + 1):
        try:
            q = system.mu(i % n, q)
        except OnStripBoundaryError as exc:
            raise OnStripBoundaryError(exc.point, stage=i % n) from None
    return q


def sigma_range(system: PinwheelSystem, a: int, b: int) -> ConvexRegion:
    """Intersection of the strips a, ..., b'-1; the whole plane when a == b."""
    n = system.n
    span = (b - a) % n
    if span == 0:
        return ConvexRegion.whole_plane()
    out = system.strip(a)
    for i in range(a + 1, a + span):
        out = out.intersect(system.strip(i % n))
    return out
