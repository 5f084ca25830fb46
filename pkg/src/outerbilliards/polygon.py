"""Nice polygons: validated convex n-gons with no parallel sides.

Vertices are stored clockwise under the y-up frame (negative signed area).
Input in either orientation is accepted and reoriented with a flag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import (
    DegenerateVerticesError,
    NotConvexError,
    ParallelEdgesError,
    ParseError,
)
from .geometry import Line, Location, Point
from .scalars import scalar_from_json, scalar_to_json, sign


@dataclass(frozen=True)
class Edge:
    """Polygon edge from vertex `tail` to vertex `head` (clockwise order).

    The line is oriented so that the polygon lies on the positive-offset side.
    """

    tail: int
    head: int
    line: Line


class NicePolygon:
    """A strictly convex polygon, clockwise vertices, no two sides parallel."""

    __slots__ = ("vertices", "reoriented", "edges", "quad_d")

    def __init__(self, vertices: Sequence[Point], reoriented: bool = False,
                 quad_d: Optional[int] = None):
        verts = tuple(vertices)
        _validate(verts)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "reoriented", reoriented)
        object.__setattr__(self, "edges", _build_edges(verts))
        object.__setattr__(self, "quad_d", quad_d)

    def __setattr__(self, name, value):
        raise AttributeError("NicePolygon is immutable")

    @staticmethod
    def from_points(points: Sequence[Point], quad_d: Optional[int] = None) -> "NicePolygon":
        verts = tuple(points)
        if len(verts) >= 3 and _signed_area2(verts) > 0:
            return NicePolygon(tuple(reversed(verts)), reoriented=True, quad_d=quad_d)
        return NicePolygon(verts, reoriented=False, quad_d=quad_d)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def point_location(self, p: Point) -> Location:
        """Exact inside / boundary / outside classification."""
        on_boundary = False
        for e in self.edges:
            s = sign(e.line.signed_offset(p))
            if s < 0:
                return Location.OUTSIDE
            if s == 0:
                on_boundary = True
        return Location.BOUNDARY if on_boundary else Location.INTERIOR

    def diameter_sq_bound(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        dx = max(xs) - min(xs)
        dy = max(ys) - min(ys)
        return dx * dx + dy * dy

    def to_document(self) -> dict:
        field = "rational" if self.quad_d is None else {"quad": self.quad_d}
        return {
            "schema": "polygon/1",
            "field": field,
            "vertices": [[scalar_to_json(v.x), scalar_to_json(v.y)]
                         for v in self.vertices],
        }

    def __eq__(self, other):
        return isinstance(other, NicePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"NicePolygon(n={self.n})"


def _signed_area2(verts: Tuple[Point, ...]):
    acc = Fraction(0)
    for i, v in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        acc = acc + (v.x * w.y - w.x * v.y)
    return acc


def _validate(verts: Tuple[Point, ...]):
    n = len(verts)
    if n < 3:
        raise DegenerateVerticesError(f"need at least 3 vertices, got {n}",
                                      range(n))
    seen = {}
    for i, v in enumerate(verts):
        key = (v.x, v.y)
        if key in seen:
            raise DegenerateVerticesError(
                f"repeated vertex at indices {seen[key]} and {i}", (seen[key], i))
        seen[key] = i
    area2 = _signed_area2(verts)
    if area2 == 0:
        raise DegenerateVerticesError("zero-area vertex cycle", range(n))
    if area2 > 0:
        raise NotConvexError("vertices must be clockwise (call from_points "
                             "to auto-reorient)", range(n))
    for i in range(n):
        a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
        turn = sign((b - a).cross(c - b))
        if turn == 0:
            raise DegenerateVerticesError(
                f"collinear vertices at indices {(i - 1) % n}, {i}, {(i + 1) % n}",
                ((i - 1) % n, i, (i + 1) % n))
        if turn > 0:
            raise NotConvexError(f"reflex corner at vertex {i}", (i,))
    dirs = [verts[(i + 1) % n] - verts[i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if dirs[i].cross(dirs[j]) == 0:
                raise ParallelEdgesError(
                    f"edges {i} and {j} are parallel", (i, j))


def _build_edges(verts: Tuple[Point, ...]) -> Tuple[Edge, ...]:
    n = len(verts)
    edges = []
    for i in range(n):
        tail, head = verts[i], verts[(i + 1) % n]
        line = Line.through(tail, head)
        # orient the normal so the polygon sits on the positive side
        other = verts[(i + 2) % n]
        if sign(line.signed_offset(other)) < 0:
            line = Line(-line.a, -line.b, -line.c)
        edges.append(Edge(i, (i + 1) % n, line))
    return tuple(edges)


# ---------------------------------------------------------------------------
# document parsing


def parse_polygon(text: str) -> NicePolygon:
    """Parse the polygon file format; validation errors carry indices."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: "
                         f"{exc.msg}") from exc
    return polygon_from_document(doc)


def polygon_from_document(doc) -> NicePolygon:
    if not isinstance(doc, dict):
        raise ParseError("polygon document must be an object")
    field = doc.get("field", "rational")
    if field == "rational":
        quad_d = None
    elif isinstance(field, dict) and isinstance(field.get("quad"), int):
        quad_d = field["quad"]
    else:
        raise ParseError(f"unsupported field spec: {field!r}")
    raw = doc.get("vertices")
    if not isinstance(raw, list):
        raise ParseError("missing or malformed 'vertices' list")
    points = []
    for i, entry in enumerate(raw):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ParseError(f"vertex {i} must be a [x, y] pair")
        try:
            x = scalar_from_json(entry[0], quad_d=quad_d)
            y = scalar_from_json(entry[1], quad_d=quad_d)
        except ValueError as exc:
            raise ParseError(f"vertex {i}: {exc}") from exc
        points.append(Point(x, y))
    return NicePolygon.from_points(points, quad_d=quad_d)


def polygon_to_text(polygon: NicePolygon) -> str:
    return json.dumps(polygon.to_document(), sort_keys=True, indent=2) + "\n"
