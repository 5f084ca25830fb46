"""The outer billiards map, its square, and the tangent-pair partitions.

The square map is a piecewise translation: away from a measure-zero wall set,
p moves by 2*(w - v) where v and w are the tangent vertices of the two
reflection steps.  The regions of constancy are convex tiles, computed here
exactly as cone(v) intersected with the point reflection of cone(w) through
v; each tile is open and carries its translation vector.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from .errors import InsidePolygonError, OnPrimaryWallError, UndefinedOnWallError
from .geometry import (
    ConvexRegion,
    HalfPlane,
    Line,
    Location,
    Point,
    Sense,
    Vec,
    region,
)
from .polygon import NicePolygon
from .scalars import sign


class Chirality(enum.Enum):
    """Which side of the ray p -> v the polygon must lie on."""

    RIGHT = -1   # forward outer billiards
    LEFT = 1     # inverse map


def tangent_vertex(polygon: NicePolygon, p: Point,
                   chirality: Chirality = Chirality.RIGHT) -> int:
    """The unique vertex v with every other vertex strictly on the chirality
    side of the ray p -> v; OnPrimaryWallError when a collinear vertex makes
    the choice ambiguous, InsidePolygonError when p is not strictly outside."""
    if polygon.point_location(p) is not Location.OUTSIDE:
        raise InsidePolygonError(p)
    want = chirality.value
    wall_candidate = False
    for i, v in enumerate(polygon.vertices):
        ray = v - p
        ok, grazing = True, False
        for j, u in enumerate(polygon.vertices):
            if j == i:
                continue
            s = sign(ray.cross(u - v))
            if s == 0:
                grazing = True
            elif s != want:
                ok = False
                break
        if ok and not grazing:
            return i
        if ok and grazing:
            wall_candidate = True
    if wall_candidate:
        raise OnPrimaryWallError(p)
    raise AssertionError(f"no tangent vertex for exterior point {p}")


def outer_step(polygon: NicePolygon, p: Point,
               chirality: Chirality = Chirality.RIGHT) -> Point:
    """One outer billiards reflection: 2v - p through the tangent vertex."""
    v = polygon.vertices[tangent_vertex(polygon, p, chirality)]
    return p.reflect_through(v)


def square_map(polygon: NicePolygon, p: Point) -> Tuple[Point, Tuple[int, int]]:
    """Two reflections: returns (p + 2*(w - v), (v_index, w_index))."""
    return _double_step(polygon, p, Chirality.RIGHT)


def inverse_square_map(polygon: NicePolygon, p: Point) -> Tuple[Point, Tuple[int, int]]:
    """The inverse square map, via the mirrored tangency rule.  The label is
    the backward-partition label of p."""
    return _double_step(polygon, p, Chirality.LEFT)


def _double_step(polygon, p, chirality):
    try:
        vi = tangent_vertex(polygon, p, chirality)
    except OnPrimaryWallError:
        raise UndefinedOnWallError(p, stage=1) from None
    mid = p.reflect_through(polygon.vertices[vi])
    try:
        wi = tangent_vertex(polygon, mid, chirality)
    except OnPrimaryWallError:
        raise UndefinedOnWallError(p, stage=2) from None
    return mid.reflect_through(polygon.vertices[wi]), (vi, wi)


def primary_cone(polygon: NicePolygon, v_index: int,
                 chirality: Chirality = Chirality.RIGHT) -> ConvexRegion:
    """Open cone of points whose tangent vertex is v; its boundary rays are
    the outward extensions of the two edges incident to v (the other
    vertex-line constraints are redundant and get removed)."""
    v = polygon.vertices[v_index]
    sense = Sense.GT if chirality is Chirality.RIGHT else Sense.LT
    hps = []
    for j, u in enumerate(polygon.vertices):
        if j == v_index:
            continue
        d = u - v
        hps.append(HalfPlane(Line(d.y, -d.x, d.y * v.x - d.x * v.y), sense))
    return region(hps)


@dataclass(frozen=True)
class Tile:
    """One open tile of a tangent-pair partition."""

    v_index: int
    w_index: int
    translation: Vec            # the square map moves interior points by this
    region: ConvexRegion
    unbounded: bool
    path_id: Optional[Tuple[int, int]] = None

    @property
    def label(self) -> Tuple[int, int]:
        return (self.v_index, self.w_index)

    def with_path(self, path_id: Tuple[int, int]) -> "Tile":
        return replace(self, path_id=path_id)


class Partition:
    """All nonempty tiles of the square map (or its inverse)."""

    __slots__ = ("polygon", "chirality", "tiles", "by_label")

    def __init__(self, polygon: NicePolygon, chirality: Chirality,
                 tiles: Tuple[Tile, ...]):
        self.polygon = polygon
        self.chirality = chirality
        self.tiles = tiles
        self.by_label: Dict[Tuple[int, int], Tile] = {t.label: t for t in tiles}

    def tile(self, label: Tuple[int, int]) -> Tile:
        return self.by_label[label]

    def relabel(self, tiles: Tuple[Tile, ...]) -> "Partition":
        return Partition(self.polygon, self.chirality, tiles)

    def classify(self, p: Point) -> Tile:
        """Tile containing p, from the dynamic tangent computation; the label
        and the region agree or the partition is inconsistent."""
        if self.chirality is Chirality.RIGHT:
            _, label = square_map(self.polygon, p)
        else:
            _, label = inverse_square_map(self.polygon, p)
        tile = self.by_label[label]
        loc = tile.region.contains(p)
        if loc is not Location.INTERIOR:
            raise AssertionError(
                f"point {p} labels tile {label} but sits on/off it ({loc})")
        return tile


def build_partition(polygon: NicePolygon,
                    chirality: Chirality = Chirality.RIGHT) -> Partition:
    """Construct every nonempty tile cone(v) * (2v - cone(w)) exactly."""
    n = polygon.n
    cones = [primary_cone(polygon, i, chirality) for i in range(n)]
    tiles = []
    for vi in range(n):
        v = polygon.vertices[vi]
        for wi in range(n):
            if wi == vi:
                continue
            r = cones[vi].intersect(cones[wi].point_reflect(v))
            if r.is_empty:
                continue
            w = polygon.vertices[wi]
            tiles.append(Tile(
                v_index=vi,
                w_index=wi,
                translation=(w - v) * 2,
                region=r,
                unbounded=not r.is_bounded(),
            ))
    return Partition(polygon, chirality, tuple(tiles))
