"""Admissible spoke paths and their link to the forward partition.

A path starts at a spoke, traverses spokes in increasing cyclic index order,
skips over the special spokes strictly between its endpoints, and stops after
an odd number of traversed spokes without winding fully around the polygon.
The walk below is forced: after settling index j the current vertex is the
head of spoke j, and the next spoke is incident to it either at its tail
(ordinary: traverse forward) or at its head (special: skip, or end there by
traversing it backward).

Each emitted path is validated against the telescoping displacement identity;
matching the paths one-to-one with the nonempty partition tiles happens in
`link_partition`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .billiards import Partition, Tile
from .errors import IndexOutOfRangeError, NotAdmissiblePairError
from .geometry import ConvexRegion, Point, Vec
from .strips import PinwheelSystem

ZERO_VEC = Vec(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class AdmissiblePath:
    """Path a -> b with its per-spoke traversal vectors.

    steps maps each lifted index in [start, end_lifted] to the vector from the
    traversal's entry endpoint of that spoke to its exit endpoint; skipped
    (special interior) spokes map to the zero vector.  Twice each step is the
    translation the square map contributes at that spoke.
    """

    start: int                         # a, reduced index
    end_lifted: int                    # b', start <= b' < start + n
    n: int
    involved: Tuple[int, ...]          # lifted indices actually traversed
    steps: Dict[int, Vec]
    first_vertex_index: int
    last_vertex_index: int
    first_vertex: Point
    last_vertex: Point
    terminal_special: bool

    @property
    def end(self) -> int:
        return self.end_lifted % self.n

    @property
    def path_id(self) -> Tuple[int, int]:
        return (self.start, self.end_lifted)

    @property
    def length(self) -> int:
        return len(self.involved)

    @property
    def span(self) -> int:
        return self.end_lifted - self.start

    def display(self) -> str:
        return f"{self.start + 1}->{self.end + 1}"

    def endpoint_pair(self) -> Tuple[int, int]:
        return (self.first_vertex_index, self.last_vertex_index)

    def displacement(self) -> Vec:
        """Sum of twice the step vectors; telescopes to 2*(w - v)."""
        total = None
        for i in range(self.start, self.end_lifted + 1):
            term = self.steps[i] * 2
            total = term if total is None else total + term
        return total

    def prefix_sum(self, k: int) -> Vec:
        """Sum of twice the step vectors for indices start..k."""
        if not (self.start <= k <= self.end_lifted):
            raise IndexOutOfRangeError(
                f"index {k} outside [{self.start}, {self.end_lifted}]")
        total = self.steps[self.start] * 2
        for i in range(self.start + 1, k + 1):
            total = total + self.steps[i] * 2
        return total


class PathFamily:
    """All admissible paths of a pinwheel system, with endpoint lookup."""

    __slots__ = ("system", "paths", "by_id", "by_endpoints")

    def __init__(self, system: PinwheelSystem, paths: Tuple[AdmissiblePath, ...]):
        self.system = system
        self.paths = paths
        self.by_id = {p.path_id: p for p in paths}
        self.by_endpoints: Dict[Tuple[int, int], AdmissiblePath] = {}
        for p in paths:
            self.by_endpoints[p.endpoint_pair()] = p
            if p.length == 1:
                # a single spoke owns both unbounded tiles: (v,w) and (w,v)
                rev = (p.last_vertex_index, p.first_vertex_index)
                self.by_endpoints[rev] = p

    def path_for_label(self, label: Tuple[int, int]) -> AdmissiblePath:
        try:
            return self.by_endpoints[label]
        except KeyError:
            raise NotAdmissiblePairError(label) from None

    def from_start(self, a: int) -> List[AdmissiblePath]:
        return [p for p in self.paths if p.start == a % self.system.n]

    def maximal_from(self, a: int) -> AdmissiblePath:
        return max(self.from_start(a), key=lambda p: p.end_lifted)


def enumerate_paths(system: PinwheelSystem) -> PathFamily:
    """Walk every start spoke, emitting odd non-wrapping prefixes."""
    n = system.n
    out: List[AdmissiblePath] = []
    for a in range(n):
        out.extend(_walk_from(system, a))
    family = PathFamily(system, tuple(out))
    for p in family.paths:
        expect = (p.last_vertex - p.first_vertex) * 2
        if p.displacement() != expect:
            raise AssertionError(f"displacement identity fails for {p.display()}")
    return family


def _walk_from(system: PinwheelSystem, a: int) -> List[AdmissiblePath]:
    n = system.n
    first = system.spoke(a)
    v0_index = first.tail_index
    paths: List[AdmissiblePath] = []

    def emit(end_lifted, involved, steps, last_index, last_point, terminal_special):
        paths.append(AdmissiblePath(
            start=a, end_lifted=end_lifted, n=n,
            involved=tuple(involved), steps=dict(steps),
            first_vertex_index=v0_index, last_vertex_index=last_index,
            first_vertex=first.tail, last_vertex=last_point,
            terminal_special=terminal_special,
        ))

    involved = [a]
    steps: Dict[int, Vec] = {a: first.head - first.tail}
    current_index, current_point = first.head_index, first.head
    emit(a, involved, steps, current_index, current_point, False)

    for j in range(a + 1, a + n):
        s = system.spoke(j)
        if s.tail_index == current_index:
            # ordinary continuation; the prefix ending here traverses forward
            if s.special:
                raise AssertionError(
                    f"special spoke {j % n} met at its tail in walk from {a}")
            involved.append(j)
            steps[j] = s.head - s.tail
            current_index, current_point = s.head_index, s.head
            if len(involved) % 2 == 1:
                if current_index == v0_index:
                    break  # wrapped all the way around the polygon
                emit(j, involved, steps, current_index, current_point, False)
        elif s.head_index == current_index:
            # special spoke: may terminate the path backward, else is skipped
            if not s.special:
                raise AssertionError(
                    f"ordinary spoke {j % n} met at its head in walk from {a}")
            if (len(involved) + 1) % 2 == 1:
                if s.tail_index == v0_index:
                    break
                end_steps = dict(steps)
                end_steps[j] = s.tail - s.head
                emit(j, involved + [j], end_steps, s.tail_index, s.tail, True)
            steps[j] = ZERO_VEC  # skipped: the current vertex stays put
        else:
            raise AssertionError(
                f"spoke {j % n} not incident to the walk vertex from start {a}")
    return paths


def link_partition(partition: Partition, family: PathFamily) -> Partition:
    """Attach path ids to tiles; exact one-to-one label matching required."""
    tile_labels = set(partition.by_label)
    path_labels = set()
    for p in family.paths:
        path_labels.add(p.endpoint_pair())
        if p.length == 1:
            path_labels.add((p.last_vertex_index, p.first_vertex_index))
    if tile_labels != path_labels:
        missing = sorted(path_labels - tile_labels)
        extra = sorted(tile_labels - path_labels)
        raise AssertionError(
            f"path/tile label mismatch: paths-without-tiles={missing}, "
            f"tiles-without-paths={extra}")
    linked = tuple(t.with_path(family.by_endpoints[t.label].path_id)
                   for t in partition.tiles)
    return partition.relabel(linked)


def path_tile(partition: Partition, path: AdmissiblePath) -> Tile:
    """The tile of a path; for single-spoke paths, the one labelled (v, w)."""
    return partition.by_label[path.endpoint_pair()]


def tile_translate(partition: Partition, path: AdmissiblePath, k: int) -> ConvexRegion:
    """The path's tile translated by the doubled step prefix through index k."""
    tile = path_tile(partition, path)
    return tile.region.translate(path.prefix_sum(k))


def apex_sequence(path: AdmissiblePath) -> Tuple[Point, ...]:
    """Points v, v + 2*W_a, v + 2*(W_a + W_{a+1}), ...; entry i >= 1 is the
    prefix through lifted index start + i - 1."""
    pts = [path.first_vertex]
    acc: Optional[Vec] = None
    for i in range(path.start, path.end_lifted + 1):
        term = path.steps[i] * 2
        acc = term if acc is None else acc + term
        pts.append(path.first_vertex + acc)
    return tuple(pts)
