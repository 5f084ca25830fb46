"""One-stop bundle of the derived structures of a nice polygon."""

from __future__ import annotations

from functools import cached_property

from .billiards import Chirality, Partition, build_partition
from .paths import PathFamily, enumerate_paths, link_partition
from .polygon import NicePolygon
from .strips import PinwheelSystem, build_pinwheel_system


class BilliardModel:
    """Polygon plus lazily built pinwheel system, partitions, and paths.

    The forward partition is always cross-validated against the admissible
    path enumeration (exact label bijection) on construction.
    """

    def __init__(self, polygon: NicePolygon):
        self.polygon = polygon

    @cached_property
    def system(self) -> PinwheelSystem:
        return build_pinwheel_system(self.polygon)

    @cached_property
    def paths(self) -> PathFamily:
        return enumerate_paths(self.system)

    @cached_property
    def partition(self) -> Partition:
        return link_partition(build_partition(self.polygon, Chirality.RIGHT),
                              self.paths)

    @cached_property
    def backward_partition(self) -> Partition:
        return build_partition(self.polygon, Chirality.LEFT)

    @property
    def n(self) -> int:
        return self.polygon.n

    def path_of_tile(self, tile):
        return self.paths.by_id[tile.path_id]

    def path_start(self, p):
        """Start spoke index of the path owning the tile containing p."""
        return self.path_of_tile(self.partition.classify(p)).start
