"""Gaps and maximal bands of corner numbers around the puncture."""
import enum
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .coloring import Coloring, link_corner_numbers
from .surface_model import Triangulation

logger = logging.getLogger(__name__)


class BandKind(enum.Enum):
    LONG = "long"
    SHORT = "short"
    HALF = "half"
    EQUATORIAL = "equatorial"  # exactly half the corners


@dataclass(frozen=True)
class Band:
    """A maximal cyclic run of positive corner numbers in the vertex link."""
    start: int
    length: int
    before_gap: int
    after_gap: int
    kind: BandKind

    def positions(self, link_size: int) -> Tuple[int, ...]:
        return tuple((self.start + m) % link_size for m in range(self.length))

    @property
    def end(self) -> int:
        """Link position of the last corner, before reduction modulo the link size."""
        return self.start + self.length - 1

    def __str__(self):
        return f"{self.kind.value} band at {self.start} (k={self.length}, gaps {self.before_gap}/{self.after_gap})"


def classify(tri: Triangulation, band: Band) -> BandKind:
    return _classify(tri, band.length, band.before_gap, band.after_gap)


def _classify(tri: Triangulation, length: int, before_gap: int, after_gap: int) -> BandKind:
    link = tri.link
    half = link.size // 2
    if before_gap != after_gap and link.are_antipodal(before_gap, after_gap):
        return BandKind.HALF
    if length > half:
        return BandKind.LONG
    if length == half:
        return BandKind.EQUATORIAL
    return BandKind.SHORT


def bands(tri: Triangulation, f: Coloring) -> Optional[List[Band]]:
    """
    All maximal bands of ``f`` ordered by start position.

    Returns None (the no-gaps marker) when every corner number is positive, which
    means a peripheral component is present.
    """
    numbers = link_corner_numbers(tri, f)
    n = len(numbers)
    if min(numbers) >= 1:
        return None
    found = []
    for start in range(n):
        if numbers[start] == 0 or numbers[start - 1] != 0:
            continue
        length = 0
        while numbers[(start + length) % n] > 0:
            length += 1
        before_gap, after_gap = (start - 1) % n, (start + length) % n
        found.append(Band(start, length, before_gap, after_gap,
                          _classify(tri, length, before_gap, after_gap)))
    return found


def gaps(tri: Triangulation, f: Coloring) -> List[int]:
    return [p for p, v in enumerate(link_corner_numbers(tri, f)) if v == 0]


def find_band(tri: Triangulation, f: Coloring, start: int) -> Optional[Band]:
    for band in bands(tri, f) or ():
        if band.start == start:
            return band
    return None
