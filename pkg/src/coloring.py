"""
Admissible colorings: one nonnegative integer per edge, the normal coordinates
of a simple diagram.
"""
import enum
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Optional, Sequence, Tuple

from .errors import LengthMismatch, NotAdmissible
from .surface_model import Corner, Triangulation, antipodal_edges

logger = logging.getLogger(__name__)

Coloring = Tuple[int, ...]
CornerNumbers = Dict[Corner, int]


class PushoffSide(enum.Enum):
    CCW = "ccw"  # link positions after the canonical end
    CW = "cw"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    kind: str  # "ok", "parity_violation" or "negative_corner"
    triangle: Optional[int] = None
    corner: Optional[Corner] = None

    @property
    def ok(self) -> bool:
        return self.kind == "ok"

    def __str__(self):
        if self.kind == "parity_violation":
            return f"parity_violation(triangle {self.triangle})"
        if self.kind == "negative_corner":
            return f"negative_corner(corner {tuple(self.corner)})"
        return "ok"


OK = AdmissibilityVerdict("ok")


def _raw_corner(tri: Triangulation, values: Sequence[int], corner: Corner) -> int:
    sides = tri.triangle_edges(corner.triangle)
    i = corner.corner
    return values[sides[i]] + values[sides[(i + 1) % 3]] - values[sides[(i + 2) % 3]]


def check_admissible(tri: Triangulation, values: Sequence[int]) -> AdmissibilityVerdict:
    """Checks even triangle sums and nonnegative corner numbers, triangle by triangle."""
    if len(values) != tri.edge_count:
        raise LengthMismatch(f"coloring has {len(values)} values, triangulation has {tri.edge_count} edges")
    for t in range(tri.triangle_count):
        if sum(values[e] for e in tri.triangle_edges(t)) % 2:
            return AdmissibilityVerdict("parity_violation", triangle=t)
        for i in range(3):
            if _raw_corner(tri, values, Corner(t, i)) < 0:
                return AdmissibilityVerdict("negative_corner", triangle=t, corner=Corner(t, i))
    return OK


def require_admissible(tri: Triangulation, values: Sequence[int]) -> Coloring:
    """Returns ``values`` as a coloring, raising NotAdmissible with the verdict otherwise."""
    verdict = check_admissible(tri, values)
    if not verdict.ok:
        raise NotAdmissible(verdict)
    return tuple(int(v) for v in values)


def corner_numbers(tri: Triangulation, f: Coloring) -> CornerNumbers:
    return {c: _raw_corner(tri, f, c) // 2 for c in tri.corners()}


def link_corner_numbers(tri: Triangulation, f: Coloring) -> Tuple[int, ...]:
    """Corner numbers listed in vertex-link order."""
    return tuple(_raw_corner(tri, f, c) // 2 for c in tri.link.corners)


def weight(f: Sequence[int]) -> int:
    return sum(f)


def strip_peripherals(tri: Triangulation, f: Coloring) -> Tuple[Coloring, int]:
    """
    Removes puncture-parallel components.

    Each one passes every corner once and crosses every edge twice, so while every
    corner number is positive we subtract 2 from every edge.
    """
    count = 0
    current = tuple(f)
    while any(current) and min(link_corner_numbers(tri, current)) >= 1:
        current = tuple(v - 2 for v in current)
        count += 1
    if count:
        logger.debug(f"Stripped {count} peripheral component(s): {f} -> {current}")
    return current, count


def pushoff_coloring(tri: Triangulation, edge: int, side: PushoffSide = PushoffSide.CCW) -> Coloring:
    """Coloring of the closed curve obtained by closing ``edge`` through the puncture."""
    link = tri.link
    n = link.size
    p, q = link.edge_positions[edge]
    if side is PushoffSide.CCW:
        between = range(p + 1, q)
    else:
        between = range(q + 1, p + n)
    values = [0] * tri.edge_count
    for k in between:
        values[link.crossings[k % n]] += 1
    return tuple(values)


def antipodal_pushoffs(tri: Triangulation) -> Dict[int, FrozenSet[Coloring]]:
    return {e: frozenset(pushoff_coloring(tri, e, side) for side in PushoffSide)
            for e in sorted(antipodal_edges(tri))}


def enumerate_admissible(tri: Triangulation, max_weight: int) -> Iterator[Coloring]:
    """Yields every admissible coloring of weight at most ``max_weight``, lexicographically."""
    count = tri.edge_count
    values = [0] * count

    def fill(index: int, budget: int):
        if index == count:
            if check_admissible(tri, values).ok:
                yield tuple(values)
            return
        for v in range(budget + 1):
            values[index] = v
            yield from fill(index + 1, budget - v)
        values[index] = 0

    yield from fill(0, max_weight)
