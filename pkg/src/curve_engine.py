"""
Explicit multicurves from colorings, and their normalization.

A component is stored as a cyclic word of crossings.  Each crossing records the
slot through which the curve leaves a triangle and, for traced curves, the
index of the crossing point counted from the start of that slot.  The visit
between two consecutive crossings is the arc inside the triangle entered by the
first and left by the second.  A visit that leaves through the slot it came in
by is a U-turn: the two crossings cancel, and normalization removes them.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .coloring import Coloring, corner_numbers, require_admissible
from .errors import NotNormal
from .surface_model import Corner, Slot, Triangulation

logger = logging.getLogger(__name__)


class Crossing(NamedTuple):
    slot: Slot  # the slot the curve exits through
    point: Optional[int] = None  # index along ``slot`` from its start; None once rewritten


class Visit(NamedTuple):
    triangle: int
    entry: int  # side entered through
    exit: int  # side left through

    @property
    def is_u_turn(self) -> bool:
        return self.entry == self.exit

    @property
    def corner(self) -> Optional[Corner]:
        """The corner this arc cuts off, or None for a U-turn."""
        if (self.entry + 1) % 3 == self.exit:
            return Corner(self.triangle, self.entry)
        if (self.exit + 1) % 3 == self.entry:
            return Corner(self.triangle, self.exit)
        return None


Word = Tuple[Crossing, ...]


@dataclass(frozen=True)
class Component:
    crossings: Word
    visits: Tuple[Visit, ...]
    coloring: Coloring
    peripheral: bool


@dataclass(frozen=True)
class CurveSystem:
    """A multicurve as cyclic crossing words.

    Traced systems also carry the geometry: ``edge_points[e]`` lists, in canonical
    order along edge ``e``, the component passing each point, and
    ``corner_arcs[c]`` lists the component of each arc at corner ``c`` by depth
    (depth 1 first, nearest the puncture).
    """
    triangulation: Triangulation
    words: Tuple[Word, ...]
    edge_points: Optional[Tuple[Tuple[int, ...], ...]] = None
    corner_arcs: Optional[Dict[Corner, Tuple[int, ...]]] = None

    @property
    def traced(self) -> bool:
        return self.edge_points is not None


def visits_of(tri: Triangulation, word: Sequence[Crossing]) -> Tuple[Visit, ...]:
    """Visit ``m`` lies between crossing ``m - 1`` and crossing ``m``."""
    visits = []
    for m, crossing in enumerate(word):
        entered = tri.glued(word[m - 1].slot)
        if entered.triangle != crossing.slot.triangle:
            raise ValueError(f"broken curve word at crossing {m}: entered triangle {entered.triangle}, "
                             f"left triangle {crossing.slot.triangle}")
        visits.append(Visit(crossing.slot.triangle, entered.side, crossing.slot.side))
    return tuple(visits)


def word_coloring(tri: Triangulation, word: Sequence[Crossing]) -> Coloring:
    values = [0] * tri.edge_count
    for crossing in word:
        values[tri.edge_of(crossing.slot)] += 1
    return tuple(values)


def reverse_word(tri: Triangulation, f: Coloring, word: Sequence[Crossing]) -> Word:
    """The same curve traversed the other way."""
    reversed_word = []
    for crossing in reversed(word):
        other = tri.glued(crossing.slot)
        point = None
        if crossing.point is not None:
            point = f[tri.edge_of(crossing.slot)] - 1 - crossing.point
        reversed_word.append(Crossing(other, point))
    return tuple(reversed_word)


def trace(tri: Triangulation, f: Coloring) -> CurveSystem:
    """
    Builds the normal multicurve with coloring ``f``.

    Corner ``i`` arcs use, on side ``i``, the points nearest that side's finish end
    and, on side ``i + 1``, the points nearest its start end; the depth-``d`` arc
    joins the ``d``-th point from the corner on each side.  A point at index ``k``
    from the start of a slot is the point at index ``f(e) - 1 - k`` from the start
    of the glued slot.
    """
    f = require_admissible(tri, f)
    corners = corner_numbers(tri, f)

    # (slot, index) -> (other end of the arc, corner, depth)
    arc_end: Dict[Tuple[Slot, int], Tuple[Tuple[Slot, int], Corner, int]] = {}
    for corner, count in corners.items():
        t, i = corner
        side_a, side_b = Slot(t, i), Slot(t, (i + 1) % 3)
        length_a = f[tri.edge_of(side_a)]
        for depth in range(1, count + 1):
            end_a = (side_a, length_a - depth)
            end_b = (side_b, depth - 1)
            arc_end[end_a] = (end_b, corner, depth)
            arc_end[end_b] = (end_a, corner, depth)

    def canonical_index(slot: Slot, point: int) -> Tuple[int, int]:
        e = tri.edge_of(slot)
        return e, point if slot == tri.canonical_slot(e) else f[e] - 1 - point

    edge_points: List[List[Optional[int]]] = [[None] * v for v in f]
    corner_arcs: Dict[Corner, List[Optional[int]]] = {c: [None] * n for c, n in corners.items()}
    words: List[Word] = []

    for e in range(tri.edge_count):
        start_slot = tri.canonical_slot(e)
        for index in range(f[e]):
            if edge_points[e][index] is not None:
                continue
            component = len(words)
            word = []
            # Enter the canonical slot's triangle through this point.
            slot, point = tri.glued(start_slot), f[e] - 1 - index
            while True:
                ce, ci = canonical_index(slot, point)
                if word and edge_points[ce][ci] == component:
                    break
                edge_points[ce][ci] = component
                word.append(Crossing(slot, point))
                entered = tri.glued(slot)
                entered_point = f[ce] - 1 - point
                (slot, point), corner, depth = arc_end[(entered, entered_point)]
                corner_arcs[corner][depth - 1] = component
            # The word was built crossing-first; rotate so visit m sits before crossing m.
            words.append(tuple(word[1:] + word[:1]))

    logger.debug(f"Traced {f}: {len(words)} component(s)")
    return CurveSystem(
        triangulation=tri,
        words=tuple(words),
        edge_points=tuple(tuple(points) for points in edge_points),
        corner_arcs={c: tuple(arcs) for c, arcs in corner_arcs.items()},
    )


def components(cs: CurveSystem) -> List[Component]:
    tri = cs.triangulation
    all_corners = set(tri.corners())
    result = []
    for word in cs.words:
        visits = visits_of(tri, word)
        visited = {v.corner for v in visits}
        peripheral = len(visits) == tri.link_size and visited == all_corners
        result.append(Component(
            crossings=word,
            visits=visits,
            coloring=word_coloring(tri, word),
            peripheral=peripheral,
        ))
    return result


def normalize_word(tri: Triangulation, word: Sequence[Crossing]) -> Tuple[Word, int]:
    """Cyclically cancels U-turns; returns the reduced word and the number of removals."""
    removals = 0
    stack: List[Crossing] = []
    for crossing in word:
        if stack and crossing.slot == tri.glued(stack[-1].slot):
            stack.pop()
            removals += 1
        else:
            stack.append(crossing)
    lo, hi = 0, len(stack) - 1
    while hi > lo and stack[lo].slot == tri.glued(stack[hi].slot):
        lo += 1
        hi -= 1
        removals += 1
    return tuple(stack[lo:hi + 1]), removals


def normalize_with_count(cs: CurveSystem) -> Tuple[CurveSystem, int]:
    tri = cs.triangulation
    words = []
    total = 0
    for word in cs.words:
        reduced, removals = normalize_word(tri, word)
        total += removals
        if reduced:
            words.append(reduced)
        else:
            logger.warning(f"Normalization collapsed a component of {len(word)} crossings; dropping it")
    if total == 0:
        return cs, 0
    return CurveSystem(triangulation=tri, words=tuple(words)), total


def normalize(cs: CurveSystem) -> CurveSystem:
    return normalize_with_count(cs)[0]


def is_normal(cs: CurveSystem) -> bool:
    tri = cs.triangulation
    for word in cs.words:
        for m, crossing in enumerate(word):
            if crossing.slot == tri.glued(word[m - 1].slot):
                return False
    return True


def coloring_of(cs: CurveSystem) -> Coloring:
    if not is_normal(cs):
        raise NotNormal("curve system still contains a U-turn")
    tri = cs.triangulation
    values = [0] * tri.edge_count
    for word in cs.words:
        for e, v in enumerate(word_coloring(tri, word)):
            values[e] += v
    return tuple(values)
