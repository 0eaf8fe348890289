"""
Combinatorial ideal triangulations of a once-punctured oriented surface.

A triangulation is a rotation system: T triangles whose sides are listed
counterclockwise, glued in pairs.  Side ``s`` of a triangle runs from its
vertex ``s`` to vertex ``s + 1``; corner ``i`` sits between sides ``i`` and
``i + 1``.  Gluing two sides identifies them with opposite orientations, so
every triangulation built here is oriented.

Walking around the puncture, the corner after ``(t, i)`` is the corner
``(t', j)`` where ``(t', j)`` is the slot glued to ``(t, i + 1)``; between the
two we cross one end of that edge.  With a single puncture this walk is one
cycle through all 3T corners (the vertex link).
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    BadCount,
    DuplicateSlot,
    FoldedTriangle,
    MultiplePunctures,
    SelfGluing,
    SlotOutOfRange,
)

logger = logging.getLogger(__name__)


class Slot(NamedTuple):
    """One side of one triangle, before gluing."""
    triangle: int
    side: int


class Corner(NamedTuple):
    """Corner ``corner`` of a triangle: between sides ``corner`` and ``corner + 1``."""
    triangle: int
    corner: int


@dataclass(frozen=True)
class VertexLink:
    """Cyclic order of corners and edge ends around the puncture.

    Crossing ``k`` separates corner ``k`` from corner ``k + 1``; it is the end of
    the edge glued along ``exit_slots[k]``, the side through which the walk
    leaves corner ``k``.
    """
    corners: Tuple[Corner, ...]
    crossings: Tuple[int, ...]
    exit_slots: Tuple[Slot, ...]
    corner_position: Dict[Corner, int] = field(compare=False, repr=False)
    edge_positions: Tuple[Tuple[int, int], ...] = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.corners)

    def distance(self, p: int, q: int) -> int:
        """Cyclic distance between two link positions."""
        d = (q - p) % self.size
        return min(d, self.size - d)

    def are_antipodal(self, p: int, q: int) -> bool:
        """True when link positions ``p`` and ``q`` are half the link apart."""
        return (q - p) % self.size == self.size // 2

    def position_of(self, corner: Corner) -> int:
        return self.corner_position[corner]


@dataclass(frozen=True)
class Triangulation:
    triangle_count: int
    edges: Tuple[Tuple[Slot, Slot], ...]
    gluing: Dict[Slot, Slot] = field(compare=False, repr=False)
    slot_edge: Dict[Slot, int] = field(compare=False, repr=False)
    link: VertexLink = field(compare=False, repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def link_size(self) -> int:
        return 3 * self.triangle_count

    @property
    def euler_characteristic(self) -> int:
        """Euler characteristic of the punctured surface, -T/2."""
        return -self.triangle_count // 2

    @property
    def genus(self) -> int:
        return (self.triangle_count + 2) // 4

    def glued(self, slot: Slot) -> Slot:
        return self.gluing[slot]

    def edge_of(self, slot: Slot) -> int:
        return self.slot_edge[slot]

    def triangle_edges(self, triangle: int) -> Tuple[int, int, int]:
        return tuple(self.slot_edge[Slot(triangle, s)] for s in range(3))

    def canonical_slot(self, edge: int) -> Slot:
        """The side of ``edge`` whose starting end has the smaller link position.

        Crossing points along an edge are numbered from that end.
        """
        first, _ = self.link.edge_positions[edge]
        return self.link.exit_slots[first]

    def corners(self) -> Iterable[Corner]:
        for t in range(self.triangle_count):
            for i in range(3):
                yield Corner(t, i)


def _walk_link(triangle_count: int, gluing: Dict[Slot, Slot]) -> List[List[Corner]]:
    """Splits the corner successor permutation into its cycles."""
    seen = set()
    cycles = []
    for t in range(triangle_count):
        for i in range(3):
            start = Corner(t, i)
            if start in seen:
                continue
            cycle = []
            corner = start
            while corner not in seen:
                seen.add(corner)
                cycle.append(corner)
                nxt = gluing[Slot(corner.triangle, (corner.corner + 1) % 3)]
                corner = Corner(nxt.triangle, nxt.side)
            cycles.append(cycle)
    return cycles


def _build_link(cycle: List[Corner], slot_edge: Dict[Slot, int], edge_count: int) -> VertexLink:
    # Lexicographically least corner first; the walk from (0, 0) gives it.
    corners = tuple(cycle)
    exit_slots = tuple(Slot(c.triangle, (c.corner + 1) % 3) for c in corners)
    crossings = tuple(slot_edge[s] for s in exit_slots)
    ends: List[List[int]] = [[] for _ in range(edge_count)]
    for k, e in enumerate(crossings):
        ends[e].append(k)
    return VertexLink(
        corners=corners,
        crossings=crossings,
        exit_slots=exit_slots,
        corner_position={c: k for k, c in enumerate(corners)},
        edge_positions=tuple((p[0], p[1]) for p in ends),
    )


def build_triangulation(gluing_pairs: Sequence[Tuple[Sequence[int], Sequence[int]]],
                        triangle_count: Optional[int] = None) -> Triangulation:
    """
    Validates a list of glued slot pairs and returns the triangulation.

    Args:
        gluing_pairs: Pairs ``((t, s), (t', s'))``.  Edge ``e`` is the ``e``-th pair.
        triangle_count: Number of triangles; inferred from the largest index if omitted.

    Raises:
        SlotOutOfRange, DuplicateSlot, SelfGluing, FoldedTriangle, BadCount,
        MultiplePunctures.
    """
    if not gluing_pairs:
        raise BadCount("a triangulation needs at least one gluing")

    pairs = []
    for index, (first, second) in enumerate(gluing_pairs):
        a, b = Slot(*map(int, first)), Slot(*map(int, second))
        for slot in (a, b):
            if slot.triangle < 0 or slot.side not in (0, 1, 2):
                raise SlotOutOfRange(f"gluing {index}: invalid slot {tuple(slot)}")
        pairs.append((a, b))

    if triangle_count is None:
        triangle_count = 1 + max(max(a.triangle, b.triangle) for a, b in pairs)
    for index, (a, b) in enumerate(pairs):
        if a.triangle >= triangle_count or b.triangle >= triangle_count:
            raise SlotOutOfRange(f"gluing {index}: triangle index beyond {triangle_count - 1}")

    gluing: Dict[Slot, Slot] = {}
    slot_edge: Dict[Slot, int] = {}
    for index, (a, b) in enumerate(pairs):
        if a == b:
            raise SelfGluing(f"gluing {index}: slot {tuple(a)} glued to itself")
        for slot in (a, b):
            if slot in gluing:
                raise DuplicateSlot(f"gluing {index}: slot {tuple(slot)} already glued")
        if a.triangle == b.triangle:
            raise FoldedTriangle(f"gluing {index}: two sides of triangle {a.triangle} glued together")
        gluing[a], gluing[b] = b, a
        slot_edge[a] = slot_edge[b] = index

    if triangle_count % 2 or 2 * len(pairs) != 3 * triangle_count:
        raise BadCount(f"{len(pairs)} gluings for {triangle_count} triangles; expected {3 * triangle_count / 2:g}")

    cycles = _walk_link(triangle_count, gluing)
    if len(cycles) != 1:
        raise MultiplePunctures(f"vertex link splits into {len(cycles)} cycles of lengths "
                                f"{[len(c) for c in cycles]}")

    link = _build_link(cycles[0], slot_edge, len(pairs))
    tri = Triangulation(
        triangle_count=triangle_count,
        edges=tuple(pairs),
        gluing=gluing,
        slot_edge=slot_edge,
        link=link,
    )
    logger.debug(f"Built triangulation: T={triangle_count}, E={len(pairs)}, genus {tri.genus}")
    return tri


def vertex_link(tri: Triangulation) -> VertexLink:
    return tri.link


def antipodal_edges(tri: Triangulation) -> FrozenSet[int]:
    """Edges whose two ends are exactly half the link apart."""
    link = tri.link
    return frozenset(e for e, (p, q) in enumerate(link.edge_positions) if link.are_antipodal(p, q))


def antipodal_corners(tri: Triangulation, first: Corner, second: Corner) -> bool:
    link = tri.link
    return link.are_antipodal(link.position_of(first), link.position_of(second))


def standard_surface(genus: int) -> Triangulation:
    """
    Once-punctured genus-``genus`` surface from a 4g-gon with boundary word
    a1 b1 a1^-1 b1^-1 ..., fan-triangulated from polygon vertex 0.

    Edges are listed as a1, b1, a2, b2, ... followed by the 4g - 3 diagonals.
    """
    if genus < 1:
        raise ValueError(f"genus must be at least 1, got {genus}")
    sides = 4 * genus
    last = sides - 3  # index of the last fan triangle

    def polygon_slot(k: int) -> Slot:
        # Fan triangle t has vertices (P0, P_{t+1}, P_{t+2}); polygon side k is P_k -> P_{k+1}.
        if k == 0:
            return Slot(0, 0)
        if k == sides - 1:
            return Slot(last, 2)
        return Slot(k - 1, 1)

    pairs = []
    for handle in range(genus):
        base = 4 * handle
        pairs.append((polygon_slot(base), polygon_slot(base + 2)))
        pairs.append((polygon_slot(base + 1), polygon_slot(base + 3)))
    for t in range(last):
        pairs.append((Slot(t, 2), Slot(t + 1, 0)))
    return build_triangulation(pairs, triangle_count=sides - 2)


# The punctured torus used throughout the tests and the torus oracle.
PT_GLUING = (((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2)))


def punctured_torus() -> Triangulation:
    return build_triangulation(PT_GLUING)
