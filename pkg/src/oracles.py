"""
Independent checks on the reducer, and a seeded fuzzer.

``bfs_closure`` explores every slide within a weight cap instead of descending
greedily.  ``torus_slope`` classifies punctured-torus diagrams by slope.
"""
import logging
import random
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet

from .band_analysis import bands
from .coloring import Coloring, require_admissible, strip_peripherals, weight
from .commands.slide_commands import SlideBandCommand, StripPeripheralsCommand
from .curve_engine import components, trace
from .diagram_state import DiagramState
from .errors import CapTooSmall, NotTorusFixture, PeripheralPresent
from .slide_engine import all_slides
from .slide_history import SlideHistory
from .surface_model import Slot, Triangulation, punctured_torus

logger = logging.getLogger(__name__)


def bfs_closure(tri: Triangulation, f: Coloring, weight_cap: int) -> FrozenSet[Coloring]:
    """All stripped colorings reachable from ``f`` by slides that stay within ``weight_cap``."""
    f = require_admissible(tri, f)
    if weight_cap < weight(f):
        raise CapTooSmall(f"cap {weight_cap} is below the weight {weight(f)} of {f}")
    start, _ = strip_peripherals(tri, f)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for _, result in all_slides(tri, current):
            if weight(result.coloring) <= weight_cap and result.coloring not in seen:
                seen.add(result.coloring)
                queue.append(result.coloring)
    logger.info(f"Closure of {start} under cap {weight_cap}: {len(seen)} coloring(s)")
    return frozenset(seen)


def closures_meet(tri: Triangulation, f: Coloring, g: Coloring, weight_cap: int) -> bool:
    """Whether the bounded closures of ``f`` and ``g`` share a coloring, peripheral counts aside."""
    return bool(bfs_closure(tri, f, weight_cap) & bfs_closure(tri, g, weight_cap))


@dataclass(frozen=True)
class TorusSlope:
    p: int
    q: int
    multiplicity: int


# Signed crossings: leaving triangle 0 through an edge counts +1, leaving triangle 1 counts -1.
_A_SLOTS = {Slot(0, 0): 1, Slot(1, 0): -1}
_B_SLOTS = {Slot(0, 1): 1, Slot(1, 1): -1}


def torus_slope(tri: Triangulation, f: Coloring) -> TorusSlope:
    """
    Slope and multiplicity of a diagram on the standard punctured torus.

    The slope ``(p, q)`` counts signed crossings with edges a and b along one
    component, normalized so that ``p > 0``, or ``p == 0`` and ``q > 0``.
    """
    if tri != punctured_torus():
        raise NotTorusFixture("torus_slope needs the standard punctured torus triangulation")
    f = require_admissible(tri, f)
    if not any(f):
        return TorusSlope(0, 0, 0)
    if bands(tri, f) is None:
        raise PeripheralPresent(f"{f} has a peripheral component; strip it first")

    slopes = []
    for component in components(trace(tri, f)):
        p = sum(_A_SLOTS.get(c.slot, 0) for c in component.crossings)
        q = sum(_B_SLOTS.get(c.slot, 0) for c in component.crossings)
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        slopes.append((p, q))
    if len(set(slopes)) > 1:
        logger.warning(f"Components of {f} disagree on slope: {slopes}")
    p, q = slopes[0]
    return TorusSlope(p, q, len(slopes))


def random_representative(tri: Triangulation, f: Coloring, steps: int, seed: int) -> Coloring:
    """
    Applies ``steps`` slides on bands picked by a generator seeded with ``seed``.

    Peripheral components are stripped before sliding and added back afterwards,
    so the result represents the same diagram as ``f``.
    """
    rng = random.Random(seed)
    state = DiagramState(tri, f)
    history = SlideHistory()
    history.execute_command(StripPeripheralsCommand(state))
    for _ in range(steps):
        available = bands(tri, state.coloring)
        if not available:
            break
        history.execute_command(SlideBandCommand(state, rng.choice(available).start))
    logger.debug(f"Random representative of {f} (seed {seed}): {history.descriptions()}")
    return state.full_coloring()
