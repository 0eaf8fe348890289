"""
Least-weight reduction by handleslides, the set of least-weight representatives,
and the equivalence decision for diagrams on the closed surface.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .band_analysis import Band, BandKind, bands
from .coloring import Coloring, antipodal_pushoffs, require_admissible, strip_peripherals, weight
from .commands.slide_commands import SlideBandCommand, StripPeripheralsCommand
from .curve_engine import components, trace
from .diagram_state import DiagramState
from .errors import InvariantViolation
from .slide_engine import SlideResult, all_slides
from .slide_history import SlideHistory
from .surface_model import Triangulation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionStep:
    band: Band
    delta: int
    coloring: Coloring
    plateau: bool = False  # reached through the zero-delta plateau search


@dataclass(frozen=True)
class ReductionTrace:
    initial: Coloring
    stripped: Coloring
    peripheral_count: int
    steps: Tuple[ReductionStep, ...]
    final: Coloring
    plateau_used: bool

    @property
    def path(self) -> Tuple[int, ...]:
        """Band start positions, replayable from the stripped coloring."""
        return tuple(step.band.start for step in self.steps)


@dataclass(frozen=True)
class MinimalSet:
    colorings: Tuple[Coloring, ...]
    moves: Dict[Coloring, Tuple[int, ...]] = field(compare=False)
    weight: int
    reduction: ReductionTrace = field(compare=False)

    @property
    def peripheral_count(self) -> int:
        return self.reduction.peripheral_count

    def path_to(self, target: Coloring) -> Tuple[int, ...]:
        """Slide path from the stripped input to ``target``."""
        return self.reduction.path + self.moves[target]


@dataclass(frozen=True)
class SlideCertificate:
    target: Coloring
    first_path: Tuple[int, ...]
    second_path: Tuple[int, ...]


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    peripheral_counts: Tuple[int, int]
    certificate: Optional[SlideCertificate] = None
    sets_agree: bool = True


@dataclass(frozen=True)
class UniquenessVerdict:
    guaranteed: bool
    reason: Optional[str] = None
    band: Optional[Band] = None
    edge: Optional[int] = None

    def __str__(self):
        return "guaranteed_unique" if self.guaranteed else f"not_guaranteed({self.reason})"


def _zero_delta_closure(tri: Triangulation, start: Coloring):
    """
    Breadth-first search over zero-delta slides from ``start``.

    Yields ``(coloring, path, slides)`` for every reached coloring, where ``path``
    lists the ``(band, result)`` pairs leading there and ``slides`` is its
    ``all_slides`` list.
    """
    queue = deque([(start, ())])
    seen = {start}
    while queue:
        current, path = queue.popleft()
        slides = all_slides(tri, current)
        yield current, path, slides
        for band, result in slides:
            if result.delta == 0 and result.coloring not in seen:
                seen.add(result.coloring)
                queue.append((result.coloring, path + ((band, result),)))


def _best_descent(slides: Sequence[Tuple[Band, SlideResult]]) -> Optional[Tuple[Band, SlideResult]]:
    descents = [(result.delta, band.start, band, result) for band, result in slides if result.delta < 0]
    if not descents:
        return None
    _, _, band, result = min(descents, key=lambda d: (d[0], d[1]))
    return band, result


def reduce(tri: Triangulation, f: Coloring) -> ReductionTrace:
    """
    Greedy descent to least weight.

    Each round takes the slide with the most negative measured delta (ties: the
    smallest band start).  When no slide descends, the zero-delta plateau is
    searched for a coloring that does; the reduction stops when the plateau has
    none.
    """
    f = require_admissible(tri, f)
    stripped, count = strip_peripherals(tri, f)
    current = stripped
    steps: List[ReductionStep] = []
    plateau_used = False

    while True:
        descent = None
        for _, path, slides in _zero_delta_closure(tri, current):
            descent = _best_descent(slides)
            if descent is not None:
                break
        if descent is None:
            break
        if path:
            plateau_used = True
            logger.warning(f"Plateau search fired at {current}: descending after {len(path)} zero-delta slide(s)")
            for band, result in path:
                steps.append(ReductionStep(band, result.delta, result.coloring, plateau=True))
        band, result = descent
        steps.append(ReductionStep(band, result.delta, result.coloring, plateau=bool(path)))
        current = result.coloring

    logger.info(f"Reduced {f} to {current} in {len(steps)} step(s) "
                f"(weight {weight(f)} -> {weight(current)}, {count} peripheral)")
    return ReductionTrace(
        initial=f,
        stripped=stripped,
        peripheral_count=count,
        steps=tuple(steps),
        final=current,
        plateau_used=plateau_used,
    )


def minimal_set(tri: Triangulation, f: Coloring) -> MinimalSet:
    """All least-weight colorings reachable from the reduced one by zero-delta slides."""
    reduction = reduce(tri, f)
    least = weight(reduction.final)
    moves: Dict[Coloring, Tuple[int, ...]] = {}
    for coloring, path, slides in _zero_delta_closure(tri, reduction.final):
        if weight(coloring) != least or _best_descent(slides) is not None:
            logger.error(f"Closure member {coloring} of {reduction.final} is not a least-weight coloring")
            raise InvariantViolation(f"closure of {reduction.final} contains non-minimal {coloring}")
        moves[coloring] = tuple(band.start for band, _ in path)
    members = tuple(sorted(moves))
    logger.info(f"Minimal set of {f}: {len(members)} coloring(s) of weight {least}")
    return MinimalSet(colorings=members, moves=moves, weight=least, reduction=reduction)


def equivalent(tri: Triangulation, f: Coloring, g: Coloring) -> EquivalenceVerdict:
    """Decides whether ``f`` and ``g`` represent the same diagram on the closed surface."""
    first, second = minimal_set(tri, f), minimal_set(tri, g)
    counts = (first.peripheral_count, second.peripheral_count)
    if counts[0] != counts[1]:
        return EquivalenceVerdict(equivalent=False, peripheral_counts=counts)
    common = set(first.colorings) & set(second.colorings)
    if not common:
        return EquivalenceVerdict(equivalent=False, peripheral_counts=counts)

    sets_agree = first.colorings == second.colorings
    if not sets_agree:
        logger.error(f"Minimal sets of {f} and {g} intersect but differ: "
                     f"{first.colorings} vs {second.colorings}")
    target = min(common)
    certificate = SlideCertificate(
        target=target,
        first_path=first.path_to(target),
        second_path=second.path_to(target),
    )
    return EquivalenceVerdict(equivalent=True, peripheral_counts=counts,
                              certificate=certificate, sets_agree=sets_agree)


def unique_minimizer(tri: Triangulation, f: Coloring) -> UniquenessVerdict:
    """
    Reports whether uniqueness of the least-weight representative is guaranteed.

    Non-uniqueness needs a maximal half band, or a component that is a pushoff of
    an antipodal edge.  Finding either only means uniqueness is not guaranteed.
    """
    final = reduce(tri, f).final
    for band in bands(tri, final) or ():
        if band.kind is BandKind.HALF:
            return UniquenessVerdict(False, reason=f"half band at position {band.start}", band=band)
    pushoffs = antipodal_pushoffs(tri)
    if pushoffs:
        found = {c.coloring for c in components(trace(tri, final))}
        for edge, colorings in pushoffs.items():
            if found & colorings:
                return UniquenessVerdict(False, reason=f"antipodal-pushoff component: edge {edge}", edge=edge)
    return UniquenessVerdict(True)


def replay_path(tri: Triangulation, f: Coloring, starts: Sequence[int],
                history: Optional[SlideHistory] = None, rewind: int = 0) -> Coloring:
    """
    Strips ``f`` and applies the slides at the listed band starts in order.

    ``rewind`` then takes back that many of the latest commands, the peripheral
    strip being the oldest.  Pass ``history`` to observe the commands through
    its signals.
    """
    state = DiagramState(tri, require_admissible(tri, f))
    history = history if history is not None else SlideHistory()
    history.execute_command(StripPeripheralsCommand(state))
    for start in starts:
        history.execute_command(SlideBandCommand(state, start))
    if rewind:
        history.rewind(rewind)
    return state.coloring
