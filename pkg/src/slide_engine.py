"""
Handleslides across the puncture.

The innermost strand of a maximal band (the depth-1 arcs at its corners) is cut
out together with its two end crossings and replaced by a path running the
other way around the puncture, through the complementary corners, inside every
other arc there.  The rewritten word is then normalized.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .band_analysis import Band, bands
from .coloring import Coloring, check_admissible, require_admissible, weight
from .curve_engine import Crossing, CurveSystem, coloring_of, normalize_with_count, reverse_word, trace
from .errors import BandNotMaximal, InvariantViolation, PeripheralPresent
from .surface_model import Triangulation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SlideResult:
    band: Band
    coloring: Coloring
    delta: int
    cascades: int  # normalization removals after the rewrite

    @property
    def bound(self) -> int:
        """Weight change before normalization, N - 2k - 2."""
        return self.delta + 2 * self.cascades


def _locate(cs: CurveSystem) -> Dict[Crossing, Tuple[int, int]]:
    return {c: (w, m) for w, word in enumerate(cs.words) for m, c in enumerate(word)}


def _slide_traced(tri: Triangulation, f: Coloring, cs: CurveSystem,
                  where: Dict[Crossing, Tuple[int, int]], band: Band) -> SlideResult:
    link = tri.link
    n = link.size
    i, k = band.start, band.length
    x_slot = link.exit_slots[(i - 1) % n]
    x_forward = Crossing(x_slot, 0)
    x_backward = Crossing(tri.glued(x_slot), f[tri.edge_of(x_slot)] - 1)

    if x_forward in where:
        index, m = where[x_forward]
        word = cs.words[index]
    elif x_backward in where:
        index, _ = where[x_backward]
        word = reverse_word(tri, f, cs.words[index])
        m = word.index(x_forward)
    else:
        raise InvariantViolation(f"no strand enters {band}")

    word = word[m:] + word[:m]
    if len(word) <= k:
        raise InvariantViolation(f"strand of {band} closes up on itself")
    for r in range(k + 1):
        expected = Crossing(link.exit_slots[(i - 1 + r) % n], 0)
        if word[r] != expected:
            raise InvariantViolation(f"innermost strand of {band} leaves the band at step {r}")

    # Back around the puncture: crossings i-2, i-3, ..., j+1 traversed backwards.
    path = tuple(Crossing(tri.glued(link.exit_slots[(i - 2 - r) % n]))
                 for r in range(n - k - 1))
    rewritten = path + word[k + 1:]

    words = list(cs.words)
    if rewritten:
        words[index] = rewritten
    else:
        logger.warning(f"Slide of {band} left an empty component; dropping it")
        del words[index]
    normalized, cascades = normalize_with_count(CurveSystem(triangulation=tri, words=tuple(words)))
    result = coloring_of(normalized)

    verdict = check_admissible(tri, result)
    if not verdict.ok:
        logger.error(f"Slide of {band} on {f} produced {result}: {verdict}")
        raise InvariantViolation(f"slide result {result} is not admissible: {verdict}")
    delta = weight(result) - weight(f)
    logger.debug(f"Slide {band} on {f}: -> {result}, delta {delta}, cascades {cascades}")
    return SlideResult(band=band, coloring=result, delta=delta, cascades=cascades)


def _current_bands(tri: Triangulation, f: Coloring) -> List[Band]:
    found = bands(tri, f)
    if found is None:
        raise PeripheralPresent(f"{f} has a peripheral component; strip it before sliding")
    return found


def slide(tri: Triangulation, f: Coloring, band: Band) -> SlideResult:
    """Slides the innermost strand of ``band`` across the puncture."""
    f = require_admissible(tri, f)
    current = _current_bands(tri, f)
    if not any(b.start == band.start and b.length == band.length for b in current):
        raise BandNotMaximal(f"{band} is not a maximal band of {f}")
    cs = trace(tri, f)
    return _slide_traced(tri, f, cs, _locate(cs), band)


def all_slides(tri: Triangulation, f: Coloring) -> List[Tuple[Band, SlideResult]]:
    """Slides every maximal band of ``f``, in band order."""
    f = require_admissible(tri, f)
    current = _current_bands(tri, f)
    if not current:
        return []
    cs = trace(tri, f)
    where = _locate(cs)
    return [(band, _slide_traced(tri, f, cs, where, band)) for band in current]
