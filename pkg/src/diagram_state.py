import logging
from typing import Optional

from PyQt6.QtCore import QObject, pyqtSignal

from .band_analysis import find_band
from .coloring import Coloring, require_admissible, strip_peripherals
from .errors import BandNotMaximal
from .slide_engine import SlideResult, slide
from .surface_model import Triangulation

logger = logging.getLogger(__name__)


class DiagramState(QObject):
    """
    A triangulation together with the current coloring of a diagram on it.

    Peripheral components removed by ``strip_peripherals`` are counted, so
    ``full_coloring`` still describes the original diagram.
    """
    coloring_changed = pyqtSignal(object)  # new coloring tuple
    slide_applied = pyqtSignal(int, int)  # band start, delta
    peripherals_stripped = pyqtSignal(int)  # number removed

    def __init__(self, triangulation: Triangulation, coloring: Coloring, parent: Optional[QObject] = None):
        super().__init__(parent)
        self._triangulation = triangulation
        self._coloring = require_admissible(triangulation, coloring)
        self._peripheral_count = 0

    @property
    def triangulation(self) -> Triangulation:
        return self._triangulation

    @property
    def coloring(self) -> Coloring:
        return self._coloring

    @property
    def peripheral_count(self) -> int:
        return self._peripheral_count

    def full_coloring(self) -> Coloring:
        """The current coloring with the stripped peripheral components put back."""
        extra = 2 * self._peripheral_count
        return tuple(v + extra for v in self._coloring)

    def set_coloring(self, coloring: Coloring, peripheral_count: Optional[int] = None):
        self._coloring = require_admissible(self._triangulation, coloring)
        if peripheral_count is not None:
            self._peripheral_count = peripheral_count
        self.coloring_changed.emit(self._coloring)

    def strip_peripherals(self) -> int:
        stripped, count = strip_peripherals(self._triangulation, self._coloring)
        if count:
            self._peripheral_count += count
            self._coloring = stripped
            logger.info(f"Stripped {count} peripheral component(s), now {stripped}")
            self.coloring_changed.emit(self._coloring)
        self.peripherals_stripped.emit(count)
        return count

    def apply_slide(self, start: int) -> SlideResult:
        band = find_band(self._triangulation, self._coloring, start)
        if band is None:
            raise BandNotMaximal(f"no maximal band of {self._coloring} starts at {start}")
        result = slide(self._triangulation, self._coloring, band)
        self._coloring = result.coloring
        self.slide_applied.emit(start, result.delta)
        self.coloring_changed.emit(self._coloring)
        return result
