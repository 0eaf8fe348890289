import logging
from typing import Optional

from ..coloring import Coloring
from ..diagram_state import DiagramState
from ..slide_engine import SlideResult
from .base_command import BaseCommand

logger = logging.getLogger(__name__)


class SlideBandCommand(BaseCommand):
    def __init__(self, state: DiagramState, start: int):
        self.state = state
        self.start = start
        self.result: Optional[SlideResult] = None
        self._previous: Optional[Coloring] = None
        self._description = f"Slide band at {start}"

    def execute(self):
        self._previous = self.state.coloring
        self.result = self.state.apply_slide(self.start)
        self._description = f"Slide band at {self.start} (delta {self.result.delta})"
        logger.debug(f"Executing: {self.description}")

    def undo(self):
        logger.debug(f"Undoing: {self.description}")
        if self._previous is None:
            logger.warning("Cannot undo SlideBandCommand: it was never executed.")
            return
        self.state.set_coloring(self._previous)

    @property
    def description(self) -> str:
        return self._description


class StripPeripheralsCommand(BaseCommand):
    def __init__(self, state: DiagramState):
        self.state = state
        self.removed = 0
        self._previous = None

    def execute(self):
        self._previous = (self.state.coloring, self.state.peripheral_count)
        self.removed = self.state.strip_peripherals()

    def undo(self):
        if self._previous is None:
            logger.warning("Cannot undo StripPeripheralsCommand: it was never executed.")
            return
        coloring, count = self._previous
        self.state.set_coloring(coloring, peripheral_count=count)

    @property
    def description(self) -> str:
        return f"Strip {self.removed} peripheral component(s)"
