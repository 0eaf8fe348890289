"""Exception hierarchy shared by every Dehnslide module."""


class DehnslideError(Exception):
    """Base class for all errors raised by the package."""


# --- Triangulations ---

class TriangulationError(DehnslideError, ValueError):
    """A gluing list does not describe a once-punctured ideal triangulation."""


class SlotOutOfRange(TriangulationError):
    pass


class DuplicateSlot(TriangulationError):
    pass


class SelfGluing(TriangulationError):
    pass


class FoldedTriangle(TriangulationError):
    pass


class BadCount(TriangulationError):
    pass


class MultiplePunctures(TriangulationError):
    pass


# --- Colorings ---

class ColoringError(DehnslideError, ValueError):
    """A coloring does not fit the triangulation it is used with."""


class LengthMismatch(ColoringError):
    pass


class NotAdmissible(ColoringError):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"coloring is not admissible: {verdict}")


# --- Curves and slides ---

class CurveError(DehnslideError):
    pass


class NotNormal(CurveError):
    pass


class SlideError(DehnslideError, ValueError):
    pass


class BandNotMaximal(SlideError):
    pass


class PeripheralPresent(SlideError):
    pass


class RewindTooFar(SlideError):
    pass


# --- Reducer and oracles ---

class ReducerError(DehnslideError, ValueError):
    pass


class CapTooSmall(ReducerError):
    pass


class NotTorusFixture(ReducerError):
    pass


# --- Input files ---

class ParseError(DehnslideError, ValueError):
    def __init__(self, path, line_number, cause):
        self.path = path
        self.line_number = line_number
        self.cause = cause
        super().__init__(f"{path}:{line_number}: {cause}")


class InvariantViolation(DehnslideError, RuntimeError):
    """An internal consistency check failed; this indicates a bug, not bad input."""
