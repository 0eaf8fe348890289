import abc


class BaseCommand(abc.ABC):
    """
    A reversible change to a diagram state.

    Subclasses remember whatever they need to put the state back in ``undo``.
    """

    @abc.abstractmethod
    def execute(self):
        pass

    @abc.abstractmethod
    def undo(self):
        pass

    @property
    @abc.abstractmethod
    def description(self) -> str:
        """Short text for logs, e.g. "Slide band at 4 (delta -2)"."""
