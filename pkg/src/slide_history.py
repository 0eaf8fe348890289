import logging
from typing import List, Tuple

from PyQt6.QtCore import QObject, pyqtSignal

from .commands.base_command import BaseCommand
from .commands.slide_commands import SlideBandCommand
from .errors import RewindTooFar

logger = logging.getLogger(__name__)


class SlideHistory(QObject):
    """
    The commands applied to a diagram state, oldest first.

    ``rewind`` takes the latest commands back in reverse order.  A command that
    raises while executing is not recorded.
    """
    command_executed = pyqtSignal(BaseCommand)
    command_rewound = pyqtSignal(BaseCommand)
    depth_changed = pyqtSignal(int)

    def __init__(self, parent=None):
        super().__init__(parent)
        self._applied: List[BaseCommand] = []

    def __len__(self) -> int:
        return len(self._applied)

    def execute_command(self, command: BaseCommand):
        try:
            command.execute()
        except Exception as e:
            logger.error(f"Error executing command '{command.description}': {e}", exc_info=True)
            raise
        self._applied.append(command)
        logger.info(f"Command executed: {command.description}")
        self.command_executed.emit(command)
        self.depth_changed.emit(len(self._applied))

    def rewind(self, count: int = 1) -> List[BaseCommand]:
        """Undoes the last ``count`` commands and returns them, latest first."""
        if count < 0 or count > len(self._applied):
            raise RewindTooFar(f"cannot rewind {count} command(s), {len(self._applied)} applied")
        rewound = []
        for _ in range(count):
            command = self._applied.pop()
            try:
                command.undo()
            except Exception as e:
                logger.error(f"Error rewinding command '{command.description}': {e}", exc_info=True)
                self._applied.append(command)
                raise
            logger.info(f"Command rewound: {command.description}")
            rewound.append(command)
            self.command_rewound.emit(command)
        if rewound:
            self.depth_changed.emit(len(self._applied))
        return rewound

    def path(self) -> Tuple[int, ...]:
        """Band starts of the applied slides."""
        return tuple(c.start for c in self._applied if isinstance(c, SlideBandCommand))

    def descriptions(self) -> List[str]:
        return [c.description for c in self._applied]
