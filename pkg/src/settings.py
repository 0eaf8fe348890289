import logging
from typing import Optional

from PyQt6.QtCore import QSettings

logger = logging.getLogger(__name__)

ORGANIZATION = "DehnslideProject"
APPLICATION = "Dehnslide"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_LOG_FILE_ENABLED = True
DEFAULT_RENDER_SIZE = 480


class AppSettings:
    """Persisted defaults for logging and rendering; flags on the command line override them."""

    def __init__(self, settings: Optional[QSettings] = None):
        self.settings = settings if settings is not None else QSettings(ORGANIZATION, APPLICATION)

    @property
    def log_level(self) -> str:
        level = str(self.settings.value("logging/level", DEFAULT_LOG_LEVEL)).upper()
        if level not in LOG_LEVELS:
            logger.warning(f"Ignoring stored log level {level!r}")
            return DEFAULT_LOG_LEVEL
        return level

    @log_level.setter
    def log_level(self, level: str):
        level = level.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {level!r}; choose one of {', '.join(LOG_LEVELS)}")
        self.settings.setValue("logging/level", level)

    @property
    def log_file_enabled(self) -> bool:
        return self.settings.value("logging/file_enabled", DEFAULT_LOG_FILE_ENABLED, type=bool)

    @log_file_enabled.setter
    def log_file_enabled(self, enabled: bool):
        self.settings.setValue("logging/file_enabled", bool(enabled))

    @property
    def render_size(self) -> int:
        return self.settings.value("render/size", DEFAULT_RENDER_SIZE, type=int)

    @render_size.setter
    def render_size(self, size: int):
        if size < 64:
            raise ValueError(f"render size must be at least 64 pixels, got {size}")
        self.settings.setValue("render/size", int(size))

    def sync(self):
        self.settings.sync()

    def as_dict(self) -> dict:
        return {
            "logging/level": self.log_level,
            "logging/file_enabled": self.log_file_enabled,
            "render/size": self.render_size,
        }
