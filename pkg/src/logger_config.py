import logging
import logging.handlers
import os
import platform
import sys
from pathlib import Path

APP_NAME = "dehnslide"
LOG_FILE_NAME = f"{APP_NAME}.log"
MAX_BYTES = 10 * 1024 * 1024  # 10 MB
BACKUP_COUNT = 5
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(lineno)d - %(message)s'


def get_log_file_path() -> Path:
    """Determines the appropriate platform-specific path for the log file."""
    system = platform.system()
    if system == "Windows":
        log_dir = Path(os.getenv("APPDATA", Path.home() / "AppData" / "Roaming")) / APP_NAME / "logs"
    elif system == "Darwin":
        log_dir = Path.home() / "Library" / "Application Support" / APP_NAME / "logs"
    else:
        log_dir = Path(os.getenv("XDG_DATA_HOME", Path.home() / ".local" / "share")) / APP_NAME / "logs"

    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir / LOG_FILE_NAME


def setup_logging(level: str = "WARNING", log_to_file: bool = True):
    """
    Configures the root logger.

    The console handler writes to stderr at ``level``; reports own stdout.  The
    rotating file handler, when enabled, records everything from DEBUG up.
    """
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)

    # Safe to call more than once (tests, repeated CLI invocations in one process)
    if logger.hasHandlers():
        logger.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT)

    log_file_path = None
    if log_to_file:
        log_file_path = get_log_file_path()
        rfh = logging.handlers.RotatingFileHandler(
            filename=log_file_path,
            maxBytes=MAX_BYTES,
            backupCount=BACKUP_COUNT,
            encoding='utf-8'
        )
        rfh.setFormatter(formatter)
        rfh.setLevel(logging.DEBUG)
        logger.addHandler(rfh)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(getattr(logging, level.upper(), logging.WARNING))
    logger.addHandler(console_handler)

    logger.debug(f"Logging initialized. Log file: {log_file_path}. Console level: {level}")
