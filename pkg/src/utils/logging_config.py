"""
Logging configuration for twistcheck
"""
import logging
import sys
from pathlib import Path
from logging.handlers import RotatingFileHandler
from typing import Optional, Union

from config.settings import settings

CONSOLE_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# Marks the handlers installed here so repeated calls leave foreign handlers alone
_HANDLER_TAG = "_twistcheck"


class _StderrHandler(logging.StreamHandler):
    """Console handler bound to whatever sys.stderr is at emit time"""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def _level(value: Union[str, int, None]) -> int:
    if value is None:
        value = settings.LOG_LEVEL
    if isinstance(value, int):
        return value
    return getattr(logging, str(value).upper(), logging.INFO)


def _ours(logger: logging.Logger):
    return [h for h in logger.handlers if getattr(h, _HANDLER_TAG, False)]


def setup_logging(name: str = None, level: Union[str, int, None] = None,
                  log_file: Optional[str] = None, console: bool = True) -> logging.Logger:
    """
    Setup logging configuration

    Console output goes to stderr so that command results on stdout stay
    parseable (JSON lines, canonical renderings).  The rotating file
    handler always records DEBUG, which includes per-item timings.

    Args:
        name: Logger name. If None, configures the root logger
        level: Console level, defaults to settings.LOG_LEVEL
        log_file: File path, defaults to settings.LOG_FILE
        console: Whether to attach the stderr handler

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    console_level = _level(level)
    logger.setLevel(min(console_level, logging.DEBUG))

    if _ours(logger):
        set_level(console_level, logger)
        return logger

    if console:
        console_handler = _StderrHandler()
        console_handler.setLevel(console_level)
        console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT, datefmt=DATE_FORMAT))
        setattr(console_handler, _HANDLER_TAG, True)
        logger.addHandler(console_handler)

    log_file_path = Path(log_file or settings.LOG_FILE)
    log_file_path.parent.mkdir(parents=True, exist_ok=True)
    file_handler = RotatingFileHandler(
        log_file_path,
        maxBytes=10 * 1024 * 1024,  # 10 MB
        backupCount=5,
        encoding='utf-8'
    )
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
    setattr(file_handler, _HANDLER_TAG, True)
    logger.addHandler(file_handler)

    return logger


def set_level(level: Union[str, int], logger: logging.Logger = None) -> None:
    """Change the console level of handlers installed by setup_logging"""
    logger = logger or logging.getLogger()
    value = _level(level)
    for handler in _ours(logger):
        if not isinstance(handler, RotatingFileHandler):
            handler.setLevel(value)


def setup_worker_logging() -> logging.Logger:
    """
    Logging inside suite worker processes.

    Workers only report warnings and errors on the console; the parent
    process prints the per-suite summaries.
    """
    return setup_logging(level=max(_level(None), logging.WARNING))
