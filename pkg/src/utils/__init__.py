"""
Utility modules
"""
from .logging_config import set_level, setup_logging, setup_worker_logging
from .errors import ParseError, UsageError

__all__ = ["setup_logging", "setup_worker_logging", "set_level", "UsageError", "ParseError"]
