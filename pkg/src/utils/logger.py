"""Utilities for logging.

Log records go to stderr so that `--format json` output on stdout stays machine-readable.
"""

import logging
import sys
from typing import Union

from config import settings

LOGGER_NAME = "cm_toolkit"


def setup_logger(name: str = LOGGER_NAME) -> logging.Logger:
    """
    Set up and configure logger.

    Args:
        name: Logger name; child loggers ("cm_toolkit.sra") share the root handler

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, settings.log_level.upper(), logging.INFO))

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(
        fmt="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    ))
    logger.addHandler(handler)
    logger.propagate = False
    return logger


def set_level(level: Union[int, str]) -> None:
    """Change the toolkit log level at runtime (the CLI's --verbose)."""
    logging.getLogger(LOGGER_NAME).setLevel(level)


# Global logger instance
logger = setup_logger()
