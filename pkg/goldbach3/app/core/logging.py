"""Logging setup for the command line front end."""

import logging
import sys

from goldbach3.app.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0) -> None:
    """
    Configure the root logger once per process.

    Args:
        verbosity: Number of ``-v`` flags; 1 selects INFO, 2 or more DEBUG.
            Zero falls back to ``settings.log_level`` (DEBUG when
            ``settings.debug`` is set).
    """
    if verbosity >= 2 or settings.debug:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.getLevelName(settings.log_level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
