"""Console logging for the command line; the library itself never adds handlers."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "patchsim"


def configure_logging(level: str | int = "WARNING", console: Console | None = None) -> logging.Logger:
    """Route the ``patchsim`` logger to a rich handler on stderr.

    Calling it again replaces the previous handler instead of stacking one.
    """
    logger = logging.getLogger(LOGGER_NAME)
    for handler in [h for h in logger.handlers if isinstance(h, RichHandler)]:
        logger.removeHandler(handler)
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_time=False,
        show_path=False,
        markup=False,
        rich_tracebacks=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
