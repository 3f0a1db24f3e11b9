"""Copyright (C) 2026 Network RADIUS SAS (legal@networkradius.com)

This software may not be redistributed in any form without the prior
written consent of Network RADIUS.

THIS SOFTWARE IS PROVIDED BY THE AUTHOR AND CONTRIBUTORS ``AS IS'' AND
ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
ARE DISCLAIMED.  IN NO EVENT SHALL THE AUTHOR OR CONTRIBUTORS BE LIABLE
FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS
OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION)
HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY
OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF
SUCH DAMAGE."""

"""
Logging for the engine and its front end.

The package logger writes INFO messages bare to stdout, next to command
results, and everything else to stderr. The file logger only receives the
plain text summaries of verification suites.
"""

import contextlib
import logging
import sys
import time
from collections.abc import Callable, Iterator
from typing import TextIO

from termcolor import colored

logger = logging.getLogger("misere-games")
file_logger = logging.getLogger("file")

TIMESTAMP_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def _handler(
    stream: TextIO,
    level: int,
    accepts: Callable[[int], bool],
    fmt: str,
    colour: str | None = None,
) -> logging.Handler:
    handler = logging.StreamHandler(stream)
    handler.setLevel(level)
    handler.addFilter(lambda record: accepts(record.levelno))
    handler.setFormatter(
        logging.Formatter(
            colored(fmt, colour) if colour else fmt, datefmt=DATE_FORMAT
        )
    )
    return handler


def setup_logging(level: int = logging.INFO) -> None:
    """
    Set up logging configuration.

    Calling this more than once is harmless, the handlers are only
    installed the first time.

    Args:
        level (int): Logging level. Defaults to logging.INFO.
    """
    if logger.handlers:
        logger.setLevel(min(logger.level, level))
        return

    logger.setLevel(level)
    logger.addHandler(
        _handler(
            sys.stdout,
            logging.INFO,
            lambda levelno: levelno == logging.INFO,
            "%(message)s",
        )
    )
    # Warnings in yellow, errors in red
    logger.addHandler(
        _handler(
            sys.stderr,
            logging.WARNING,
            lambda levelno: levelno == logging.WARNING,
            TIMESTAMP_FORMAT,
            "yellow",
        )
    )
    logger.addHandler(
        _handler(
            sys.stderr,
            logging.ERROR,
            lambda levelno: levelno >= logging.ERROR,
            TIMESTAMP_FORMAT,
            "red",
        )
    )

    logger.debug(
        "Logging is set up with level: %s", logging.getLevelName(level)
    )


def add_debug_logging(logger_obj: logging.Logger = logger) -> None:
    """
    Add debug logging handler to the logger.

    Args:
        logger_obj (logging.Logger): The logger to add debug logging to. Defaults to the main logger.
    """
    logger_obj.setLevel(logging.DEBUG)
    logger_obj.addHandler(
        _handler(
            sys.stderr,
            logging.DEBUG,
            lambda levelno: levelno == logging.DEBUG,
            TIMESTAMP_FORMAT,
        )
    )


def get_logger_name() -> str:
    return logger.name


def get_logger(name: str | None = None) -> logging.Logger:
    """
    Get the package logger, or one of its children.

    Args:
        name (str | None): Suffix of a child logger, e.g. "census". Child
            records go through the package logger's handlers.

    Returns:
        logging.Logger: The logger.
    """
    if name:
        return logging.getLogger(f"{get_logger_name()}.{name}")
    return logging.getLogger(get_logger_name())


@contextlib.contextmanager
def timed(what: str, logger_obj: logging.Logger = logger) -> Iterator[None]:
    """
    Log how long the body took at DEBUG level.

    Args:
        what (str): Description of the work, e.g. "day-2 census".
        logger_obj (logging.Logger): The logger to report to.
    """
    start = time.perf_counter()
    try:
        yield
    finally:
        logger_obj.debug("%s took %.2f seconds", what, time.perf_counter() - start)


def setup_file_logging(
    file_path: str, level: int = logging.INFO, mode: str = "w"
) -> None:
    """
    Send verification summaries to a file as well.

    Args:
        file_path (str): The path to the log file.
        level (int): The logging level for the file. Defaults to logging.INFO.
        mode (str): The file mode, e.g., 'w' for write, 'a' for append. Defaults to 'w'.
    """
    file_handler = logging.FileHandler(file_path, mode, encoding="utf-8")
    file_handler.setLevel(level)
    file_handler.setFormatter(logging.Formatter("%(message)s"))

    file_logger.setLevel(level)
    file_logger.propagate = False
    file_logger.addHandler(file_handler)

    logger.debug(
        "File logging set up at %s with level %s",
        file_path,
        logging.getLevelName(level),
    )


def close_file_logging() -> None:
    """Flush and detach every file handler of the file logger."""
    for handler in list(file_logger.handlers):
        handler.close()
        file_logger.removeHandler(handler)


def get_file_logger() -> logging.Logger:
    return file_logger
