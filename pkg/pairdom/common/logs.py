# License: GNU Affero General Public License v3 or later
# A copy of GNU AGPL v3 should have been included in this software package in LICENSE.txt.

""" Logging setup for command line runs """

from contextlib import contextmanager
import logging
from typing import Iterator, List, Optional

LOG_FORMAT = "%(levelname)-8s %(asctime)s   %(message)s"
DATE_FORMAT = "%d/%m %H:%M:%S"


@contextmanager
def changed_logging(logfile: Optional[str] = None, verbose: bool = False,
                    debug: bool = False) -> Iterator[None]:
    """ Temporarily reconfigures the root logger, restoring the previous
        handlers and level on exit.

        Arguments:
            logfile: a path to additionally write all log messages to, if any
            verbose: whether to show INFO level messages on the console
            debug: whether to show DEBUG level messages on the console

        Returns:
            None
    """
    root = logging.getLogger()
    old_level = root.level
    old_handlers = list(root.handlers)

    level = logging.WARNING
    if verbose:
        level = logging.INFO
    if debug:
        level = logging.DEBUG

    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)
    console = logging.StreamHandler()
    console.setLevel(level)
    console.setFormatter(formatter)
    new_handlers: List[logging.Handler] = [console]

    if logfile:
        file_handler = logging.FileHandler(logfile, mode="a", encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        new_handlers.append(file_handler)

    for handler in old_handlers:
        root.removeHandler(handler)
    for handler in new_handlers:
        root.addHandler(handler)
    root.setLevel(logging.DEBUG if logfile else level)

    try:
        yield
    finally:
        for handler in new_handlers:
            root.removeHandler(handler)
            handler.close()
        for handler in old_handlers:
            root.addHandler(handler)
        root.setLevel(old_level)
