# -----------------------------------------------------------------
#                            Logging
# -----------------------------------------------------------------
"""Named loggers for the library, all children of ``dblcat``."""
import logging

from dblcat.config import get_options

__all__ = ["get_logger", "TRACE", "LOG_MESSAGE_FORMAT", "LOG_DATETIME_FORMAT"]

LOG_MESSAGE_FORMAT = "%(asctime)s %(levelname)-8s {%(name)s:%(funcName)s:%(lineno)d} %(message)s"
LOG_DATETIME_FORMAT = "%Y-%m-%d %H:%M:%S"

# -----------------------------
# Add a trace method
# -----------------------------
TRACE = 9
logging.addLevelName(TRACE, "TRACE")


def trace(self, message, *args, **kws):
    if self.isEnabledFor(TRACE):
        # Yes, logger takes its '*args' as 'args'
        self._log(TRACE, message, args, **kws)


if not hasattr(logging.Logger, "trace"):
    logging.Logger.trace = trace

_root = logging.getLogger("dblcat")
if not _root.handlers:
    _handler = logging.StreamHandler()
    _handler.setFormatter(logging.Formatter(fmt=LOG_MESSAGE_FORMAT,
                                            datefmt=LOG_DATETIME_FORMAT))
    _root.addHandler(_handler)
    # Prevent logging statements from being duplicated
    _root.propagate = False
_root.setLevel(get_options().log_level)


def get_logger(name: str) -> logging.Logger:
    """Return the ``dblcat.<name>`` logger; handlers live on ``dblcat``."""
    return logging.getLogger("dblcat." + name)
