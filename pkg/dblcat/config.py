"""
Process-wide options: size caps, progress bars and the log level.

"""
import logging
import os
from typing import Optional

from tqdm.auto import tqdm

from dblcat.exceptions import OptionsError, SizeCapExceeded

__all__ = ["Options", "get_options", "set_options", "resolve_cap", "check_cap",
           "check_search_space", "progress"]


class Options(object):
    """
    Encapsulates the options that bound and report the exhaustive searches.
    The class is initialized with sensible defaults which can be overridden
    either by environment variables or by a dictionary. The following options
    are supported:

    * **cap**
        Maximum number of elements allowed in any sort of a structure that
        an operation builds (objects, morphisms, squares, ...). The default
        is 64 and the environment variable ``DBLCAT_CAP`` overrides it.

    * **search_cap**
        Maximum size of a raw candidate space (e.g. all component choices of
        a pseudo-natural transformation) before filtering by axioms. The
        default is 200000; ``DBLCAT_SEARCH_CAP`` overrides it.

    * **show_progress**
        Show tqdm progress bars over long enumerations. Off by default.

    * **log_level**
        Level of the ``dblcat`` loggers; ``DBLCAT_LOG_LEVEL`` overrides it.

    Example usage::

        options = Options(_dict=dict(cap=16, show_progress=True))
        set_options(options)

    """
    __cap = 'cap'
    __search_cap = 'search_cap'
    __show_progress = 'show_progress'
    __log_level = 'log_level'

    __CAP_DEFAULT = 64
    __SEARCH_CAP_DEFAULT = 200000

    _supported_options = [
        __cap,
        __search_cap,
        __show_progress,
        __log_level,
    ]

    @staticmethod
    def default():
        """Create a default set of options, honouring the environment.

        Returns:
            :class:`Options` instance
        """
        values = {}
        if os.environ.get("DBLCAT_CAP"):
            values["cap"] = os.environ["DBLCAT_CAP"]
        if os.environ.get("DBLCAT_SEARCH_CAP"):
            values["search_cap"] = os.environ["DBLCAT_SEARCH_CAP"]
        if os.environ.get("DBLCAT_LOG_LEVEL"):
            values["log_level"] = os.environ["DBLCAT_LOG_LEVEL"]
        return Options(_dict=values)

    def __init__(self, _dict=None):
        """Constructor for :class:`Options`.

        Parameters:
            _dict (dict)
                Optional dictionary with options already loaded. Value can
                be None; if it is None the defaults are used.
        """
        self._cap = self.__CAP_DEFAULT
        self._search_cap = self.__SEARCH_CAP_DEFAULT
        self._show_progress = False
        self._log_level = logging.WARNING

        if _dict is None:
            return  # nothing to do

        if not isinstance(_dict, dict):
            raise OptionsError(
                "Argument '_dict' must be a dict; given '%s'." % type(_dict))

        unsupported_options = set(_dict.keys()).difference(
            self._supported_options)
        if unsupported_options:
            raise OptionsError("Invalid options: %s" % unsupported_options)

        for (key, val) in _dict.items():
            setattr(self, key, val)

    # end __init__

    @property
    def cap(self) -> int:
        """Maximum number of elements per sort of a built structure."""
        return self._cap

    @cap.setter
    def cap(self, val):
        self._cap = self._positive_int('cap', val)

    @property
    def search_cap(self) -> int:
        """Maximum size of a raw enumeration space."""
        return self._search_cap

    @search_cap.setter
    def search_cap(self, val):
        self._search_cap = self._positive_int('search_cap', val)

    @property
    def show_progress(self) -> bool:
        return self._show_progress

    @show_progress.setter
    def show_progress(self, val):
        if isinstance(val, str):
            val = val.strip().lower() in ("1", "true", "yes", "on")
        self._show_progress = bool(val)

    @property
    def log_level(self) -> int:
        return self._log_level

    @log_level.setter
    def log_level(self, val):
        if isinstance(val, str):
            level = logging.getLevelName(val.strip().upper())
            if not isinstance(level, int):
                raise OptionsError(
                    "Property 'log_level' must be a logging level name; "
                    "given {}".format(val))
            val = level
        if not isinstance(val, int):
            raise OptionsError(
                "Property 'log_level' must be an int or a level name; "
                "given {}".format(str(type(val))))
        self._log_level = val

    @staticmethod
    def _positive_int(name, val) -> int:
        try:
            value = int(val)
        except (TypeError, ValueError):
            raise OptionsError(
                "Property '{}' must be an integer; given {}".format(
                    name, str(type(val))))
        if value <= 0:
            raise OptionsError(
                "Property '{}' must be greater than 0; given {}".format(
                    name, value))
        return value

    def as_dict(self) -> dict:
        return {
            "cap": self.cap,
            "search_cap": self.search_cap,
            "show_progress": self.show_progress,
            "log_level": self.log_level,
        }

# end class Options


_options = Options.default()


def get_options() -> Options:
    return _options


def set_options(options: Options) -> Options:
    """Install ``options`` process-wide and return the previous ones."""
    global _options
    if not isinstance(options, Options):
        raise OptionsError(
            "set_options expects an Options instance; given '%s'." % type(options))
    previous, _options = _options, options
    logging.getLogger("dblcat").setLevel(options.log_level)
    return previous


def resolve_cap(cap: Optional[int] = None) -> int:
    return get_options().cap if cap is None else cap


def check_cap(sort: str, size: int, cap: Optional[int] = None) -> None:
    """Raise :class:`SizeCapExceeded` if ``size`` is above the cap."""
    limit = resolve_cap(cap)
    if size > limit:
        raise SizeCapExceeded(sort, size, limit)


def check_search_space(what: str, size: int, cap: Optional[int] = None) -> None:
    """Raise :class:`SizeCapExceeded` if a raw candidate space of ``size``
    is above ``cap``, or above ``search_cap`` when no cap is given."""
    limit = get_options().search_cap if cap is None else cap
    if size > limit:
        raise SizeCapExceeded(what, size, limit)


def progress(iterable, total: int, desc: str):
    """Wrap ``iterable`` in a tqdm bar, shown only with ``show_progress``."""
    return tqdm(iterable, total=total, desc=desc, leave=False,
                disable=not get_options().show_progress)
