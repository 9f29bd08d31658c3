"""
This module covers the exceptions raised by the library.

It also includes a decorator that converts raw table lookup failures
(``KeyError``) into :class:`UnknownId` so callers only ever see the
hierarchy below.

"""
# pylint: disable=missing-class-docstring
from functools import wraps
from typing import Any, Callable, Optional

from dblcat.types import ReturnType


__all__ = [
    "DblCatError",
    "MalformedTable",
    "UnknownId",
    "BoundaryMismatch",
    "InconsistentBoundary",
    "SortMismatch",
    "SizeCapExceeded",
    "NotInitial",
    "NoFiller",
    "NoTensors",
    "NoTabulators",
    "ParseError",
    "ValidationError",
    "OptionsError",
    "convert_lookup_errors",
]


class DblCatError(Exception):
    """Base class of every error raised by dblcat."""


class MalformedTable(DblCatError):
    """A table references ids that do not exist or has the wrong shape."""


class UnknownId(DblCatError):
    pass


class BoundaryMismatch(DblCatError):
    pass


class InconsistentBoundary(BoundaryMismatch):
    """The four sides of a requested square do not meet at the corners."""


class SortMismatch(DblCatError):
    pass


class SizeCapExceeded(DblCatError):
    """A sort or a raw search space is larger than the configured cap."""

    def __init__(self, sort: str, size: int, cap: int):
        self.sort = sort
        self.size = size
        self.cap = cap
        super().__init__(
            "Size of '{}' is {} which exceeds the cap {}".format(sort, size, cap))


class NotInitial(DblCatError):
    pass


class NoFiller(DblCatError):
    pass


class NoTensors(DblCatError):
    pass


class NoTabulators(DblCatError):
    pass


class ParseError(DblCatError):
    """Document text could not be parsed; carries a 1-based position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__("{}:{}: {}".format(line, column, message))


class ValidationError(DblCatError):
    """A parsed document does not satisfy the axioms of its kind."""

    def __init__(self, axiom: str, message: Optional[str] = None):
        self.axiom = axiom
        super().__init__(message or axiom)


class OptionsError(DblCatError):
    pass


def _lookup_error(error: KeyError) -> UnknownId:
    missing: Any = error.args[0] if error.args else None
    return UnknownId("Unknown id: {!r}".format(missing))


def convert_lookup_errors(
    function: Callable[..., ReturnType]
) -> Callable[..., ReturnType]:
    """Wrap a function, raising :class:`UnknownId` from `KeyError`."""

    @wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except KeyError as err:
            raise _lookup_error(err) from err

    return wrapper
