"""Canonical ordering of ids: ints, then strings, then tuples."""
from typing import Any, Iterable, Tuple

from dblcat.types import Id

__all__ = ["id_key", "ordered", "least"]


def id_key(value: Id) -> Tuple[Any, ...]:
    if isinstance(value, bool):
        return (0, int(value))
    if isinstance(value, int):
        return (0, value)
    if isinstance(value, str):
        return (1, value)
    if isinstance(value, tuple):
        return (2, tuple(id_key(v) for v in value))
    if value is None:
        return (3,)
    return (4, type(value).__name__, repr(value))


def ordered(ids: Iterable[Id]) -> Tuple[Id, ...]:
    return tuple(sorted(set(ids), key=id_key))


def least(ids: Iterable[Id]):
    """The least id in canonical order, or None for an empty iterable."""
    found = ordered(ids)
    return found[0] if found else None
