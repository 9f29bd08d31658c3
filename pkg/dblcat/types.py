"""
Type aliases shared by the finite structures.

"""
from typing import Hashable, Tuple, TypeVar

__all__ = [
    "ReturnType",
    "Id",
    "Pair",
    "Boundary",
]

ReturnType = TypeVar("ReturnType")

# Any cell of any sort is named by a hashable id. In practice ids are
# ints, strings, or (nested) tuples of those for derived structures.
Id = Hashable

# A composable pair keyed (second, first), i.e. (g, f) for g∘f.
Pair = Tuple[Id, Id]

# The boundary of a square: (top, bottom, left, right).
Boundary = Tuple[Id, Id, Id, Id]
