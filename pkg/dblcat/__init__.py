"""
Exact finite 2-categories and double categories: constructions, slices,
categories of elements and exhaustive checks of bi-initiality and its
applications.

"""

__version__ = "0.3.0"

from dblcat.config import Options, get_options, set_options
from dblcat.exceptions import *

__all__ = [
    "__version__",
    "Options",
    "get_options",
    "set_options",
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
]
