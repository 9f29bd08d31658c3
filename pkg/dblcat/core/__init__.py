"""Exact finite categories, 2-categories and double categories."""
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat, arrow_category, product_cat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.order import id_key, least, ordered
from dblcat.core.report import Report, Violation
from dblcat.core.sortmap import SortMap, transport
from dblcat.core.validate import (assert_isomorphism, squares_filling,
                                  validate_fin_2cat, validate_fin_cat,
                                  validate_fin_dblcat)

__all__ = [
    "FinCat",
    "Fin2Cat",
    "FinDblCat",
    "Report",
    "Violation",
    "SortMap",
    "transport",
    "arrow_category",
    "product_cat",
    "id_key",
    "least",
    "ordered",
    "validate_fin_cat",
    "validate_fin_2cat",
    "validate_fin_dblcat",
    "squares_filling",
    "assert_isomorphism",
]
