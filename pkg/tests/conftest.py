"""Shared fixtures: the shipped structures and small helpers on tables."""
from dataclasses import replace

import pytest

from dblcat.cli.fixtures import FIXTURES, fixture
from dblcat.config import Options, set_options
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat
from dblcat.core.findblcat import FinDblCat
from dblcat.maps.catpsfun import CatPsFun
from dblcat.maps.pseudo import PseudoFunctor2

STRUCTURE_NAMES = tuple(n for n in FIXTURES
                        if isinstance(fixture(n), (FinCat, Fin2Cat, FinDblCat)))
TWO_CATEGORY_NAMES = tuple(n for n in FIXTURES if isinstance(fixture(n), Fin2Cat))
DOUBLE_CATEGORY_NAMES = tuple(n for n in FIXTURES if isinstance(fixture(n), FinDblCat))
PSFUN_NAMES = tuple(n for n in FIXTURES if isinstance(fixture(n), CatPsFun))
FUNCTOR2_NAMES = tuple(n for n in FIXTURES if isinstance(fixture(n), PseudoFunctor2))


def patched(structure, table: str, **entries):
    """A copy of ``structure`` with ``table`` updated by ``entries``."""
    updated = dict(getattr(structure, table))
    updated.update(entries)
    return replace(structure, **{table: updated})


def patched_pairs(structure, table: str, updates):
    """Like :func:`patched` for tables keyed by pairs."""
    updated = dict(getattr(structure, table))
    updated.update(updates)
    return replace(structure, **{table: updated})


@pytest.fixture(autouse=True)
def default_options():
    previous = set_options(Options())
    yield
    set_options(previous)


@pytest.fixture
def term():
    return fixture("TERM")


@pytest.fixture
def arr():
    return fixture("ARR")


@pytest.fixture
def cell():
    return fixture("CELL")


@pytest.fixture
def icell():
    return fixture("ICELL")


@pytest.fixture
def iso():
    return fixture("ISO")


@pytest.fixture
def two():
    return fixture("TWO")


@pytest.fixture
def harr():
    return fixture("HARR")


@pytest.fixture
def varr():
    return fixture("VARR")


@pytest.fixture
def sq():
    return fixture("SQ")


@pytest.fixture
def disc2():
    return fixture("DISC2")
