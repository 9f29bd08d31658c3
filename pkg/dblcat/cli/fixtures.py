"""
The shipped fixture library.

Every fixture is built in code; ``dblcat/fixtures/*.dc`` holds the text form of the
small ones so the document format has hand-written examples to parse.
Identity 2-cells are named ``1_<morphism>``.

"""
from dataclasses import replace
from pathlib import Path
from functools import lru_cache
from typing import Callable, Dict, Mapping, Tuple

from dblcat.constructions import (hh_embed, object_functor_2, op_2cat,
                                  terminal_2cat, vertical_embed)
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat
from dblcat.core.findblcat import FinDblCat
from dblcat.exceptions import UnknownId
from dblcat.maps.catpsfun import constant_psfun
from dblcat.maps.pseudo import (PseudoFunctor2, constant_pseudofunctor2,
                                identity_pseudofunctor2, strict_functor2)
from dblcat.types import Id

__all__ = [
    "FIXTURES",
    "fixture",
    "FIXTURE_DIR",
    "shipped_documents",
    "walking_category",
    "walking_two_category",
    "free_double_category",
]


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def walking_category(objects, generators: Mapping[Id, Tuple[Id, Id]],
                     composites: Mapping[Tuple[Id, Id], Id], name: str) -> FinCat:
    """A category with identities ``id_<x>``, the given generators and the
    given composites of generators; identities compose trivially."""
    identity = {x: "id_{}".format(x) for x in objects}
    src = {identity[x]: x for x in objects}
    tgt = dict(src)
    for m, (a, b) in generators.items():
        src[m], tgt[m] = a, b
    comp = dict(composites)
    for m in src:
        comp[(m, identity[src[m]])] = m
        comp[(identity[tgt[m]], m)] = m
    return FinCat(objects, src, tgt, identity, comp, name=name)


def walking_two_category(local: FinCat, name: str) -> Fin2Cat:
    """Objects 0 and 1 with ``hom(0, 1) = local`` and trivial endo-homs."""
    ends = ("id_0", "id_1")
    src = {"id_0": 0, "id_1": 1}
    tgt = {"id_0": 0, "id_1": 1}
    comp = {(e, e): e for e in ends}
    for f in local.objects:
        src[f], tgt[f] = 0, 1
        comp[(f, "id_0")] = f
        comp[("id_1", f)] = f
    id2 = {e: "1_" + e for e in ends}
    msrc = {id2[e]: e for e in ends}
    vcomp = {(id2[e], id2[e]): id2[e] for e in ends}
    hcomp = {(id2[e], id2[e]): id2[e] for e in ends}
    msrc.update(local.src)
    mtgt = dict(msrc)
    mtgt.update(local.tgt)
    id2.update(local.identity)
    vcomp.update(local.comp)
    for c in local.morphisms:
        hcomp[(c, "1_id_0")] = c
        hcomp[("1_id_1", c)] = c
    return Fin2Cat([0, 1], src, tgt, {0: "id_0", 1: "id_1"}, comp,
                   msrc, mtgt, id2, vcomp, hcomp, name=name)


def _local(objects, cells: Mapping[Id, Tuple[Id, Id]],
           composites: Mapping[Tuple[Id, Id], Id]) -> FinCat:
    identity = {f: "1_{}".format(f) for f in objects}
    src = {identity[f]: f for f in objects}
    tgt = dict(src)
    for c, (f, g) in cells.items():
        src[c], tgt[c] = f, g
    comp = dict(composites)
    for c in src:
        comp[(c, identity[src[c]])] = c
        comp[(identity[tgt[c]], c)] = c
    return FinCat(objects, src, tgt, identity, comp)


def free_double_category(objects, hmor: Mapping[Id, Tuple[Id, Id]],
                         vmor: Mapping[Id, Tuple[Id, Id]],
                         squares: Mapping[Id, Tuple[Id, Id, Id, Id]],
                         name: str) -> FinDblCat:
    """The free double category on generators none of which compose.

    Identities are ``id_<x>`` (horizontal) and ``vid_<x>`` (vertical);
    identity squares are ``V_<a>``, ``H_<u>`` and ``1_<x>``.
    """
    hid = {x: "id_{}".format(x) for x in objects}
    vid = {x: "vid_{}".format(x) for x in objects}
    hsrc = {hid[x]: x for x in objects}
    htgt = dict(hsrc)
    vsrc = {vid[x]: x for x in objects}
    vtgt = dict(vsrc)
    for a, (x, y) in hmor.items():
        hsrc[a], htgt[a] = x, y
    for u, (x, y) in vmor.items():
        vsrc[u], vtgt[u] = x, y
    hcomp = {}
    for a in hsrc:
        hcomp[(a, hid[hsrc[a]])] = a
        hcomp[(hid[htgt[a]], a)] = a
    vcomp = {}
    for u in vsrc:
        vcomp[(u, vid[vsrc[u]])] = u
        vcomp[(vid[vtgt[u]], u)] = u

    vid_sq = {hid[x]: "1_{}".format(x) for x in objects}
    hid_sq = {vid[x]: "1_{}".format(x) for x in objects}
    vid_sq.update({a: "V_{}".format(a) for a in hmor})
    hid_sq.update({u: "H_{}".format(u) for u in vmor})
    top, bottom, left, right = {}, {}, {}, {}
    for a, s in vid_sq.items():
        top[s], bottom[s] = a, a
        left[s], right[s] = vid[hsrc[a]], vid[htgt[a]]
    for u, s in hid_sq.items():
        left[s], right[s] = u, u
        top[s], bottom[s] = hid[vsrc[u]], hid[vtgt[u]]
    for s, (t, b, l, r) in squares.items():
        top[s], bottom[s], left[s], right[s] = t, b, l, r

    horizontal_units = set(hid_sq.values())
    vertical_units = set(vid_sq.values())
    hcomp_sq, vcomp_sq = {}, {}
    for s in top:
        for t in top:
            if right[s] == left[t]:
                if s in horizontal_units:
                    hcomp_sq[(t, s)] = t
                elif t in horizontal_units:
                    hcomp_sq[(t, s)] = s
            if bottom[s] == top[t]:
                if s in vertical_units:
                    vcomp_sq[(t, s)] = t
                elif t in vertical_units:
                    vcomp_sq[(t, s)] = s
    return FinDblCat(objects, hsrc, htgt, hid, hcomp, vsrc, vtgt, vid, vcomp,
                     top, bottom, left, right, hcomp_sq, vcomp_sq, hid_sq, vid_sq,
                     name=name)


# ---------------------------------------------------------------------------
# Library
# ---------------------------------------------------------------------------

def _iso() -> FinCat:
    return walking_category(["a", "b"], {"i": ("a", "b"), "j": ("b", "a")},
                            {("j", "i"): "id_a", ("i", "j"): "id_b"}, "ISO")


def _two() -> FinCat:
    return walking_category(["a", "b"], {"f": ("a", "b")}, {}, "TWO")


def _arr() -> Fin2Cat:
    return walking_two_category(_local(["f"], {}, {}), "ARR")


def _cell() -> Fin2Cat:
    return walking_two_category(_local(["f", "g"], {"alpha": ("f", "g")}, {}), "CELL")


def _icell() -> Fin2Cat:
    local = _local(["f", "g"], {"alpha": ("f", "g"), "alpha_inv": ("g", "f")},
                   {("alpha_inv", "alpha"): "1_f", ("alpha", "alpha_inv"): "1_g"})
    return walking_two_category(local, "ICELL")


def _varr() -> FinDblCat:
    arrow = walking_category([0, 1], {"u": (0, 1)}, {}, "ARR1")
    return replace(vertical_embed(arrow), name="VARR")


def _varr_h() -> FinDblCat:
    """VARR with a horizontal ``f: 0 → 1`` parallel to ``u`` and no square between them."""
    return free_double_category([0, 1], {"f": (0, 1)}, {"u": (0, 1)}, {}, "VARR_H")


def _sq() -> FinDblCat:
    return free_double_category(
        [0, 1, 2, 3], {"h": (0, 1), "k": (2, 3)}, {"u": (0, 2), "v": (1, 3)},
        {"sigma": ("h", "k", "u", "v")}, "SQ")


def _disc2() -> Fin2Cat:
    return Fin2Cat.locally_discrete(FinCat.discrete([0, 1]), name="DISC2")


def _collapse() -> PseudoFunctor2:
    cell, arr = _cell(), _arr()
    return strict_functor2(
        cell, arr, {0: 0, 1: 1},
        {"id_0": "id_0", "id_1": "id_1", "f": "f", "g": "f"},
        {"1_id_0": "1_id_0", "1_id_1": "1_id_1", "1_f": "1_f", "1_g": "1_f", "alpha": "1_f"},
        name="collapse")


def _to_term(cat: Fin2Cat) -> PseudoFunctor2:
    return constant_pseudofunctor2(cat, terminal_2cat(), "*", name="!")


def _pair_in_arr() -> PseudoFunctor2:
    index, arr = _disc2(), _arr()
    return strict_functor2(
        index, arr, {0: 0, 1: 1},
        {("id", 0): "id_0", ("id", 1): "id_1"},
        {("id", 0): "1_id_0", ("id", 1): "1_id_1"},
        name="pair01")


_BUILDERS: Dict[str, Callable] = {
    "TERM": terminal_2cat,
    "ARR": _arr,
    "CELL": _cell,
    "ICELL": _icell,
    "ISO": _iso,
    "TWO": _two,
    "DISC2": _disc2,
    "HARR": lambda: replace(hh_embed(_arr()), name="HARR"),
    "VARR": _varr,
    "VARR_H": _varr_h,
    "SQ": _sq,
    "F_ISO": lambda: constant_psfun(terminal_2cat(), _iso(), name="F_ISO"),
    "F_ARR": lambda: constant_psfun(terminal_2cat(), _two(), name="F_ARR"),
    "F_TERM": lambda: constant_psfun(terminal_2cat(), FinCat.discrete(["*"], name="1"),
                                     name="F_TERM"),
    "F_ISO_ARR": lambda: constant_psfun(op_2cat(_arr()), _iso(), name="F_ISO_ARR"),
    "W_ARROW": lambda: constant_psfun(op_2cat(terminal_2cat()), _two(), name="W_ARROW"),
    "ID_ARR": lambda: identity_pseudofunctor2(_arr()),
    "ID_CELL": lambda: identity_pseudofunctor2(_cell()),
    "COLLAPSE": _collapse,
    "ARR_TO_TERM": lambda: _to_term(_arr()),
    "TERM_AT_0": lambda: constant_pseudofunctor2(terminal_2cat(), _arr(), 0, name="at0"),
    "CELL_AT_0": lambda: constant_pseudofunctor2(terminal_2cat(), _cell(), 0, name="at0"),
    "AT_1": lambda: object_functor_2(_arr(), 1),
    "AT_0": lambda: object_functor_2(_arr(), 0),
    "PAIR01": _pair_in_arr,
    "ID_DISC2": lambda: identity_pseudofunctor2(_disc2()),
}

FIXTURES: Tuple[str, ...] = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def fixture(name: str):
    """The fixture called ``name``.

    Raises:
        UnknownId: no such fixture.
    """
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise UnknownId("Unknown fixture {!r}; known: {}".format(name, ", ".join(FIXTURES)))
    return build()


FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def shipped_documents() -> Dict[str, Path]:
    """Fixture name to the path of its shipped ``.dc`` file."""
    return {path.stem.upper(): path for path in sorted(FIXTURE_DIR.glob("*.dc"))}
