"""
Seeded generation of valid instances.

Instances are valid by construction: 2-categories come from a transitively
closed random DAG whose strict 1-cells carry a level, composing by ``max``.
The local structure is discrete, posetal (``a ⇒ b`` iff ``a ≤ b``) or
codiscrete (one invertible 2-cell between any two parallel 1-cells).
Double categories are ``ℍ`` of those, optionally multiplied by the vertical
embedding of a random poset, mirrored by ``hop`` or sliced.
Codiscrete 2-categories get at most two levels. Every instance is small
enough for the cross-checks to run under the default size cap; draws that
are not are discarded.

"""
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from typeguard import typechecked

from dblcat.commas import slice_2, slice_dbl
from dblcat.constructions import (hh_embed, hop_dblcat, product_dbl, underlying_h,
                                  vertical_2cat, vertical_embed)
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat
from dblcat.core.findblcat import FinDblCat
from dblcat.cli.document import Document, from_structure
from dblcat.elements import el_dbl, representable_psfun
from dblcat.exceptions import OptionsError, SizeCapExceeded
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun, constant_psfun
from dblcat.maps.pseudo import identity_ps_dbl_functor, identity_pseudofunctor2

__all__ = ["Profile", "PROFILES", "GEN_KINDS", "gen", "gen_structure",
           "random_two_category", "random_double_category", "random_cat_psfun"]

_LOG = get_logger("cli.generator")

_ATTEMPTS = 64

_CODISCRETE_LEVELS = 2


@dataclass(frozen=True)
class Profile:
    name: str
    objects: int
    hmor: int
    vmor: int


PROFILES: Dict[str, Profile] = {
    "tiny": Profile("tiny", 4, 10, 10),
    "small": Profile("small", 6, 20, 20),
}

GEN_KINDS = ("two_category", "double_category", "cat_psfun")

LOCAL_KINDS = ("discrete", "posetal", "codiscrete")


def _profile(name: str) -> Profile:
    try:
        return PROFILES[name]
    except KeyError:
        raise OptionsError("Unknown profile {!r}; use one of {}".format(
            name, ", ".join(PROFILES)))


def _random_dag(rng: random.Random, n: int) -> List[Tuple[int, int]]:
    """Strict pairs ``i < j`` of the transitive closure of random edges."""
    density = rng.random()
    edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density}
    closed = set(edges)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(closed):
            for (c, d) in list(closed):
                if b == c and (a, d) not in closed:
                    closed.add((a, d))
                    changed = True
    return sorted(closed)


def leveled_two_category(n: int, pairs: List[Tuple[int, int]], levels: int,
                         local: str, name: str = "") -> Fin2Cat:
    """Objects ``0..n-1``; 1-cells ``(i, j, l)`` for ``i = j, l = 0`` or a
    strict pair with ``l < levels``; 2-cells ``(i, j, l, l2)``."""
    if local not in LOCAL_KINDS:
        raise OptionsError("Unknown local structure {!r}".format(local))
    morphisms = [(i, i, 0) for i in range(n)]
    morphisms += [(i, j, lv) for (i, j) in pairs for lv in range(levels)]

    def related(a: int, b: int) -> bool:
        if local == "discrete":
            return a == b
        if local == "posetal":
            return a <= b
        return True

    cells = [(i, j, a, b) for (i, j, a) in morphisms for (i2, j2, b) in morphisms
             if (i, j) == (i2, j2) and related(a, b)]
    comp = {}
    for (i, j, a) in morphisms:
        for (j2, k, b) in morphisms:
            if j == j2:
                comp[((j, k, b), (i, j, a))] = (i, k, max(a, b))
    vcomp = {}
    hcomp = {}
    for (i, j, a, b) in cells:
        for (i2, j2, c, d) in cells:
            if (i2, j2) == (i, j) and c == b:
                vcomp[((i, j, c, d), (i, j, a, b))] = (i, j, a, d)
            if i2 == j:
                hcomp[((i2, j2, c, d), (i, j, a, b))] = (i, j2, max(a, c), max(b, d))
    return Fin2Cat(
        objects=range(n),
        src={m: m[0] for m in morphisms}, tgt={m: m[1] for m in morphisms},
        identity={i: (i, i, 0) for i in range(n)}, comp=comp,
        msrc={c: c[:2] + (c[2],) for c in cells}, mtgt={c: c[:2] + (c[3],) for c in cells},
        id2={m: m + (m[2],) for m in morphisms},
        vcomp=vcomp, hcomp=hcomp,
        name=name or "L{}".format(n),
    )


def random_two_category(rng: random.Random, profile: Profile) -> Fin2Cat:
    for _ in range(_ATTEMPTS):
        n = rng.randint(1, profile.objects)
        pairs = _random_dag(rng, n)
        room = profile.hmor - n
        if pairs and room < len(pairs):
            continue
        levels = rng.randint(1, max(1, room // len(pairs))) if pairs else 1
        local = rng.choice(LOCAL_KINDS)
        if local == "codiscrete":
            levels = min(levels, _CODISCRETE_LEVELS)
        return leveled_two_category(n, pairs, levels, local,
                                    name="{}{}x{}".format(local[0], n, levels))
    return leveled_two_category(1, [], 1, "discrete", name="d1x1")


def _random_poset(rng: random.Random, m: int) -> FinCat:
    return FinCat.from_preorder(range(m), _random_dag(rng, m), name="P{}".format(m))


def _fits(dbl: FinDblCat, profile: Profile) -> bool:
    return (len(dbl.objects) <= profile.objects and len(dbl.hmor) <= profile.hmor
            and len(dbl.vmor) <= profile.vmor)


def _checkable(dbl: FinDblCat) -> bool:
    """The cross-checks on ``dbl`` and on its slices stay under the size cap."""
    try:
        vertical_2cat(dbl)
        horizontal = underlying_h(dbl)
        for x in dbl.objects:
            vertical_2cat(slice_dbl(x, identity_ps_dbl_functor(dbl)).structure)
            slice_2(x, identity_pseudofunctor2(horizontal))
    except SizeCapExceeded as err:
        _LOG.debug("discarding %s: %s", dbl.name, err)
        return False
    return True


def _random_double_category_once(rng: random.Random, profile: Profile) -> FinDblCat:
    dbl = hh_embed(random_two_category(rng, profile))
    if rng.random() < 0.5:
        poset = vertical_embed(_random_poset(rng, rng.randint(1, 2)))
        dbl = product_dbl(dbl, poset, cap=max(profile.hmor, profile.vmor) * 4)
    if rng.random() < 0.3:
        dbl = hop_dblcat(dbl)
    if rng.random() < 0.3:
        x = rng.choice(dbl.objects)
        dbl = slice_dbl(x, identity_ps_dbl_functor(dbl), cap=profile.hmor * 8).structure
    return dbl


def random_double_category(rng: random.Random, profile: Profile) -> FinDblCat:
    for _ in range(_ATTEMPTS):
        try:
            dbl = _random_double_category_once(rng, profile)
        except SizeCapExceeded:
            continue
        if _fits(dbl, profile) and _checkable(dbl):
            return dbl
    return hh_embed(leveled_two_category(1, [], 1, "discrete"))


def _random_cat_psfun_once(rng: random.Random, profile: Profile) -> CatPsFun:
    base = random_two_category(rng, profile)
    if rng.random() < 0.5:
        return representable_psfun(base, rng.choice(base.objects))
    fibre = _random_poset(rng, rng.randint(1, 3))
    return constant_psfun(base, fibre, name="const_{}".format(fibre.name))


def random_cat_psfun(rng: random.Random, profile: Profile) -> CatPsFun:
    for _ in range(_ATTEMPTS):
        f = _random_cat_psfun_once(rng, profile)
        try:
            vertical_2cat(el_dbl(f))
        except SizeCapExceeded as err:
            _LOG.debug("discarding %s: %s", f.name, err)
            continue
        return f
    return representable_psfun(leveled_two_category(1, [], 1, "discrete"), 0)


_MAKERS = {
    "two_category": random_two_category,
    "double_category": random_double_category,
    "cat_psfun": random_cat_psfun,
}


@typechecked
def gen_structure(seed: int, profile: str = "tiny", kind: str = "double_category"):
    """The structure generated from ``seed``; equal seeds give equal results.

    Raises:
        OptionsError: unknown profile or kind.
    """
    if kind not in _MAKERS:
        raise OptionsError("Unknown kind {!r}; use one of {}".format(kind, ", ".join(GEN_KINDS)))
    rng = random.Random(seed & 0xFFFFFFFFFFFFFFFF)
    structure = _MAKERS[kind](rng, _profile(profile))
    _LOG.debug("gen(%d, %s, %s): %s", seed, profile, kind, structure.name)
    return structure


@typechecked
def gen(seed: int, profile: str = "tiny", kind: str = "double_category",
        name: Optional[str] = None) -> Document:
    doc = from_structure(gen_structure(seed, profile, kind))
    doc.name = name or "gen-{}-{}".format(seed, profile)
    return doc
