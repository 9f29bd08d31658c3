"""
Functors and natural transformations between finite categories.

Everything a pseudo-functor into the category universe needs: identities,
composites, whiskering, horizontal composition, brute-force enumeration
and the direct full-faithfulness / essential-surjectivity tests.

"""
import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from typeguard import typechecked

from dblcat.config import check_search_space
from dblcat.core.fincat import FinCat
from dblcat.core.report import Report
from dblcat.logs import get_logger
from dblcat.types import Id

__all__ = [
    "Functor",
    "NatTrans",
    "identity_functor",
    "compose_functors",
    "constant_functor",
    "identity_nat",
    "vcompose_nat",
    "hcompose_nat",
    "whisker_left_nat",
    "whisker_right_nat",
    "inverse_nat",
    "is_nat_iso",
    "validate_functor",
    "validate_nat_trans",
    "enumerate_functors",
    "enumerate_nat_trans",
    "is_fully_faithful",
    "is_essentially_surjective",
]

_LOG = get_logger("maps")


@dataclass(frozen=True)
class Functor:
    source: FinCat
    target: FinCat
    on_objects: Mapping[Id, Id]
    on_morphisms: Mapping[Id, Id]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "on_objects", dict(self.on_objects))
        object.__setattr__(self, "on_morphisms", dict(self.on_morphisms))

    def ob(self, x: Id) -> Id:
        return self.on_objects[x]

    def mor(self, m: Id) -> Id:
        return self.on_morphisms[m]


@dataclass(frozen=True)
class NatTrans:
    """``components[x]: F x → G x`` for ``F = source`` and ``G = target``."""

    source: Functor
    target: Functor
    components: Mapping[Id, Id]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))

    def __getitem__(self, x: Id) -> Id:
        return self.components[x]

    @property
    def category(self) -> FinCat:
        return self.source.target


def identity_functor(cat: FinCat) -> Functor:
    return Functor(cat, cat, {x: x for x in cat.objects},
                   {m: m for m in cat.morphisms}, name="id")


def compose_functors(g: Functor, f: Functor) -> Functor:
    """``g∘f``."""
    return Functor(
        f.source, g.target,
        {x: g.on_objects[f.on_objects[x]] for x in f.source.objects},
        {m: g.on_morphisms[f.on_morphisms[m]] for m in f.source.morphisms},
    )


def constant_functor(source: FinCat, target: FinCat, y: Id) -> Functor:
    return Functor(source, target, {x: y for x in source.objects},
                   {m: target.identity[y] for m in source.morphisms})


def identity_nat(f: Functor) -> NatTrans:
    cat = f.target
    return NatTrans(f, f, {x: cat.identity[f.ob(x)] for x in f.source.objects})


def vcompose_nat(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """``beta·alpha`` for ``alpha: F ⇒ G`` and ``beta: G ⇒ H``."""
    cat = alpha.category
    return NatTrans(alpha.source, beta.target,
                    {x: cat.comp[(beta[x], alpha[x])] for x in alpha.source.source.objects})


def hcompose_nat(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """``beta*alpha: H∘F ⇒ K∘G`` for ``alpha: F ⇒ G`` and ``beta: H ⇒ K``.

    The component at x is ``K(alpha_x) ∘ beta_{F x}``.
    """
    f, k = alpha.source, beta.target
    cat = beta.category
    return NatTrans(
        compose_functors(beta.source, alpha.source),
        compose_functors(beta.target, alpha.target),
        {x: cat.comp[(k.mor(alpha[x]), beta[f.ob(x)])] for x in f.source.objects},
    )


def whisker_left_nat(h: Functor, alpha: NatTrans) -> NatTrans:
    """``h∘alpha: h∘F ⇒ h∘G``."""
    return NatTrans(compose_functors(h, alpha.source), compose_functors(h, alpha.target),
                    {x: h.mor(c) for x, c in alpha.components.items()})


def whisker_right_nat(beta: NatTrans, f: Functor) -> NatTrans:
    """``beta∘f: H∘f ⇒ K∘f``."""
    return NatTrans(compose_functors(beta.source, f), compose_functors(beta.target, f),
                    {x: beta[f.ob(x)] for x in f.source.objects})


def inverse_nat(alpha: NatTrans) -> Optional[NatTrans]:
    cat = alpha.category
    components = {}
    for x, c in alpha.components.items():
        inv = cat.inverse(c)
        if inv is None:
            return None
        components[x] = inv
    return NatTrans(alpha.target, alpha.source, components)


def is_nat_iso(alpha: NatTrans) -> bool:
    cat = alpha.category
    return all(cat.is_iso(c) for c in alpha.components.values())


@typechecked
def validate_functor(f: Functor) -> Report:
    """Typing, identities and composites are preserved."""
    report = Report(name="validate_functor({})".format(f.name))
    x, y = f.source, f.target
    if set(f.on_objects) != set(x.objects) or set(f.on_morphisms) != set(x.morphisms):
        return report.fail("functor law: domain")
    if not set(f.on_objects.values()) <= set(y.objects) \
            or not set(f.on_morphisms.values()) <= set(y.src):
        return report.fail("functor law: codomain")
    for m in x.morphisms:
        fm = f.mor(m)
        report.check(y.src[fm] == f.ob(x.src[m]) and y.tgt[fm] == f.ob(x.tgt[m]),
                     "functor law: typing", m)
    for a in x.objects:
        report.check(f.mor(x.identity[a]) == y.identity[f.ob(a)],
                     "functor law: identity", a)
    for (g, h), gh in x.comp.items():
        report.check(y.comp.get((f.mor(g), f.mor(h))) == f.mor(gh),
                     "functor law: composition", g, h)
    return report


@typechecked
def validate_nat_trans(alpha: NatTrans) -> Report:
    report = Report(name="validate_nat_trans({})".format(alpha.name))
    f, g = alpha.source, alpha.target
    cat = f.target
    if set(alpha.components) != set(f.source.objects):
        return report.fail("naturality: domain")
    for x in f.source.objects:
        c = alpha[x]
        if c not in cat.src or cat.src[c] != f.ob(x) or cat.tgt[c] != g.ob(x):
            report.fail("naturality: component typing", x)
    if not report.ok:
        return report
    for m in f.source.morphisms:
        a, b = f.source.src[m], f.source.tgt[m]
        report.check(cat.comp[(alpha[b], f.mor(m))] == cat.comp[(g.mor(m), alpha[a])],
                     "naturality", m)
    return report


def _functor_candidates(x: FinCat, y: FinCat) -> List[Dict[Id, Id]]:
    """Object assignments for which every hom has a candidate image."""
    return [dict(zip(x.objects, images))
            for images in itertools.product(y.objects, repeat=len(x.objects))]


@typechecked
def enumerate_functors(x: FinCat, y: FinCat, cap=None) -> List[Functor]:
    """All functors ``x → y`` in canonical order.

    Raises:
        SizeCapExceeded: the raw assignment space exceeds ``cap`` (default
            ``search_cap``).
    """
    non_identities = [m for m in x.morphisms if not x.is_identity(m)]
    assignments = _functor_candidates(x, y)
    raw = 0
    for obj_map in assignments:
        count = 1
        for m in non_identities:
            count *= len(y.hom(obj_map[x.src[m]], obj_map[x.tgt[m]]))
        raw += count
    check_search_space("functors {} -> {}".format(x.name, y.name), raw, cap)

    found = []
    for obj_map in assignments:
        choices = [y.hom(obj_map[x.src[m]], obj_map[x.tgt[m]]) for m in non_identities]
        for images in itertools.product(*choices):
            mor_map = {x.identity[a]: y.identity[obj_map[a]] for a in x.objects}
            mor_map.update(zip(non_identities, images))
            if all(y.comp[(mor_map[g], mor_map[f])] == mor_map[gf]
                   for (g, f), gf in x.comp.items()):
                found.append(Functor(x, y, obj_map, mor_map))
    _LOG.debug("enumerate_functors(%s, %s): %d of %d candidates",
               x.name, y.name, len(found), raw)
    return found


@typechecked
def enumerate_nat_trans(f: Functor, g: Functor, cap=None) -> List[NatTrans]:
    """All natural transformations ``f ⇒ g`` in canonical order."""
    cat = f.target
    objs = f.source.objects
    choices = [cat.hom(f.ob(x), g.ob(x)) for x in objs]
    raw = 1
    for c in choices:
        raw *= len(c)
    check_search_space("natural transformations", raw, cap)
    found = []
    for comps in itertools.product(*choices):
        alpha = NatTrans(f, g, dict(zip(objs, comps)))
        if all(cat.comp[(alpha[f.source.tgt[m]], f.mor(m))]
               == cat.comp[(g.mor(m), alpha[f.source.src[m]])]
               for m in f.source.morphisms):
            found.append(alpha)
    return found


@typechecked
def is_fully_faithful(u: Functor) -> bool:
    x, y = u.source, u.target
    for a in x.objects:
        for b in x.objects:
            images = [u.mor(m) for m in x.hom(a, b)]
            if len(set(images)) != len(images) \
                    or set(images) != set(y.hom(u.ob(a), u.ob(b))):
                return False
    return True


@typechecked
def is_essentially_surjective(u: Functor) -> bool:
    y = u.target
    image = set(u.on_objects.values())
    return all(any(y.isos(a, b) for a in image) for b in y.objects)
