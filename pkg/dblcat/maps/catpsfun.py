"""
Normal pseudo-functors ``F: C^op → Cat`` valued in finite categories.

For ``c: C → C'`` the functor ``F(c)`` goes ``F C' → F C``; for
``γ: c ⇒ d`` the transformation ``F(γ)`` goes ``F(c) ⇒ F(d)``. The
compositor for a composable pair ``(g, f)`` of the base is a natural
isomorphism ``F(f)∘F(g) ⇒ F(g∘f)``.

"""
from dataclasses import dataclass, field
from typing import Mapping

from typeguard import typechecked

from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat
from dblcat.core.report import Report
from dblcat.core.validate import validate_fin_cat
from dblcat.exceptions import MalformedTable, UnknownId
from dblcat.logs import get_logger
from dblcat.maps.functors import (Functor, NatTrans, compose_functors,
                                  hcompose_nat, identity_functor, identity_nat,
                                  is_nat_iso, validate_functor,
                                  validate_nat_trans, vcompose_nat,
                                  whisker_left_nat, whisker_right_nat)
from dblcat.types import Id, Pair

__all__ = ["CatPsFun", "constant_psfun", "validate_cat_psfun"]

_LOG = get_logger("maps.catpsfun")


@dataclass(frozen=True)
class CatPsFun:
    base: Fin2Cat
    fibres: Mapping[Id, FinCat]
    on_morphisms: Mapping[Id, Functor]
    on_cells: Mapping[Id, NatTrans]
    compositors: Mapping[Pair, NatTrans]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for attr in ("fibres", "on_morphisms", "on_cells", "compositors"):
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    def fibre(self, c: Id) -> FinCat:
        return self.fibres[c]

    def functor(self, m: Id) -> Functor:
        return self.on_morphisms[m]

    def nat(self, cell: Id) -> NatTrans:
        return self.on_cells[cell]

    def phi(self, g: Id, f: Id) -> NatTrans:
        return self.compositors[(g, f)]


@typechecked
def constant_psfun(base: Fin2Cat, cat: FinCat, name: str = "") -> CatPsFun:
    """The constant pseudo-functor at ``cat`` with identity everything."""
    ident = identity_functor(cat)
    return CatPsFun(
        base=base,
        fibres={x: cat for x in base.objects},
        on_morphisms={m: ident for m in base.morphisms},
        on_cells={c: identity_nat(ident) for c in base.twocells},
        compositors={pair: identity_nat(ident) for pair in base.comp},
        name=name or "const_{}".format(cat.name),
    )


def _same(alpha: NatTrans, beta: NatTrans) -> bool:
    return alpha.components == beta.components


@typechecked
def validate_cat_psfun(f: CatPsFun) -> Report:
    """Fibres, functor and naturality laws, normality and compositor coherence.

    Raises:
        UnknownId: a fibre, functor, transformation or compositor is missing.
    """
    base = f.base
    for what, table, keys in (("fibre", f.fibres, base.objects),
                              ("functor", f.on_morphisms, base.morphisms),
                              ("transformation", f.on_cells, base.twocells)):
        missing = set(keys) - set(table)
        if missing:
            raise UnknownId("Missing {} for {}".format(what, sorted(map(repr, missing))))
    missing = set(base.comp) - set(f.compositors)
    if missing:
        raise MalformedTable("Missing compositors for {}".format(sorted(map(repr, missing))))

    report = Report(name="validate_cat_psfun({})".format(f.name))
    for x in base.objects:
        report.extend(validate_fin_cat(f.fibre(x)), "fibre {!r}".format(x))

    for m in base.morphisms:
        fm = f.functor(m)
        if not report.check(fm.source == f.fibre(base.tgt[m])
                            and fm.target == f.fibre(base.src[m]),
                            "functor law: typing", m):
            continue
        sub = validate_functor(fm)
        for v in sub.violations:
            report.fail(v.axiom, m, *v.ids)
    if not report.ok:
        return report

    for c in base.twocells:
        fc = f.nat(c)
        if not report.check(fc.source == f.functor(base.msrc[c])
                            and fc.target == f.functor(base.mtgt[c]),
                            "naturality: typing", c):
            continue
        sub = validate_nat_trans(fc)
        for v in sub.violations:
            report.fail(v.axiom, c, *v.ids)
    for (g, h), gh in base.comp.items():
        phi = f.phi(g, h)
        expected_src = compose_functors(f.functor(h), f.functor(g))
        if not report.check(phi.source == expected_src and phi.target == f.functor(gh),
                            "compositor typing", g, h):
            continue
        sub = validate_nat_trans(phi)
        for v in sub.violations:
            report.fail("compositor " + v.axiom, g, h, *v.ids)
        report.check(is_nat_iso(phi), "compositor invertible", g, h)
    if not report.ok:
        return report

    for x in base.objects:
        report.check(f.functor(base.identity[x]) == identity_functor(f.fibre(x)),
                     "normality", x)
    for (g, h), gh in base.comp.items():
        if g == base.identity[base.src[g]] or h == base.identity[base.src[h]]:
            report.check(_same(f.phi(g, h), identity_nat(f.functor(gh))), "normality", g, h)

    for m in base.morphisms:
        report.check(_same(f.nat(base.id2[m]), identity_nat(f.functor(m))),
                     "2-functoriality", m)
    for (d, c), dc in base.vcomp.items():
        report.check(_same(vcompose_nat(f.nat(d), f.nat(c)), f.nat(dc)),
                     "2-functoriality", d, c)

    # F(δ*γ)·φ_{c',c} = φ_{d',d}·(Fγ * Fδ)
    for (delta, gamma), dg in base.hcomp.items():
        c, d = base.msrc[gamma], base.mtgt[gamma]
        c2, d2 = base.msrc[delta], base.mtgt[delta]
        lhs = vcompose_nat(f.nat(dg), f.phi(c2, c))
        rhs = vcompose_nat(f.phi(d2, d), hcompose_nat(f.nat(gamma), f.nat(delta)))
        report.check(_same(lhs, rhs), "compositor naturality", delta, gamma)

    # φ_{c''c',c}·(Fc ∘ φ_{c'',c'}) = φ_{c'',c'c}·(φ_{c',c} ∘ Fc'')
    for (c2, c), c2c in base.comp.items():
        for c3 in base.morphisms:
            if base.src[c3] != base.tgt[c2]:
                continue
            c3c2 = base.comp[(c3, c2)]
            lhs = vcompose_nat(f.phi(c3c2, c), whisker_left_nat(f.functor(c), f.phi(c3, c2)))
            rhs = vcompose_nat(f.phi(c3, c2c), whisker_right_nat(f.phi(c2, c), f.functor(c3)))
            report.check(_same(lhs, rhs), "compositor associativity", c3, c2, c)

    _LOG.debug("%s: %d violations", report.name, len(report.violations))
    return report
