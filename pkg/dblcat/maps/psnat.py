"""
Pseudo-natural transformations and modifications.

For ``F, G: C^op → Cat`` a :class:`PsNat` ``α: F ⇒ G`` has functors
``α_C: F C → G C`` and, for each ``c: C → C'``, an invertible natural
transformation ``α_c: G(c)∘α_{C'} ⇒ α_C∘F(c)``. A :class:`Modif`
``Γ: α ⇛ β`` has natural transformations ``Γ_C: α_C ⇒ β_C``.

:class:`PsNat2` is the same notion between pseudo-functors of finite
2-categories, with morphism components and 2-cell components
``α_k: G(k)∘α_i ⇒ α_j∘F(k)``.

"""
import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Mapping

from typeguard import typechecked

from dblcat.config import check_search_space, progress
from dblcat.core.report import Report
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun
from dblcat.maps.functors import (Functor, NatTrans, compose_functors,
                                  enumerate_functors, enumerate_nat_trans,
                                  identity_functor, identity_nat, is_nat_iso,
                                  validate_functor, validate_nat_trans,
                                  vcompose_nat, whisker_left_nat,
                                  whisker_right_nat)
from dblcat.maps.pseudo import PseudoFunctor2
from dblcat.types import Id

__all__ = [
    "PsNat",
    "Modif",
    "PsNat2",
    "identity_psnat",
    "compose_psnat",
    "identity_modification",
    "validate_psnat",
    "validate_modification",
    "validate_psnat2",
    "enumerate_psnats",
    "enumerate_modifications",
    "enumerate_psnats2",
]

_LOG = get_logger("maps.psnat")


@dataclass(frozen=True)
class PsNat:
    source: CatPsFun
    target: CatPsFun
    components: Mapping[Id, Functor]
    cells: Mapping[Id, NatTrans]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))
        object.__setattr__(self, "cells", dict(self.cells))

    def key(self):
        """Structural key: component tables and 2-cell component tables."""
        return (tuple((c, tuple(sorted(self.components[c].on_morphisms.items(), key=repr)))
                      for c in self.source.base.objects),
                tuple((m, tuple(sorted(self.cells[m].components.items(), key=repr)))
                      for m in self.source.base.morphisms))


@dataclass(frozen=True)
class Modif:
    source: PsNat
    target: PsNat
    components: Mapping[Id, NatTrans]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))

    def key(self):
        return tuple((c, tuple(sorted(self.components[c].components.items(), key=repr)))
                     for c in self.source.source.base.objects)


@dataclass(frozen=True)
class PsNat2:
    source: PseudoFunctor2
    target: PseudoFunctor2
    components: Mapping[Id, Id]
    cells: Mapping[Id, Id]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))
        object.__setattr__(self, "cells", dict(self.cells))


def _same(alpha: NatTrans, beta: NatTrans) -> bool:
    return alpha.components == beta.components


# ---------------------------------------------------------------------------
# Identities and composites
# ---------------------------------------------------------------------------

def identity_psnat(f: CatPsFun) -> PsNat:
    base = f.base
    return PsNat(
        f, f,
        {x: identity_functor(f.fibre(x)) for x in base.objects},
        {m: identity_nat(f.functor(m)) for m in base.morphisms},
        name="id",
    )


def compose_psnat(beta: PsNat, alpha: PsNat) -> PsNat:
    """``beta∘alpha``; the 2-cell at c is ``(β_C*α_c)·(β_c*α_{C'})``."""
    base = alpha.source.base
    components = {x: compose_functors(beta.components[x], alpha.components[x])
                  for x in base.objects}
    cells = {}
    for m in base.morphisms:
        a, b = base.src[m], base.tgt[m]
        outer = whisker_left_nat(beta.components[a], alpha.cells[m])
        inner = whisker_right_nat(beta.cells[m], alpha.components[b])
        cells[m] = vcompose_nat(outer, inner)
    return PsNat(alpha.source, beta.target, components, cells)


def identity_modification(alpha: PsNat) -> Modif:
    return Modif(alpha, alpha, {x: identity_nat(alpha.components[x])
                                for x in alpha.source.base.objects})


# ---------------------------------------------------------------------------
# Validators
# ---------------------------------------------------------------------------

@typechecked
def validate_psnat(alpha: PsNat) -> Report:
    """Component functors, invertible 2-cell components, normality,
    naturality in 2-cells and compatibility with the compositors."""
    f, g = alpha.source, alpha.target
    base = f.base
    report = Report(name="validate_psnat({})".format(alpha.name))
    if f.base != g.base:
        return report.fail("boundary: different bases")
    for x in base.objects:
        comp = alpha.components.get(x)
        if comp is None:
            report.fail("component missing", x)
            continue
        if not report.check(comp.source == f.fibre(x) and comp.target == g.fibre(x),
                            "component typing", x):
            continue
        for v in validate_functor(comp).violations:
            report.fail("component " + v.axiom, x, *v.ids)
    if not report.ok:
        return report

    for m in base.morphisms:
        cell = alpha.cells.get(m)
        if cell is None:
            report.fail("2-cell component missing", m)
            continue
        a, b = base.src[m], base.tgt[m]
        expected_src = compose_functors(g.functor(m), alpha.components[b])
        expected_tgt = compose_functors(alpha.components[a], f.functor(m))
        if not report.check(cell.source == expected_src and cell.target == expected_tgt,
                            "2-cell component typing", m):
            continue
        for v in validate_nat_trans(cell).violations:
            report.fail("2-cell component " + v.axiom, m, *v.ids)
        report.check(is_nat_iso(cell), "2-cell component invertible", m)
    if not report.ok:
        return report

    for x in base.objects:
        report.check(_same(alpha.cells[base.identity[x]],
                           identity_nat(alpha.components[x])), "normality", x)

    # (α_C*Fγ)·α_c = α_d·(Gγ*α_{C'})
    for gamma in base.twocells:
        c, d = base.msrc[gamma], base.mtgt[gamma]
        a, b = base.src[c], base.tgt[c]
        lhs = vcompose_nat(whisker_left_nat(alpha.components[a], f.nat(gamma)),
                           alpha.cells[c])
        rhs = vcompose_nat(alpha.cells[d],
                           whisker_right_nat(g.nat(gamma), alpha.components[b]))
        report.check(_same(lhs, rhs), "naturality", gamma)

    # α_{c'c}·(φ^G*α_{C''}) = (α_C*φ^F)·(α_c*Fc')·(Gc*α_{c'})
    for (c2, c), c2c in base.comp.items():
        a, c_end = base.src[c], base.tgt[c2]
        lhs = vcompose_nat(alpha.cells[c2c],
                           whisker_right_nat(g.phi(c2, c), alpha.components[c_end]))
        step1 = whisker_left_nat(g.functor(c), alpha.cells[c2])
        step2 = whisker_right_nat(alpha.cells[c], f.functor(c2))
        step3 = whisker_left_nat(alpha.components[a], f.phi(c2, c))
        rhs = vcompose_nat(step3, vcompose_nat(step2, step1))
        report.check(_same(lhs, rhs), "compositor compatibility", c2, c)
    return report


@typechecked
def validate_modification(gamma: Modif) -> Report:
    """``(Γ_C*Fc)·α_c = β_c·(Gc*Γ_{C'})`` for every ``c: C → C'``."""
    alpha, beta = gamma.source, gamma.target
    f, g = alpha.source, alpha.target
    base = f.base
    report = Report(name="validate_modification({})".format(gamma.name))
    for x in base.objects:
        comp = gamma.components.get(x)
        if comp is None:
            report.fail("component missing", x)
            continue
        if not report.check(comp.source == alpha.components[x]
                            and comp.target == beta.components[x], "component typing", x):
            continue
        for v in validate_nat_trans(comp).violations:
            report.fail("component " + v.axiom, x, *v.ids)
    if not report.ok:
        return report
    for m in base.morphisms:
        a, b = base.src[m], base.tgt[m]
        lhs = vcompose_nat(whisker_right_nat(gamma.components[a], f.functor(m)),
                           alpha.cells[m])
        rhs = vcompose_nat(beta.cells[m], whisker_left_nat(g.functor(m), gamma.components[b]))
        report.check(_same(lhs, rhs), "modification law", m)
    return report


@typechecked
def validate_psnat2(alpha: PsNat2) -> Report:
    """Pseudo-naturality between pseudo-functors of 2-categories."""
    f, g = alpha.source, alpha.target
    src, cat = f.source, f.target
    report = Report(name="validate_psnat2({})".format(alpha.name))
    for i in src.objects:
        k = alpha.components.get(i)
        report.check(k in cat.src and cat.src[k] == f.ob(i) and cat.tgt[k] == g.ob(i),
                     "component typing", i)
    if not report.ok:
        return report
    for k in src.morphisms:
        i, j = src.src[k], src.tgt[k]
        cell = alpha.cells.get(k)
        expected = (cat.comp[(g.mor(k), alpha.components[i])],
                    cat.comp[(alpha.components[j], f.mor(k))])
        if not report.check(cell in cat.msrc and (cat.msrc[cell], cat.mtgt[cell]) == expected,
                            "2-cell component typing", k):
            continue
        report.check(cat.is_invertible2(cell), "2-cell component invertible", k)
        if k == src.identity[i]:
            report.check(cell == cat.id2[alpha.components[i]], "normality", i)
    if not report.ok:
        return report
    for kappa in src.twocells:
        k, l = src.msrc[kappa], src.mtgt[kappa]
        i, j = src.src[k], src.tgt[k]
        lhs = cat.vcomp[(cat.whisker_left(alpha.components[j], f.cell(kappa)), alpha.cells[k])]
        rhs = cat.vcomp[(alpha.cells[l], cat.whisker_right(g.cell(kappa), alpha.components[i]))]
        report.check(lhs == rhs, "naturality", kappa)
    for (k2, k), k2k in src.comp.items():
        i, l = src.src[k], src.tgt[k2]
        lhs = cat.vcomp[(alpha.cells[k2k],
                         cat.whisker_right(g.phi(k2, k), alpha.components[i]))]
        rhs = cat.vcompose(
            cat.whisker_left(alpha.components[l], f.phi(k2, k)),
            cat.whisker_right(alpha.cells[k2], f.mor(k)),
            cat.whisker_left(g.mor(k2), alpha.cells[k]))
        report.check(lhs == rhs, "compositor compatibility", k2, k)
    return report


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@typechecked
def enumerate_psnats(f: CatPsFun, g: CatPsFun, cap=None) -> List[PsNat]:
    """Every pseudo-natural transformation ``f ⇒ g``, canonically ordered.

    Raises:
        SizeCapExceeded: the raw component space exceeds ``cap`` (default
            ``search_cap``).
    """
    base = f.base
    objects = base.objects
    non_identities = [m for m in base.morphisms if m != base.identity[base.src[m]]]
    per_object = [enumerate_functors(f.fibre(x), g.fibre(x), cap) for x in objects]
    raw = 1
    for options in per_object:
        raw *= len(options)
    check_search_space("psnat components", raw, cap)

    found: List[PsNat] = []
    for comps in progress(itertools.product(*per_object), raw, "psnats"):
        components = dict(zip(objects, comps))
        choices = []
        for m in non_identities:
            a, b = base.src[m], base.tgt[m]
            src_f = compose_functors(g.functor(m), components[b])
            tgt_f = compose_functors(components[a], f.functor(m))
            choices.append([n for n in enumerate_nat_trans(src_f, tgt_f, cap) if is_nat_iso(n)])
        count = 1
        for c in choices:
            count *= len(c)
        check_search_space("psnat 2-cell components", count * raw, cap)
        for cells in itertools.product(*choices):
            table = {base.identity[x]: identity_nat(components[x]) for x in objects}
            table.update(zip(non_identities, cells))
            alpha = PsNat(f, g, components, table)
            report = validate_psnat(alpha)
            if report.ok:
                found.append(alpha)
            else:
                _LOG.trace("enumerate_psnats: rejected candidate: %s", report)
    _LOG.debug("enumerate_psnats(%s, %s): %d found", f.name, g.name, len(found))
    return found


@typechecked
def enumerate_modifications(alpha: PsNat, beta: PsNat, cap=None) -> List[Modif]:
    """Every modification ``alpha ⇛ beta``, canonically ordered."""
    objects = alpha.source.base.objects
    per_object = [enumerate_nat_trans(alpha.components[x], beta.components[x], cap)
                  for x in objects]
    raw = 1
    for options in per_object:
        raw *= len(options)
    check_search_space("modification components", raw, cap)
    found = []
    for comps in itertools.product(*per_object):
        gamma = Modif(alpha, beta, dict(zip(objects, comps)))
        if validate_modification(gamma).ok:
            found.append(gamma)
    return found


@typechecked
def enumerate_psnats2(f: PseudoFunctor2, g: PseudoFunctor2, cap=None) -> List[PsNat2]:
    """Every pseudo-natural transformation between 2-category pseudo-functors.

    Raises:
        SizeCapExceeded: the raw component space exceeds ``cap`` (default
            ``search_cap``).
    """
    src, cat = f.source, f.target
    objects = src.objects
    non_identities = [k for k in src.morphisms if k != src.identity[src.src[k]]]
    per_object = [cat.hom(f.ob(i), g.ob(i)) for i in objects]
    raw = 1
    for options in per_object:
        raw *= len(options)
    check_search_space("psnat components", raw, cap)
    found = []
    for comps in itertools.product(*per_object):
        components = dict(zip(objects, comps))
        choices = []
        for k in non_identities:
            i, j = src.src[k], src.tgt[k]
            cells = cat.cells(cat.comp[(g.mor(k), components[i])],
                              cat.comp[(components[j], f.mor(k))])
            choices.append([c for c in cells if cat.is_invertible2(c)])
        count = 1
        for c in choices:
            count *= len(c)
        check_search_space("psnat 2-cell components", count * raw, cap)
        for cells in itertools.product(*choices):
            table: Dict[Id, Id] = {src.identity[i]: cat.id2[components[i]] for i in objects}
            table.update(zip(non_identities, cells))
            alpha = PsNat2(f, g, components, table)
            report = validate_psnat2(alpha)
            if report.ok:
                found.append(alpha)
            else:
                _LOG.trace("enumerate_psnats2: rejected candidate: %s", report)
    return found
