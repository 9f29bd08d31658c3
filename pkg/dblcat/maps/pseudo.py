"""
Normal pseudo-functors between finite 2-categories and (horizontally)
pseudo double functors between finite double categories.

Compositors are keyed by composable pairs ``(g, f)``:

* for a :class:`PseudoFunctor2`, ``phi(g, f)`` is a 2-cell
  ``Fg∘Ff ⇒ F(g∘f)``;
* for a :class:`PsDblFunctor`, ``phi(b, a)`` is a square with top
  ``Fb∘Fa``, bottom ``F(b∘a)`` and vertical identity sides.

"""
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional

from typeguard import typechecked

from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.report import Report
from dblcat.exceptions import MalformedTable, UnknownId
from dblcat.logs import get_logger
from dblcat.types import Id, Pair

__all__ = [
    "PseudoFunctor2",
    "PsDblFunctor",
    "strict_functor2",
    "identity_pseudofunctor2",
    "constant_pseudofunctor2",
    "strict_dbl_functor",
    "identity_ps_dbl_functor",
    "validate_pseudofunctor2",
    "validate_ps_dbl_functor",
]

_LOG = get_logger("maps.pseudo")


@dataclass(frozen=True)
class PseudoFunctor2:
    source: Fin2Cat
    target: Fin2Cat
    on_objects: Mapping[Id, Id]
    on_morphisms: Mapping[Id, Id]
    on_cells: Mapping[Id, Id]
    compositors: Mapping[Pair, Id]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for attr in ("on_objects", "on_morphisms", "on_cells", "compositors"):
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    def ob(self, x: Id) -> Id:
        return self.on_objects[x]

    def mor(self, f: Id) -> Id:
        return self.on_morphisms[f]

    def cell(self, c: Id) -> Id:
        return self.on_cells[c]

    def phi(self, g: Id, f: Id) -> Id:
        return self.compositors[(g, f)]

    @property
    def is_strict(self) -> bool:
        t = self.target
        return all(t.id2.get(t.msrc[c]) == c for c in self.compositors.values())


@dataclass(frozen=True)
class PsDblFunctor:
    source: FinDblCat
    target: FinDblCat
    on_objects: Mapping[Id, Id]
    on_hmor: Mapping[Id, Id]
    on_vmor: Mapping[Id, Id]
    on_squares: Mapping[Id, Id]
    compositors: Mapping[Pair, Id]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for attr in ("on_objects", "on_hmor", "on_vmor", "on_squares", "compositors"):
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    def ob(self, x: Id) -> Id:
        return self.on_objects[x]

    def hmor(self, a: Id) -> Id:
        return self.on_hmor[a]

    def vmor(self, u: Id) -> Id:
        return self.on_vmor[u]

    def sq(self, s: Id) -> Id:
        return self.on_squares[s]

    def phi(self, b: Id, a: Id) -> Id:
        return self.compositors[(b, a)]

    @property
    def is_strict(self) -> bool:
        t = self.target
        return all(t.vid_sq.get(t.top[s]) == s for s in self.compositors.values())


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def strict_functor2(source: Fin2Cat, target: Fin2Cat, on_objects: Mapping,
                    on_morphisms: Mapping, on_cells: Mapping,
                    name: str = "") -> PseudoFunctor2:
    """A 2-functor with identity compositors.

    Raises:
        MalformedTable: the 1-cell map does not preserve composition strictly.
    """
    compositors = {}
    for (g, f), gf in source.comp.items():
        image = on_morphisms[gf]
        if target.comp.get((on_morphisms[g], on_morphisms[f])) != image:
            raise MalformedTable(
                "Strict functor does not preserve {!r} . {!r}".format(g, f))
        compositors[(g, f)] = target.id2[image]
    return PseudoFunctor2(source, target, on_objects, on_morphisms, on_cells,
                          compositors, name=name)


def identity_pseudofunctor2(cat: Fin2Cat) -> PseudoFunctor2:
    return strict_functor2(cat, cat, {x: x for x in cat.objects},
                           {f: f for f in cat.morphisms},
                           {c: c for c in cat.twocells},
                           name="id_{}".format(cat.name))


def constant_pseudofunctor2(source: Fin2Cat, target: Fin2Cat, x: Id,
                            name: str = "") -> PseudoFunctor2:
    """Δx: every 1-cell goes to ``id_x`` and every 2-cell to its identity."""
    idx = target.identity[x]
    return strict_functor2(source, target, {a: x for a in source.objects},
                           {f: idx for f in source.morphisms},
                           {c: target.id2[idx] for c in source.twocells},
                           name=name or "const_{}".format(x))


def strict_dbl_functor(source: FinDblCat, target: FinDblCat, on_objects: Mapping,
                       on_hmor: Mapping, on_vmor: Mapping, on_squares: Mapping,
                       name: str = "") -> PsDblFunctor:
    compositors = {}
    for (b, a), ba in source.hcomp.items():
        image = on_hmor[ba]
        if target.hcomp.get((on_hmor[b], on_hmor[a])) != image:
            raise MalformedTable(
                "Strict double functor does not preserve {!r} . {!r}".format(b, a))
        compositors[(b, a)] = target.vid_sq[image]
    return PsDblFunctor(source, target, on_objects, on_hmor, on_vmor, on_squares,
                        compositors, name=name)


def identity_ps_dbl_functor(dbl: FinDblCat) -> PsDblFunctor:
    return strict_dbl_functor(dbl, dbl, {x: x for x in dbl.objects},
                              {a: a for a in dbl.hmor}, {u: u for u in dbl.vmor},
                              {s: s for s in dbl.squares},
                              name="id_{}".format(dbl.name))


# ---------------------------------------------------------------------------
# Validators
# ---------------------------------------------------------------------------

def _check_map(mapping: Mapping, domain, codomain, what: str) -> None:
    missing = set(domain) - set(mapping)
    if missing:
        raise UnknownId("{} map is missing {}".format(what, sorted(map(repr, missing))))
    codomain = set(codomain)
    for key, val in mapping.items():
        if val not in codomain:
            raise UnknownId("{} map sends {!r} to unknown id {!r}".format(what, key, val))


def _check_compositors(compositors: Mapping, pairs, cells, what: str) -> None:
    cells = set(cells)
    for pair in pairs:
        if pair not in compositors:
            raise MalformedTable("{} compositor missing for {!r}".format(what, pair))
        if compositors[pair] not in cells:
            raise MalformedTable("{} compositor for {!r} is unknown cell {!r}".format(
                what, pair, compositors[pair]))


@typechecked
def validate_pseudofunctor2(f: PseudoFunctor2) -> Report:
    """Normality, strict 2-cell functoriality and the compositor laws.

    Raises:
        UnknownId: a map misses a source id or names a missing target id.
        MalformedTable: a compositor is missing or is not a 2-cell.
    """
    a, b = f.source, f.target
    _check_map(f.on_objects, a.objects, b.objects, "object")
    _check_map(f.on_morphisms, a.morphisms, b.morphisms, "morphism")
    _check_map(f.on_cells, a.twocells, b.twocells, "2-cell")
    _check_compositors(f.compositors, a.comp, b.twocells, "pseudo-functor")

    report = Report(name="validate_pseudofunctor2({})".format(f.name))
    for m in a.morphisms:
        report.check(b.src[f.mor(m)] == f.ob(a.src[m]) and b.tgt[f.mor(m)] == f.ob(a.tgt[m]),
                     "typing", m)
    for c in a.twocells:
        report.check(b.msrc[f.cell(c)] == f.mor(a.msrc[c])
                     and b.mtgt[f.cell(c)] == f.mor(a.mtgt[c]), "typing", c)
    if not report.ok:
        return report

    for x in a.objects:
        report.check(f.mor(a.identity[x]) == b.identity[f.ob(x)], "normality", x)
    for (g, h), gh in a.comp.items():
        phi = f.phi(g, h)
        report.check(b.msrc[phi] == b.comp.get((f.mor(g), f.mor(h)))
                     and b.mtgt[phi] == f.mor(gh), "compositor boundary", g, h)
        if g == a.identity[a.src[g]] or h == a.identity[a.src[h]]:
            report.check(phi == b.id2.get(f.mor(gh)), "normality", g, h)
        report.check(b.is_invertible2(phi), "compositor invertible", g, h)
    if not report.ok:
        return report

    for m in a.morphisms:
        report.check(f.cell(a.id2[m]) == b.id2[f.mor(m)], "2-functoriality", m)
    for (d, c), dc in a.vcomp.items():
        report.check(b.vcomp.get((f.cell(d), f.cell(c))) == f.cell(dc),
                     "2-functoriality", d, c)

    # phi_{g',f'}·(Fβ*Fα) = F(β*α)·phi_{g,f}
    for (beta, alpha), ba in a.hcomp.items():
        g, f1 = a.msrc[beta], a.msrc[alpha]
        g2, f2 = a.mtgt[beta], a.mtgt[alpha]
        lhs = b.vcomp[(f.phi(g2, f2), b.hcomp[(f.cell(beta), f.cell(alpha))])]
        rhs = b.vcomp[(f.cell(ba), f.phi(g, f1))]
        report.check(lhs == rhs, "compositor naturality", beta, alpha)

    # phi_{h,gf}·(Fh*phi_{g,f}) = phi_{hg,f}·(phi_{h,g}*Ff)
    for (g, h0), gh0 in a.comp.items():
        for h in a.morphisms:
            if a.src[h] != a.tgt[g]:
                continue
            hg = a.comp[(h, g)]
            lhs = b.vcomp[(f.phi(h, gh0), b.whisker_left(f.mor(h), f.phi(g, h0)))]
            rhs = b.vcomp[(f.phi(hg, h0), b.whisker_right(f.phi(h, g), f.mor(h0)))]
            report.check(lhs == rhs, "compositor associativity", h, g, h0)

    _LOG.debug("%s: %d violations", report.name, len(report.violations))
    return report


@typechecked
def validate_ps_dbl_functor(f: PsDblFunctor) -> Report:
    """Strict on the vertical direction, pseudo and normal horizontally."""
    a, b = f.source, f.target
    _check_map(f.on_objects, a.objects, b.objects, "object")
    _check_map(f.on_hmor, a.hmor, b.hmor, "horizontal")
    _check_map(f.on_vmor, a.vmor, b.vmor, "vertical")
    _check_map(f.on_squares, a.squares, b.squares, "square")
    _check_compositors(f.compositors, a.hcomp, b.squares, "double functor")

    report = Report(name="validate_ps_dbl_functor({})".format(f.name))
    for m in a.hmor:
        report.check(b.hsrc[f.hmor(m)] == f.ob(a.hsrc[m])
                     and b.htgt[f.hmor(m)] == f.ob(a.htgt[m]), "typing", m)
    for u in a.vmor:
        report.check(b.vsrc[f.vmor(u)] == f.ob(a.vsrc[u])
                     and b.vtgt[f.vmor(u)] == f.ob(a.vtgt[u]), "typing", u)
    for s in a.squares:
        top, bottom, left, right = a.boundary(s)
        report.check(b.boundary(f.sq(s)) == (f.hmor(top), f.hmor(bottom),
                                              f.vmor(left), f.vmor(right)),
                     "boundary", s)
    if not report.ok:
        return report

    for x in a.objects:
        report.check(f.vmor(a.vid[x]) == b.vid[f.ob(x)], "vertical strictness", x)
        report.check(f.hmor(a.hid[x]) == b.hid[f.ob(x)], "normality", x)
    for (v, u), vu in a.vcomp.items():
        report.check(b.vcomp.get((f.vmor(v), f.vmor(u))) == f.vmor(vu),
                     "vertical strictness", v, u)
    for (t, s), ts in a.vcomp_sq.items():
        report.check(b.vcomp_sq.get((f.sq(t), f.sq(s))) == f.sq(ts),
                     "vertical strictness", t, s)
    for u in a.vmor:
        report.check(f.sq(a.hid_sq[u]) == b.hid_sq[f.vmor(u)], "vertical strictness", u)
    for m in a.hmor:
        report.check(f.sq(a.vid_sq[m]) == b.vid_sq[f.hmor(m)], "identity squares", m)

    for (n, m), nm in a.hcomp.items():
        phi = f.phi(n, m)
        expected = (b.hcomp.get((f.hmor(n), f.hmor(m))), f.hmor(nm),
                    b.vid[f.ob(a.hsrc[m])], b.vid[f.ob(a.htgt[n])])
        if not report.check(b.boundary(phi) == expected, "compositor boundary", n, m):
            continue
        if m == a.hid[a.hsrc[m]] or n == a.hid[a.hsrc[n]]:
            report.check(phi == b.vid_sq[f.hmor(nm)], "normality", n, m)
        report.check(b.vertical_inverse(phi) is not None, "compositor invertible", n, m)
    if not report.ok:
        return report

    # vcomp(F(β∘α), φ_{b,a}) = vcomp(φ_{d,c}, Fβ∘Fα)
    for (beta, alpha), ba in a.hcomp_sq.items():
        top_a, bottom_c = a.top[alpha], a.bottom[alpha]
        top_b, bottom_d = a.top[beta], a.bottom[beta]
        lhs = b.vcomp_sq.get((f.sq(ba), f.phi(top_b, top_a)))
        inner = b.hcomp_sq.get((f.sq(beta), f.sq(alpha)))
        rhs = b.vcomp_sq.get((f.phi(bottom_d, bottom_c), inner))
        report.check(lhs is not None and lhs == rhs, "compositor naturality", beta, alpha)

    # φ_{c,ba}∘v(vid Fc ∘h φ_{b,a}) = φ_{cb,a}∘v(φ_{c,b} ∘h vid Fa)
    for (n, m), nm in a.hcomp.items():
        for k in a.hmor:
            if a.hsrc[k] != a.htgt[n]:
                continue
            kn = a.hcomp[(k, n)]
            left = b.hcomp_sq.get((b.vid_sq[f.hmor(k)], f.phi(n, m)))
            lhs = b.vcomp_sq.get((f.phi(k, nm), left))
            right = b.hcomp_sq.get((f.phi(k, n), b.vid_sq[f.hmor(m)]))
            rhs = b.vcomp_sq.get((f.phi(kn, m), right))
            report.check(lhs is not None and lhs == rhs, "compositor associativity", k, n, m)

    _LOG.debug("%s: %d violations", report.name, len(report.violations))
    return report
