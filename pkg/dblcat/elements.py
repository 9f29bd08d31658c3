"""
Elements of pseudo-functors ``F: ℂ^op → Cat`` and the hom-valued
pseudo-functors the applications feed into them.

The double category of elements ``el(F)`` has

* objects ``(C, x)`` with ``x`` an object of ``FC``;
* horizontal morphisms ``((C', x'), (C, x), c, ψ)`` for ``c: C → C'`` and an
  isomorphism ``ψ: x → (Fc)x'`` of ``FC``;
* vertical morphisms ``((C, x), (C, y), α)`` for ``α: x → y`` in ``FC``;
* squares ``(top, bottom, left, right, γ)`` for ``γ: c ⇒ d`` with
  ``φ∘α = (Fγ)_{y'}∘(Fc)α'∘ψ``.

"""
import itertools
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Tuple

from typeguard import typechecked

from dblcat.commas import coslice_dbl
from dblcat.config import check_cap, check_search_space, progress
from dblcat.constructions import (hh_embed_map, hop_dblcat, op_2cat,
                                  underlying_h, vertical_2cat)
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.report import Report
from dblcat.core.sortmap import SortMap
from dblcat.core.validate import assert_isomorphism
from dblcat.exceptions import BoundaryMismatch, UnknownId, convert_lookup_errors
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun, constant_psfun
from dblcat.maps.functors import (Functor, NatTrans, compose_functors,
                                  vcompose_nat)
from dblcat.maps.pseudo import (PseudoFunctor2, constant_pseudofunctor2,
                                identity_pseudofunctor2)
from dblcat.maps.psnat import (Modif, PsNat, PsNat2, enumerate_modifications,
                               enumerate_psnats, enumerate_psnats2,
                               identity_modification)
from dblcat.types import Id

__all__ = [
    "el_dbl",
    "el_2cat",
    "mor_2cat",
    "hom_psfun",
    "representable_psfun",
    "WeightCones",
    "weight_cones",
    "weightcone_psfun",
    "conical_weight",
    "el_of_hom_vs_slice_check",
    "cone_dbl",
]

_LOG = get_logger("elements")


# ---------------------------------------------------------------------------
# el(F), el_2(F), mor(F)
# ---------------------------------------------------------------------------

@typechecked
@convert_lookup_errors
def el_dbl(f: CatPsFun, cap=None) -> FinDblCat:
    """The double category of elements of ``f``.

    Raises:
        SizeCapExceeded: a sort is above the cap.
    """
    base = f.base
    name = "el({})".format(f.name)
    objects = [(c, x) for c in base.objects for x in f.fibre(c).objects]
    check_cap("objects of " + name, len(objects), cap)

    hmor = []
    for (c2, x2) in objects:
        for (c1, x1) in objects:
            fibre = f.fibre(c1)
            for m in base.hom(c1, c2):
                for psi in fibre.isos(x1, f.functor(m).ob(x2)):
                    hmor.append(((c2, x2), (c1, x1), m, psi))
    check_cap("horizontal morphisms of " + name, len(hmor), cap)

    vmor = []
    for c in base.objects:
        fibre = f.fibre(c)
        vmor.extend(((c, fibre.src[a]), (c, fibre.tgt[a]), a) for a in fibre.morphisms)
    check_cap("vertical morphisms of " + name, len(vmor), cap)

    hid = {(c, x): ((c, x), (c, x), base.identity[c], f.fibre(c).identity[x])
           for (c, x) in objects}
    hcomp = {}
    ending_at: Dict[Id, list] = {}
    for m in hmor:
        ending_at.setdefault(m[1], []).append(m)
    for b in hmor:
        src, (c1, _), c, psi = b
        fibre = f.fibre(c1)
        for a in ending_at.get(src, ()):
            c2 = a[2]
            x3 = a[0][1]
            psi3 = fibre.compose(f.phi(c2, c)[x3], f.functor(c).mor(a[3]), psi)
            hcomp[(b, a)] = (a[0], b[1], base.comp[(c2, c)], psi3)

    vid = {(c, x): ((c, x), (c, x), f.fibre(c).identity[x]) for (c, x) in objects}
    vcomp = {}
    for u in vmor:
        fibre = f.fibre(u[0][0])
        for v in vmor:
            if v[0] == u[1]:
                vcomp[(v, u)] = (u[0], v[1], fibre.comp[(v[2], u[2])])

    by_ends: Dict[Tuple, list] = {}
    for v in vmor:
        by_ends.setdefault((v[0], v[1]), []).append(v)
    squares = []
    for top in hmor:
        (c2, x2), (c1, x1), c, psi = top
        fibre, fc = f.fibre(c1), f.functor(c)
        for bottom in hmor:
            (d2, y2), (d1, y1), d, phi = bottom
            if (d2, d1) != (c2, c1):
                continue
            for left in by_ends.get((top[0], bottom[0]), ()):
                for right in by_ends.get((top[1], bottom[1]), ()):
                    lhs = fibre.comp[(phi, right[2])]
                    for gamma in base.cells(c, d):
                        rhs = fibre.compose(f.nat(gamma)[y2], fc.mor(left[2]), psi)
                        if lhs == rhs:
                            squares.append((top, bottom, left, right, gamma))
    check_cap("squares of " + name, len(squares), cap)

    hcomp_sq, vcomp_sq = {}, {}
    by_left: Dict[Id, list] = {}
    by_top: Dict[Id, list] = {}
    for s in squares:
        by_left.setdefault(s[2], []).append(s)
        by_top.setdefault(s[0], []).append(s)
    for s in squares:
        for t in by_left.get(s[3], ()):
            hcomp_sq[(t, s)] = (hcomp[(t[0], s[0])], hcomp[(t[1], s[1])], s[2], t[3],
                                base.hcomp[(s[4], t[4])])
        for t in by_top.get(s[1], ()):
            vcomp_sq[(t, s)] = (s[0], t[1], vcomp[(t[2], s[2])], vcomp[(t[3], s[3])],
                                base.vcomp[(t[4], s[4])])

    el = FinDblCat(
        objects=objects,
        hsrc={m: m[0] for m in hmor}, htgt={m: m[1] for m in hmor},
        hid=hid, hcomp=hcomp,
        vsrc={v: v[0] for v in vmor}, vtgt={v: v[1] for v in vmor},
        vid=vid, vcomp=vcomp,
        top={s: s[0] for s in squares}, bottom={s: s[1] for s in squares},
        left={s: s[2] for s in squares}, right={s: s[3] for s in squares},
        hcomp_sq=hcomp_sq, vcomp_sq=vcomp_sq,
        hid_sq={v: (hid[v[0]], hid[v[1]], v, v, base.id2[base.identity[v[0][0]]])
                for v in vmor},
        vid_sq={m: (m, m, vid[m[0]], vid[m[1]], base.id2[m[2]]) for m in hmor},
        name=name,
    )
    _LOG.debug("el_dbl %s: %s", name, el.size())
    return el


@typechecked
def el_2cat(f: CatPsFun, cap=None) -> Fin2Cat:
    """The 2-category of elements: the horizontal part of :func:`el_dbl`."""
    return underlying_h(el_dbl(f, cap))


@typechecked
def mor_2cat(f: CatPsFun, cap=None) -> Fin2Cat:
    """The 2-category of morphisms: vertical morphisms of :func:`el_dbl`."""
    return vertical_2cat(el_dbl(f, cap), cap)


# ---------------------------------------------------------------------------
# Hom-valued pseudo-functors
# ---------------------------------------------------------------------------

@typechecked
@convert_lookup_errors
def hom_psfun(left: PseudoFunctor2, d0: Id) -> CatPsFun:
    """``D(L-, d0)``: the fibre at C is ``hom(LC, d0)`` and ``c`` acts by
    precomposition with ``Lc``."""
    c_cat, d_cat = left.source, left.target
    if d0 not in d_cat.objects:
        raise UnknownId("Unknown object {!r} of {}".format(d0, d_cat.name))
    fibres = {c: d_cat.hom_cat(left.ob(c), d0) for c in c_cat.objects}
    functors = {}
    for m in c_cat.morphisms:
        lm = left.mor(m)
        source, target = fibres[c_cat.tgt[m]], fibres[c_cat.src[m]]
        functors[m] = Functor(
            source, target,
            {h: d_cat.comp[(h, lm)] for h in source.objects},
            {delta: d_cat.whisker_right(delta, lm) for delta in source.morphisms},
        )
    nats = {}
    for gamma in c_cat.twocells:
        fc, fd = functors[c_cat.msrc[gamma]], functors[c_cat.mtgt[gamma]]
        lg = left.cell(gamma)
        nats[gamma] = NatTrans(fc, fd, {h: d_cat.whisker_left(h, lg)
                                        for h in fc.source.objects})
    compositors = {}
    for (g, m), gm in c_cat.comp.items():
        phi = left.phi(g, m)
        start = compose_functors(functors[m], functors[g])
        compositors[(g, m)] = NatTrans(start, functors[gm],
                                       {h: d_cat.whisker_left(h, phi)
                                        for h in start.source.objects})
    return CatPsFun(c_cat, fibres, functors, nats, compositors,
                    name="{}(-,{!r})".format(left.name or "hom", d0))


@typechecked
def representable_psfun(cat: Fin2Cat, i: Id) -> CatPsFun:
    """The strict ``hom(-, i)``."""
    return hom_psfun(identity_pseudofunctor2(cat), i)


@typechecked
def el_of_hom_vs_slice_check(left: PseudoFunctor2, d0: Id, cap=None) -> Report:
    """``el(D(L-, d0))`` is the horizontal opposite of ``HL↓d0`` along the
    canonical map, compatibly with the projections to ℂ."""
    report = Report(name="el_of_hom_vs_slice_check({}, {!r})".format(left.name, d0))
    d_cat = left.target
    el = el_dbl(hom_psfun(left, d0), cap)
    coslice = coslice_dbl(hh_embed_map(left), d0, cap)
    mirrored = hop_dblcat(coslice.structure)
    hm = {m: (m[1], m[0], m[2], d_cat.inverse2(m[3])) for m in mirrored.hmor}
    vm = {v: (v[0], v[1], v[3]) for v in mirrored.vmor}
    mapping = SortMap(
        objects={o: o for o in mirrored.objects},
        morphisms=hm,
        cells={s: (hm[s[0]], hm[s[1]], vm[s[3]], vm[s[2]], s[4])
               for s in mirrored.squares},
        vmor=vm,
    )
    sub = assert_isomorphism(mirrored, el, mapping)
    report.extend(sub)
    if sub.ok:
        pi = coslice.projection
        for o in mirrored.objects:
            report.check(pi.ob(o) == o[0], "projection commutes", o)
        for m in mirrored.hmor:
            report.check(pi.hmor(m) == hm[m][2], "projection commutes", m)
        for s in mirrored.squares:
            report.check(pi.sq(s) == mapping.cells[s][4], "projection commutes", s)
    _LOG.debug("%s: ok=%s", report.name, report.ok)
    return report


# ---------------------------------------------------------------------------
# Weighted cones
# ---------------------------------------------------------------------------

@typechecked
def conical_weight(index: Fin2Cat) -> CatPsFun:
    """The constant weight at the terminal category, over ``index^op``."""
    return constant_psfun(op_2cat(index), FinCat.discrete(["*"], name="1"), name="Delta1")


def _postcompose_psfun(f: PseudoFunctor2, c: Id, base: Fin2Cat) -> CatPsFun:
    """``C(c, F-)`` as a pseudo-functor over ``base = op(I)``."""
    cat, index = f.target, f.source
    fibres = {i: cat.hom_cat(c, f.ob(i)) for i in index.objects}
    functors = {}
    for k in index.morphisms:
        fk = f.mor(k)
        source, target = fibres[index.src[k]], fibres[index.tgt[k]]
        functors[k] = Functor(source, target,
                              {h: cat.comp[(fk, h)] for h in source.objects},
                              {d: cat.whisker_left(fk, d) for d in source.morphisms})
    nats = {}
    for kappa in index.twocells:
        fc = functors[index.msrc[kappa]]
        nats[kappa] = NatTrans(fc, functors[index.mtgt[kappa]],
                               {h: cat.whisker_right(f.cell(kappa), h)
                                for h in fc.source.objects})
    compositors = {}
    for (p, q), pq in base.comp.items():
        start = compose_functors(functors[q], functors[p])
        compositors[(p, q)] = NatTrans(start, functors[pq],
                                       {h: cat.whisker_right(f.phi(q, p), h)
                                        for h in start.source.objects})
    return CatPsFun(base, fibres, functors, nats, compositors,
                    name="{}({!r},{}-)".format(cat.name, c, f.name))


@dataclass(frozen=True)
class WeightCones:
    """The weighted-cone pseudo-functor together with the cones it indexes.

    The fibre at C has objects ``0 .. n-1`` indexing ``cones[C]`` and
    morphisms ``(a, b, m)`` indexing ``modifications[(C, a, b)]``.
    """

    cones: Mapping[Id, Tuple[PsNat, ...]]
    modifications: Mapping[Tuple, Tuple[Modif, ...]]
    homs: Mapping[Id, CatPsFun]
    diagram: PseudoFunctor2
    psfun: Optional[CatPsFun] = None

    @cached_property
    def _cone_keys(self) -> Dict[Tuple, int]:
        return {(c, lam.key()): n for c, found in self.cones.items()
                for n, lam in enumerate(found)}

    @cached_property
    def _modification_keys(self) -> Dict[Tuple, int]:
        return {(c, a, b, gamma.key()): m for (c, a, b), found in self.modifications.items()
                for m, gamma in enumerate(found)}

    def index(self, c: Id, cone: PsNat) -> int:
        return self._cone_keys[(c, cone.key())]

    def morphism(self, c: Id, gamma: Modif) -> Tuple[int, int, int]:
        a, b = self.index(c, gamma.source), self.index(c, gamma.target)
        return (a, b, self._modification_keys[(c, a, b, gamma.key())])

    def precompose(self, cone: PsNat, m: Id) -> PsNat:
        """``cone∘m`` for ``m: C → C'`` and a cone at ``C'``."""
        cat = self.diagram.target
        target = self.homs[cat.src[m]]
        weight, base = cone.source, cone.source.base
        components = {}
        for i in base.objects:
            lam = cone.components[i]
            components[i] = Functor(
                weight.fibre(i), target.fibre(i),
                {w: cat.comp[(lam.ob(w), m)] for w in weight.fibre(i).objects},
                {o: cat.whisker_right(lam.mor(o), m) for o in weight.fibre(i).morphisms})
        cells = {}
        for k in base.morphisms:
            a, b = base.src[k], base.tgt[k]
            cells[k] = NatTrans(
                compose_functors(target.functor(k), components[b]),
                compose_functors(components[a], weight.functor(k)),
                {w: cat.whisker_right(cone.cells[k][w], m)
                 for w in weight.fibre(b).objects})
        return PsNat(weight, target, components, cells)

    def precompose_modification(self, gamma: Modif, m: Id) -> Modif:
        cat = self.diagram.target
        lam, mu = self.precompose(gamma.source, m), self.precompose(gamma.target, m)
        return Modif(lam, mu, {
            i: NatTrans(lam.components[i], mu.components[i],
                        {w: cat.whisker_right(comp[w], m) for w in comp.components})
            for i, comp in gamma.components.items()})

    def whisker(self, cone: PsNat, cell: Id) -> Modif:
        """``cone * γ: cone∘c ⇛ cone∘d`` for ``γ: c ⇒ d``."""
        cat = self.diagram.target
        c, d = cat.msrc[cell], cat.mtgt[cell]
        lam, mu = self.precompose(cone, c), self.precompose(cone, d)
        return Modif(lam, mu, {
            i: NatTrans(lam.components[i], mu.components[i],
                        {w: cat.whisker_left(cone.components[i].ob(w), cell)
                         for w in cone.source.fibre(i).objects})
            for i in cone.source.base.objects})


def _modification_table(c: Id, cones: List[PsNat]) -> Dict[Tuple, Tuple[Modif, ...]]:
    pairs = list(itertools.product(range(len(cones)), repeat=2))
    check_search_space("weighted-cone modifications at {!r}".format(c), len(pairs))
    return {(c, a, b): tuple(enumerate_modifications(cones[a], cones[b]))
            for a, b in pairs}


@typechecked
@convert_lookup_errors
def weight_cones(weight: CatPsFun, diagram: PseudoFunctor2, cap=None) -> WeightCones:
    """Enumerate ``Psd(I, Cat)(W, C(c, F-))`` for every object c and assemble
    the pseudo-functor ``c ↦`` that category over ℂ.

    Raises:
        BoundaryMismatch: ``weight`` is not indexed by ``op(I)``.
        SizeCapExceeded: an enumeration is above its cap.
    """
    base = op_2cat(diagram.source)
    if weight.base != base:
        raise BoundaryMismatch("Weight {} is not indexed by {}".format(weight.name, base.name))
    cat = diagram.target
    homs = {c: _postcompose_psfun(diagram, c, base) for c in cat.objects}
    cones: Dict[Id, Tuple[PsNat, ...]] = {}
    mods: Dict[Tuple, Tuple[Modif, ...]] = {}
    for c in progress(cat.objects, len(cat.objects), "weighted cones"):
        found = enumerate_psnats(weight, homs[c])
        check_cap("cones at {!r}".format(c), len(found), cap)
        cones[c] = tuple(found)
        mods.update(_modification_table(c, found))
    tables = WeightCones(cones, mods, homs, diagram)

    fibres = {}
    for c in cat.objects:
        morphisms = [(a, b, m) for (c2, a, b), ms in mods.items() if c2 == c
                     for m in range(len(ms))]
        check_cap("weighted-cone morphisms at {!r}".format(c), len(morphisms), cap)
        identity = {}
        for a, lam in enumerate(cones[c]):
            identity[a] = tables.morphism(c, identity_modification(lam))
        comp = {}
        for (a, b, m) in morphisms:
            for (b2, e, m2) in morphisms:
                if b2 != b:
                    continue
                first, second = mods[(c, a, b)][m], mods[(c, b, e)][m2]
                total = Modif(first.source, second.target,
                              {i: vcompose_nat(second.components[i], first.components[i])
                               for i in base.objects})
                comp[((b, e, m2), (a, b, m))] = tables.morphism(c, total)
        fibres[c] = FinCat(
            objects=range(len(cones[c])),
            src={x: x[0] for x in morphisms}, tgt={x: x[1] for x in morphisms},
            identity=identity, comp=comp,
            name="cones({!r})".format(c),
        )

    functors = {}
    for m in cat.morphisms:
        c, c2 = cat.src[m], cat.tgt[m]
        on_objects = {a: tables.index(c, tables.precompose(lam, m))
                      for a, lam in enumerate(cones[c2])}
        on_morphisms = {x: tables.morphism(c, tables.precompose_modification(
            mods[(c2, x[0], x[1])][x[2]], m)) for x in fibres[c2].morphisms}
        functors[m] = Functor(fibres[c2], fibres[c], on_objects, on_morphisms)
    nats = {}
    for gamma in cat.twocells:
        c, c2 = cat.cell_src(gamma), cat.cell_tgt(gamma)
        nats[gamma] = NatTrans(
            functors[cat.msrc[gamma]], functors[cat.mtgt[gamma]],
            {a: tables.morphism(c, tables.whisker(lam, gamma))
             for a, lam in enumerate(cones[c2])})
    compositors = {}
    for (g, m), gm in cat.comp.items():
        start = compose_functors(functors[m], functors[g])
        fibre = fibres[cat.src[m]]
        compositors[(g, m)] = NatTrans(start, functors[gm],
                                       {a: fibre.identity[functors[gm].ob(a)]
                                        for a in start.source.objects})
    psfun = CatPsFun(cat, fibres, functors, nats, compositors,
                     name="Cone({},{})".format(weight.name, diagram.name))
    _LOG.debug("weight_cones %s: %s", psfun.name,
               {c: len(cones[c]) for c in cat.objects})
    return replace(tables, psfun=psfun)


@typechecked
def weightcone_psfun(weight: CatPsFun, diagram: PseudoFunctor2, cap=None) -> CatPsFun:
    """``c ↦ Psd(I, Cat)(W, C(c, F-))`` as a pseudo-functor over ℂ."""
    return weight_cones(weight, diagram, cap).psfun


# ---------------------------------------------------------------------------
# Conical cones, built directly
# ---------------------------------------------------------------------------

def _whisker_cone(cat: Fin2Cat, cone: PsNat2, x: Id) -> Tuple[Dict, Dict]:
    """Components and 2-cells of ``cone∘Δx``."""
    return ({i: cat.comp[(k, x)] for i, k in cone.components.items()},
            {k: cat.whisker_right(cell, x) for k, cell in cone.cells.items()})


def _cone_modifications(diagram: PseudoFunctor2, source: Tuple[Dict, Dict],
                        target: PsNat2, invertible: bool) -> List[Tuple[Id, ...]]:
    """Tuples ``Γ`` indexed by the objects of I with ``Γ_i: λ_i ⇒ μ_i`` and
    ``μ_k·(Fk*Γ_i) = Γ_j·λ_k``."""
    cat, index = diagram.target, diagram.source
    comps, cells = source
    per_object = []
    for i in index.objects:
        options = cat.cells(comps[i], target.components[i])
        if invertible:
            options = tuple(c for c in options if cat.is_invertible2(c))
        per_object.append(options)
    found = []
    for gamma in itertools.product(*per_object):
        table = dict(zip(index.objects, gamma))
        if all(cat.vcomp[(target.cells[k],
                          cat.whisker_left(diagram.mor(k), table[index.src[k]]))]
               == cat.vcomp[(table[index.tgt[k]], cells[k])]
               for k in index.morphisms):
            found.append(tuple(gamma))
    return found


@typechecked
@convert_lookup_errors
def cone_dbl(diagram: PseudoFunctor2, cap=None) -> Tuple[FinDblCat, Dict[Id, Tuple[PsNat2, ...]]]:
    """The double category ``HΔ↓F`` of conical cones over ``diagram``.

    Objects are ``(X, n)`` for the n-th cone ``ΔX ⇒ F``; a horizontal
    morphism ``(X, n) → (X', n')`` is ``(src, tgt, x, Γ)`` with ``Γ`` an
    invertible modification ``λ'∘Δx ⇛ λ``. Returns the double category and
    the cones per apex.
    """
    cat, index = diagram.target, diagram.source
    name = "cones({})".format(diagram.name)
    cones = {x: tuple(enumerate_psnats2(constant_pseudofunctor2(index, cat, x), diagram))
             for x in cat.objects}
    objects = [(x, n) for x in cat.objects for n in range(len(cones[x]))]
    check_cap("objects of " + name, len(objects), cap)

    def cone(o):
        return cones[o[0]][o[1]]

    hmor = []
    for o in objects:
        for o2 in objects:
            for x in cat.hom(o[0], o2[0]):
                shifted = _whisker_cone(cat, cone(o2), x)
                for gamma in _cone_modifications(diagram, shifted, cone(o), True):
                    hmor.append((o, o2, x, gamma))
    check_cap("horizontal morphisms of " + name, len(hmor), cap)

    vmor = []
    for o in objects:
        lam = cone(o)
        for n in range(len(cones[o[0]])):
            o2 = (o[0], n)
            own = (lam.components, lam.cells)
            for gamma in _cone_modifications(diagram, own, cone(o2), False):
                vmor.append((o, o2, gamma))
    check_cap("vertical morphisms of " + name, len(vmor), cap)

    objs_i = index.objects
    hid = {o: (o, o, cat.identity[o[0]],
               tuple(cat.id2[cone(o).components[i]] for i in objs_i)) for o in objects}
    hcomp = {}
    for m in hmor:
        for m2 in hmor:
            if m2[0] == m[1]:
                psi = tuple(cat.vcomp[(m[3][n], cat.whisker_right(m2[3][n], m[2]))]
                            for n in range(len(objs_i)))
                hcomp[(m2, m)] = (m[0], m2[1], cat.comp[(m2[2], m[2])], psi)
    vid = {o: (o, o, hid[o][3]) for o in objects}
    vcomp = {}
    for v in vmor:
        for v2 in vmor:
            if v2[0] == v[1]:
                vcomp[(v2, v)] = (v[0], v2[1], tuple(
                    cat.vcomp[(v2[2][n], v[2][n])] for n in range(len(objs_i))))

    squares = []
    for top in hmor:
        for bottom in hmor:
            for left in vmor:
                if (left[0], left[1]) != (top[0], bottom[0]):
                    continue
                for right in vmor:
                    if (right[0], right[1]) != (top[1], bottom[1]):
                        continue
                    for sigma in cat.cells(top[2], bottom[2]):
                        if all(cat.vcomp[(left[2][n], top[3][n])]
                               == cat.vcomp[(bottom[3][n],
                                             cat.hcomp[(right[2][n], sigma)])]
                               for n in range(len(objs_i))):
                            squares.append((top, bottom, left, right, sigma))
    check_cap("squares of " + name, len(squares), cap)

    hcomp_sq, vcomp_sq = {}, {}
    for s in squares:
        for t in squares:
            if t[2] == s[3]:
                hcomp_sq[(t, s)] = (hcomp[(t[0], s[0])], hcomp[(t[1], s[1])], s[2], t[3],
                                    cat.hcomp[(t[4], s[4])])
            if t[0] == s[1]:
                vcomp_sq[(t, s)] = (s[0], t[1], vcomp[(t[2], s[2])], vcomp[(t[3], s[3])],
                                    cat.vcomp[(t[4], s[4])])

    dbl = FinDblCat(
        objects=objects,
        hsrc={m: m[0] for m in hmor}, htgt={m: m[1] for m in hmor},
        hid=hid, hcomp=hcomp,
        vsrc={v: v[0] for v in vmor}, vtgt={v: v[1] for v in vmor},
        vid=vid, vcomp=vcomp,
        top={s: s[0] for s in squares}, bottom={s: s[1] for s in squares},
        left={s: s[2] for s in squares}, right={s: s[3] for s in squares},
        hcomp_sq=hcomp_sq, vcomp_sq=vcomp_sq,
        hid_sq={v: (hid[v[0]], hid[v[1]], v, v, cat.id2[cat.identity[v[0][0]]])
                for v in vmor},
        vid_sq={m: (m, m, vid[m[0]], vid[m[1]], cat.id2[m[2]]) for m in hmor},
        name=name,
    )
    _LOG.debug("cone_dbl %s: %s", name, dbl.size())
    return dbl, cones
