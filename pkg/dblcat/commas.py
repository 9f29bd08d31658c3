"""
Pseudo-commas and pseudo-slices, built directly from their sorts.

For ``G: ℂ → 𝔸`` and ``F: 𝔹 → 𝔸`` the comma ``G↓F`` has

* objects ``(C, B, f)`` with ``f: GC → FB`` horizontal;
* horizontal morphisms ``(src, tgt, c, b, ψ)`` where ``ψ`` is a vertically
  invertible globular square ``f'∘Gc ⇒ Fb∘f``;
* vertical morphisms ``(src, tgt, w, u, γ)`` where ``γ`` has top ``f``,
  bottom ``g``, left ``Gw`` and right ``Fu``;
* squares ``(top, bottom, left, right, σ, β)`` whose pasting agrees:
  ``(Fβ|γ_left)·ψ_top = ψ_bottom·(γ_right|Gσ)``.

Slices are commas with an object leg, relabelled so the terminal leg
disappears from the ids.

"""
from dataclasses import dataclass
from typing import Dict, Tuple, Union

from typeguard import typechecked

from dblcat.config import check_cap
from dblcat.constructions import (object_functor, object_functor_2, product_2,
                                  product_dbl, underlying_h, underlying_h_map,
                                  vertical_2cat, vertical_2cat_map)
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.report import Report
from dblcat.core.sortmap import SortMap, transport
from dblcat.core.validate import assert_isomorphism
from dblcat.exceptions import BoundaryMismatch, convert_lookup_errors
from dblcat.logs import get_logger
from dblcat.maps.pseudo import (PsDblFunctor, PseudoFunctor2, strict_dbl_functor,
                                strict_functor2)
from dblcat.types import Id

__all__ = [
    "CommaResult",
    "comma_dbl",
    "slice_dbl",
    "coslice_dbl",
    "comma_2",
    "slice_2",
    "coslice_2",
    "comma_preservation_check",
]

_LOG = get_logger("commas")


@dataclass(frozen=True)
class CommaResult:
    """A comma structure with its strict projection.

    ``projection`` lands in the product of the two leg sources for a comma
    and in the non-object leg's source for a slice or coslice.
    """

    structure: Union[Fin2Cat, FinDblCat]
    projection: Union[PseudoFunctor2, PsDblFunctor]
    legs: Tuple


def _group(items, key) -> Dict:
    index: Dict = {}
    for item in items:
        index.setdefault(key(item), []).append(item)
    return index


# ---------------------------------------------------------------------------
# Double categories
# ---------------------------------------------------------------------------

@typechecked
@convert_lookup_errors
def comma_dbl(g: PsDblFunctor, f: PsDblFunctor, cap=None) -> CommaResult:
    """The pseudo-comma ``g↓f`` with its projection to ``ℂ × 𝔹``.

    Raises:
        BoundaryMismatch: the legs have different codomains.
        SizeCapExceeded: a sort of the comma is above the cap.
    """
    if g.target != f.target:
        raise BoundaryMismatch("Comma legs {} and {} have different codomains".format(
            g.name, f.name))
    a, c_cat, b_cat = g.target, g.source, f.source
    name = "{}|{}".format(g.name, f.name)

    objects = [(c, b, h) for c in c_cat.objects for b in b_cat.objects
               for h in a.hhom(g.ob(c), f.ob(b))]
    check_cap("objects of " + name, len(objects), cap)

    hmor = []
    for o in objects:
        for o2 in objects:
            for x in c_cat.hhom(o[0], o2[0]):
                for y in b_cat.hhom(o[1], o2[1]):
                    top = a.hcomp[(o2[2], g.hmor(x))]
                    bottom = a.hcomp[(f.hmor(y), o[2])]
                    for psi in a.globular(top, bottom):
                        if a.vertical_inverse(psi) is not None:
                            hmor.append((o, o2, x, y, psi))
    check_cap("horizontal morphisms of " + name, len(hmor), cap)

    vmor = []
    for o in objects:
        for o2 in objects:
            for w in c_cat.vhom(o[0], o2[0]):
                for u in b_cat.vhom(o[1], o2[1]):
                    for gamma in a.with_boundary(o[2], o2[2], g.vmor(w), f.vmor(u)):
                        vmor.append((o, o2, w, u, gamma))
    check_cap("vertical morphisms of " + name, len(vmor), cap)

    hid = {o: (o, o, c_cat.hid[o[0]], b_cat.hid[o[1]], a.vid_sq[o[2]]) for o in objects}
    hcomp = {}
    by_src = _group(hmor, lambda m: m[0])
    for m1 in hmor:
        o, o1, x, y, psi = m1
        for m2 in by_src.get(o1, ()):
            _, o2, x2, y2, psi2 = m2
            s1 = a.hcomp_sq[(a.vid_sq[o2[2]], a.vertical_inverse(g.phi(x2, x)))]
            s2 = a.hcomp_sq[(psi2, a.vid_sq[g.hmor(x)])]
            s3 = a.hcomp_sq[(a.vid_sq[f.hmor(y2)], psi)]
            s4 = a.hcomp_sq[(f.phi(y2, y), a.vid_sq[o[2]])]
            hcomp[(m2, m1)] = (o, o2, c_cat.hcomp[(x2, x)], b_cat.hcomp[(y2, y)],
                               a.vcompose_sq(s4, s3, s2, s1))

    vid = {o: (o, o, c_cat.vid[o[0]], b_cat.vid[o[1]], a.vid_sq[o[2]]) for o in objects}
    vcomp = {}
    vby_src = _group(vmor, lambda v: v[0])
    for v1 in vmor:
        for v2 in vby_src.get(v1[1], ()):
            vcomp[(v2, v1)] = (v1[0], v2[1], c_cat.vcomp[(v2[2], v1[2])],
                               b_cat.vcomp[(v2[3], v1[3])], a.vcomp_sq[(v2[4], v1[4])])

    squares = []
    vby_ends = _group(vmor, lambda v: (v[0], v[1]))
    for top in hmor:
        for bottom in hmor:
            for left in vby_ends.get((top[0], bottom[0]), ()):
                for right in vby_ends.get((top[1], bottom[1]), ()):
                    for sigma in c_cat.with_boundary(top[2], bottom[2], left[2], right[2]):
                        for beta in b_cat.with_boundary(top[3], bottom[3], left[3], right[3]):
                            lhs = a.vcomp_sq[(a.hcomp_sq[(f.sq(beta), left[4])], top[4])]
                            rhs = a.vcomp_sq[(bottom[4], a.hcomp_sq[(right[4], g.sq(sigma))])]
                            if lhs == rhs:
                                squares.append((top, bottom, left, right, sigma, beta))
    check_cap("squares of " + name, len(squares), cap)

    hcomp_sq, vcomp_sq = {}, {}
    by_left, by_top = _group(squares, lambda s: s[2]), _group(squares, lambda s: s[0])
    for s in squares:
        for t in by_left.get(s[3], ()):
            hcomp_sq[(t, s)] = (hcomp[(t[0], s[0])], hcomp[(t[1], s[1])], s[2], t[3],
                                c_cat.hcomp_sq[(t[4], s[4])], b_cat.hcomp_sq[(t[5], s[5])])
        for t in by_top.get(s[1], ()):
            vcomp_sq[(t, s)] = (s[0], t[1], vcomp[(t[2], s[2])], vcomp[(t[3], s[3])],
                                c_cat.vcomp_sq[(t[4], s[4])], b_cat.vcomp_sq[(t[5], s[5])])

    comma = FinDblCat(
        objects=objects,
        hsrc={m: m[0] for m in hmor}, htgt={m: m[1] for m in hmor},
        hid=hid, hcomp=hcomp,
        vsrc={v: v[0] for v in vmor}, vtgt={v: v[1] for v in vmor},
        vid=vid, vcomp=vcomp,
        top={s: s[0] for s in squares}, bottom={s: s[1] for s in squares},
        left={s: s[2] for s in squares}, right={s: s[3] for s in squares},
        hcomp_sq=hcomp_sq, vcomp_sq=vcomp_sq,
        hid_sq={v: (hid[v[0]], hid[v[1]], v, v, c_cat.hid_sq[v[2]], b_cat.hid_sq[v[3]])
                for v in vmor},
        vid_sq={m: (m, m, vid[m[0]], vid[m[1]], c_cat.vid_sq[m[2]], b_cat.vid_sq[m[3]])
                for m in hmor},
        name=name,
    )
    _LOG.debug("comma_dbl %s: %s", name, comma.size())
    projection = strict_dbl_functor(
        comma, product_dbl(c_cat, b_cat, cap),
        {o: (o[0], o[1]) for o in objects},
        {m: (m[2], m[3]) for m in hmor},
        {v: (v[2], v[3]) for v in vmor},
        {s: (s[4], s[5]) for s in squares},
        name="Pi",
    )
    return CommaResult(comma, projection, (g, f))


def _drop_leg_dbl(comma: FinDblCat, leg: int) -> SortMap:
    """Relabel a comma with a terminal leg at position ``leg`` (0 or 1)."""
    keep = 1 - leg
    obj = {o: (o[keep], o[2]) for o in comma.objects}
    hm = {m: (obj[m[0]], obj[m[1]], m[2 + keep], m[4]) for m in comma.hmor}
    vm = {v: (obj[v[0]], obj[v[1]], v[2 + keep], v[4]) for v in comma.vmor}
    sq = {s: (hm[s[0]], hm[s[1]], vm[s[2]], vm[s[3]], s[4 + keep]) for s in comma.squares}
    return SortMap(objects=obj, morphisms=hm, cells=sq, vmor=vm)


@typechecked
def slice_dbl(x: Id, f: PsDblFunctor, cap=None) -> CommaResult:
    """The pseudo-slice ``x↓f``: objects ``(B, f)``, horizontal morphisms
    ``(src, tgt, b, ψ)``, vertical morphisms ``(src, tgt, u, γ)`` and squares
    ``(top, bottom, left, right, β)``."""
    comma = comma_dbl(object_functor(f.target, x), f, cap).structure
    relabel = _drop_leg_dbl(comma, 0)
    structure = transport(comma, relabel, name="{!r}|{}".format(x, f.name))
    projection = strict_dbl_functor(
        structure, f.source,
        {o: o[0] for o in structure.objects},
        {m: m[2] for m in structure.hmor},
        {v: v[2] for v in structure.vmor},
        {s: s[4] for s in structure.squares},
        name="Pi",
    )
    return CommaResult(structure, projection, (x, f))


@typechecked
def coslice_dbl(g: PsDblFunctor, x: Id, cap=None) -> CommaResult:
    """The pseudo-slice ``g↓x`` with the object on the right."""
    comma = comma_dbl(g, object_functor(g.target, x), cap).structure
    relabel = _drop_leg_dbl(comma, 1)
    structure = transport(comma, relabel, name="{}|{!r}".format(g.name, x))
    projection = strict_dbl_functor(
        structure, g.source,
        {o: o[0] for o in structure.objects},
        {m: m[2] for m in structure.hmor},
        {v: v[2] for v in structure.vmor},
        {s: s[4] for s in structure.squares},
        name="Pi",
    )
    return CommaResult(structure, projection, (g, x))


# ---------------------------------------------------------------------------
# 2-categories
# ---------------------------------------------------------------------------

@typechecked
@convert_lookup_errors
def comma_2(g: PseudoFunctor2, f: PseudoFunctor2, cap=None) -> CommaResult:
    """The pseudo-comma of 2-categories.

    Morphisms are ``(src, tgt, c, b, ψ)`` with ``ψ: f'∘Gc ⇒ Fb∘f``
    invertible; 2-cells are ``(src, tgt, σ, β)`` with
    ``(Fβ*f)·ψ = ψ'·(f'*Gσ)``.
    """
    if g.target != f.target:
        raise BoundaryMismatch("Comma legs {} and {} have different codomains".format(
            g.name, f.name))
    a, c_cat, b_cat = g.target, g.source, f.source
    name = "{}|{}".format(g.name, f.name)

    objects = [(c, b, h) for c in c_cat.objects for b in b_cat.objects
               for h in a.hom(g.ob(c), f.ob(b))]
    check_cap("objects of " + name, len(objects), cap)

    morphisms = []
    for o in objects:
        for o2 in objects:
            for x in c_cat.hom(o[0], o2[0]):
                for y in b_cat.hom(o[1], o2[1]):
                    for psi in a.cells(a.comp[(o2[2], g.mor(x))], a.comp[(f.mor(y), o[2])]):
                        if a.is_invertible2(psi):
                            morphisms.append((o, o2, x, y, psi))
    check_cap("morphisms of " + name, len(morphisms), cap)

    identity = {o: (o, o, c_cat.identity[o[0]], b_cat.identity[o[1]], a.id2[o[2]])
                for o in objects}
    comp = {}
    by_src = _group(morphisms, lambda m: m[0])
    for m1 in morphisms:
        o, o1, x, y, psi = m1
        for m2 in by_src.get(o1, ()):
            _, o2, x2, y2, psi2 = m2
            psi3 = a.vcompose(
                a.whisker_right(f.phi(y2, y), o[2]),
                a.whisker_left(f.mor(y2), psi),
                a.whisker_right(psi2, g.mor(x)),
                a.whisker_left(o2[2], a.inverse2(g.phi(x2, x))),
            )
            comp[(m2, m1)] = (o, o2, c_cat.comp[(x2, x)], b_cat.comp[(y2, y)], psi3)

    cells = []
    by_ends = _group(morphisms, lambda m: (m[0], m[1]))
    for m in morphisms:
        for m2 in by_ends[(m[0], m[1])]:
            h, h2 = m[0][2], m[1][2]
            for sigma in c_cat.cells(m[2], m2[2]):
                for beta in b_cat.cells(m[3], m2[3]):
                    lhs = a.vcomp[(a.whisker_right(f.cell(beta), h), m[4])]
                    rhs = a.vcomp[(m2[4], a.whisker_left(h2, g.cell(sigma)))]
                    if lhs == rhs:
                        cells.append((m, m2, sigma, beta))
    check_cap("2-cells of " + name, len(cells), cap)

    vcomp, hcomp = {}, {}
    cells_from = _group(cells, lambda k: k[0])
    cells_at = _group(cells, lambda k: k[0][0])
    for k in cells:
        for k2 in cells_from.get(k[1], ()):
            vcomp[(k2, k)] = (k[0], k2[1], c_cat.vcomp[(k2[2], k[2])],
                              b_cat.vcomp[(k2[3], k[3])])
        for k2 in cells_at.get(k[0][1], ()):
            hcomp[(k2, k)] = (comp[(k2[0], k[0])], comp[(k2[1], k[1])],
                              c_cat.hcomp[(k2[2], k[2])], b_cat.hcomp[(k2[3], k[3])])

    comma = Fin2Cat(
        objects=objects,
        src={m: m[0] for m in morphisms}, tgt={m: m[1] for m in morphisms},
        identity=identity, comp=comp,
        msrc={k: k[0] for k in cells}, mtgt={k: k[1] for k in cells},
        id2={m: (m, m, c_cat.id2[m[2]], b_cat.id2[m[3]]) for m in morphisms},
        vcomp=vcomp, hcomp=hcomp,
        name=name,
    )
    projection = strict_functor2(
        comma, product_2(c_cat, b_cat, cap),
        {o: (o[0], o[1]) for o in objects},
        {m: (m[2], m[3]) for m in morphisms},
        {k: (k[2], k[3]) for k in cells},
        name="pi",
    )
    return CommaResult(comma, projection, (g, f))


def _drop_leg_2(comma: Fin2Cat, leg: int) -> SortMap:
    keep = 1 - leg
    obj = {o: (o[keep], o[2]) for o in comma.objects}
    mor = {m: (obj[m[0]], obj[m[1]], m[2 + keep], m[4]) for m in comma.morphisms}
    cell = {k: (mor[k[0]], mor[k[1]], k[2 + keep]) for k in comma.twocells}
    return SortMap(objects=obj, morphisms=mor, cells=cell)


def _leg_projection(structure: Fin2Cat, target: Fin2Cat) -> PseudoFunctor2:
    return strict_functor2(
        structure, target,
        {o: o[0] for o in structure.objects},
        {m: m[2] for m in structure.morphisms},
        {k: k[2] for k in structure.twocells},
        name="pi",
    )


@typechecked
def slice_2(x: Id, f: PseudoFunctor2, cap=None) -> CommaResult:
    """The pseudo-slice ``x↓f``: objects ``(B, f)``, morphisms
    ``(src, tgt, b, ψ)`` and 2-cells ``(src, tgt, β)``."""
    comma = comma_2(object_functor_2(f.target, x), f, cap).structure
    structure = transport(comma, _drop_leg_2(comma, 0), name="{!r}|{}".format(x, f.name))
    return CommaResult(structure, _leg_projection(structure, f.source), (x, f))


@typechecked
def coslice_2(g: PseudoFunctor2, x: Id, cap=None) -> CommaResult:
    comma = comma_2(g, object_functor_2(g.target, x), cap).structure
    structure = transport(comma, _drop_leg_2(comma, 1), name="{}|{!r}".format(g.name, x))
    return CommaResult(structure, _leg_projection(structure, g.source), (g, x))


# ---------------------------------------------------------------------------
# H and V commute with commas
# ---------------------------------------------------------------------------

def _unzip(cell: Tuple) -> Tuple[Tuple, Tuple]:
    return tuple(p[0] for p in cell), tuple(p[1] for p in cell)


@typechecked
def comma_preservation_check(g: PsDblFunctor, f: PsDblFunctor, cap=None) -> Report:
    """``H(g↓f) ≅ Hg↓Hf`` and ``𝒱(g↓f) ≅ 𝒱g↓𝒱f`` via the canonical maps,
    both commuting with the projections."""
    report = Report(name="comma_preservation_check({}, {})".format(g.name, f.name))
    result = comma_dbl(g, f, cap)
    comma, pi = result.structure, result.projection
    a = g.target

    h_side = underlying_h(comma)
    h_comma = comma_2(underlying_h_map(g), underlying_h_map(f), cap)
    h_map = SortMap(
        objects={o: o for o in h_side.objects},
        morphisms={m: m for m in h_side.morphisms},
        cells={s: (s[0], s[1], s[4], s[5]) for s in h_side.twocells},
    )
    sub = assert_isomorphism(h_side, h_comma.structure, h_map)
    report.extend(sub, "H")
    if sub.ok:
        h_pi = h_comma.projection
        for x in h_side.objects:
            report.check(pi.ob(x) == h_pi.ob(x), "H: projection commutes", x)
        for m in h_side.morphisms:
            report.check(pi.hmor(m) == h_pi.mor(m), "H: projection commutes", m)
        for s in h_side.twocells:
            report.check(pi.sq(s) == h_pi.cell(h_map.cells[s]), "H: projection commutes", s)

    v_side = vertical_2cat(comma, cap)
    v_comma = comma_2(vertical_2cat_map(g, cap), vertical_2cat_map(f, cap), cap)
    objects = {v: (v[2], v[3], v[4]) for v in v_side.objects}
    morphisms = {}
    for s in v_side.morphisms:
        top, bottom, left, right, sigma, beta = s
        big_psi = (a.hcomp_sq[(right[4], g.sq(sigma))], a.hcomp_sq[(f.sq(beta), left[4])],
                   top[4], bottom[4])
        morphisms[s] = (objects[left], objects[right], sigma, beta, big_psi)
    cells = {}
    for k in v_side.twocells:
        s, s2, k0, k1 = k
        cells[k] = (morphisms[s], morphisms[s2],
                    (s[4], s2[4], k0[4], k1[4]), (s[5], s2[5], k0[5], k1[5]))
    v_map = SortMap(objects=objects, morphisms=morphisms, cells=cells)
    sub = assert_isomorphism(v_side, v_comma.structure, v_map)
    report.extend(sub, "V")
    if sub.ok:
        v_pi = v_comma.projection
        for x in v_side.objects:
            report.check(pi.vmor(x) == v_pi.ob(objects[x]), "V: projection commutes", x)
        for m in v_side.morphisms:
            report.check(pi.sq(m) == v_pi.mor(morphisms[m]), "V: projection commutes", m)
        for k in v_side.twocells:
            image = tuple(pi.sq(part) for part in k)
            report.check(_unzip(image) == v_pi.cell(cells[k]), "V: projection commutes", k)
    _LOG.debug("%s: ok=%s", report.name, report.ok)
    return report
