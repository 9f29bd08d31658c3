"""
Structure-to-structure constructions and their actions on maps.

* :func:`hh_embed`: the horizontal double category of a 2-category
  (vertical morphisms are identities, named by their object).
* :func:`underlying_h`: the underlying horizontal 2-category (globular
  squares as 2-cells).
* :func:`vertical_2cat`: the 2-category of vertical morphisms and squares.
* :func:`ar_star`: the hom-wise arrow-category 2-category.

Derived ids are deterministic functions of the input ids, so identities
between constructions hold as literal table equality: a 2-cell of
``vertical_2cat`` and of ``ar_star`` is ``(α, α', σ0, σ1)``.

"""
from typing import Dict, Iterable, Tuple

from typeguard import typechecked

from dblcat.config import check_cap
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat, arrow_category
from dblcat.core.findblcat import FinDblCat
from dblcat.exceptions import convert_lookup_errors
from dblcat.logs import get_logger
from dblcat.maps.pseudo import (PsDblFunctor, PseudoFunctor2, strict_dbl_functor,
                                strict_functor2)
from dblcat.types import Id

__all__ = [
    "hh_embed",
    "underlying_h",
    "vertical_2cat",
    "ar_star",
    "op_2cat",
    "hop_dblcat",
    "vertical_embed",
    "product_2",
    "product_dbl",
    "projection_2",
    "projection_dbl",
    "terminal_2cat",
    "terminal_dbl",
    "object_functor",
    "object_functor_2",
    "hh_embed_map",
    "underlying_h_map",
    "vertical_2cat_map",
    "ar_star_map",
    "op_psfun",
]

_LOG = get_logger("constructions")


def _capped(structure, cap=None):
    for sort, size in structure.size().items():
        check_cap("{} of {}".format(sort, structure.name), size, cap)
    _LOG.debug("built %s %s", structure.name, structure.size())
    return structure


# ---------------------------------------------------------------------------
# Objects
# ---------------------------------------------------------------------------

@typechecked
def hh_embed(cat: Fin2Cat) -> FinDblCat:
    """ℍA: horizontal morphisms are 1-cells, squares are 2-cells."""
    return FinDblCat(
        objects=cat.objects,
        hsrc=cat.src, htgt=cat.tgt, hid=cat.identity, hcomp=cat.comp,
        vsrc={x: x for x in cat.objects}, vtgt={x: x for x in cat.objects},
        vid={x: x for x in cat.objects}, vcomp={(x, x): x for x in cat.objects},
        top=cat.msrc, bottom=cat.mtgt,
        left={c: cat.cell_src(c) for c in cat.twocells},
        right={c: cat.cell_tgt(c) for c in cat.twocells},
        hcomp_sq=cat.hcomp, vcomp_sq=cat.vcomp,
        hid_sq={x: cat.id2[cat.identity[x]] for x in cat.objects},
        vid_sq=cat.id2,
        name="H({})".format(cat.name),
    )


@typechecked
def underlying_h(dbl: FinDblCat) -> Fin2Cat:
    """H𝔸: globular squares become 2-cells, ids unchanged."""
    cells = [s for s in dbl.squares if dbl.is_globular(s)]
    cell_set = set(cells)
    return Fin2Cat(
        objects=dbl.objects,
        src=dbl.hsrc, tgt=dbl.htgt, identity=dbl.hid, comp=dbl.hcomp,
        msrc={s: dbl.top[s] for s in cells},
        mtgt={s: dbl.bottom[s] for s in cells},
        id2=dbl.vid_sq,
        vcomp={k: v for k, v in dbl.vcomp_sq.items()
               if k[0] in cell_set and k[1] in cell_set},
        hcomp={k: v for k, v in dbl.hcomp_sq.items()
               if k[0] in cell_set and k[1] in cell_set},
        name="H{}".format(dbl.name),
    )


@typechecked
def vertical_2cat(dbl: FinDblCat, cap=None) -> Fin2Cat:
    """𝒱𝔸: objects the vertical morphisms, 1-cells the squares, and 2-cells
    the pairs of globular squares ``σ0: top α ⇒ top α'`` and
    ``σ1: bottom α ⇒ bottom α'`` with ``α'·σ0 = σ1·α``."""
    cells = []
    for alpha in dbl.squares:
        for beta in dbl.squares:
            if dbl.left[alpha] != dbl.left[beta] or dbl.right[alpha] != dbl.right[beta]:
                continue
            for s0 in dbl.globular(dbl.top[alpha], dbl.top[beta]):
                for s1 in dbl.globular(dbl.bottom[alpha], dbl.bottom[beta]):
                    if dbl.vcomp_sq[(beta, s0)] == dbl.vcomp_sq[(s1, alpha)]:
                        cells.append((alpha, beta, s0, s1))
    check_cap("2-cells of V({})".format(dbl.name), len(cells), cap)
    by_source: Dict[Id, list] = {}
    for c in cells:
        by_source.setdefault(c[0], []).append(c)
    vcomp = {}
    for (a, b, s0, s1) in cells:
        for (b2, c2, t0, t1) in by_source.get(b, ()):
            vcomp[((b2, c2, t0, t1), (a, b, s0, s1))] = (
                a, c2, dbl.vcomp_sq[(t0, s0)], dbl.vcomp_sq[(t1, s1)])
    hcomp = {}
    for (a, b, s0, s1) in cells:
        for (a2, b2, t0, t1) in cells:
            if dbl.right[a] == dbl.left[a2]:
                hcomp[((a2, b2, t0, t1), (a, b, s0, s1))] = (
                    dbl.hcomp_sq[(a2, a)], dbl.hcomp_sq[(b2, b)],
                    dbl.hcomp_sq[(t0, s0)], dbl.hcomp_sq[(t1, s1)])
    return _capped(Fin2Cat(
        objects=dbl.vmor,
        src=dbl.left, tgt=dbl.right, identity=dbl.hid_sq, comp=dbl.hcomp_sq,
        msrc={c: c[0] for c in cells}, mtgt={c: c[1] for c in cells},
        id2={s: (s, s, dbl.vid_sq[dbl.top[s]], dbl.vid_sq[dbl.bottom[s]])
             for s in dbl.squares},
        vcomp=vcomp, hcomp=hcomp,
        name="V{}".format(dbl.name),
    ), cap)


@typechecked
def ar_star(cat: Fin2Cat, cap=None) -> Fin2Cat:
    """Ar*A: same objects, hom-categories the arrow categories of the homs."""
    cells, vcomp = [], {}
    for a in cat.objects:
        for b in cat.objects:
            arrows = arrow_category(cat.hom_cat(a, b))
            cells.extend(arrows.morphisms)
            vcomp.update(arrows.comp)
    check_cap("2-cells of Ar*({})".format(cat.name), len(cells), cap)
    hcomp = {}
    for (a, b, s0, s1) in cells:
        for (a2, b2, t0, t1) in cells:
            if cat.cell_tgt(a) == cat.cell_src(a2):
                hcomp[((a2, b2, t0, t1), (a, b, s0, s1))] = (
                    cat.hcomp[(a2, a)], cat.hcomp[(b2, b)],
                    cat.hcomp[(t0, s0)], cat.hcomp[(t1, s1)])
    return _capped(Fin2Cat(
        objects=cat.objects,
        src={c: cat.cell_src(c) for c in cat.twocells},
        tgt={c: cat.cell_tgt(c) for c in cat.twocells},
        identity={x: cat.id2[cat.identity[x]] for x in cat.objects},
        comp=cat.hcomp,
        msrc={c: c[0] for c in cells}, mtgt={c: c[1] for c in cells},
        id2={c: (c, c, cat.id2[cat.msrc[c]], cat.id2[cat.mtgt[c]]) for c in cat.twocells},
        vcomp=vcomp, hcomp=hcomp,
        name="V{}".format(hh_embed(cat).name),
    ), cap)


@typechecked
def op_2cat(cat: Fin2Cat) -> Fin2Cat:
    """Reverse the 1-cells; 2-cells keep their direction."""
    return Fin2Cat(
        objects=cat.objects,
        src=cat.tgt, tgt=cat.src, identity=cat.identity,
        comp={(f, g): h for (g, f), h in cat.comp.items()},
        msrc=cat.msrc, mtgt=cat.mtgt, id2=cat.id2, vcomp=cat.vcomp,
        hcomp={(a, b): c for (b, a), c in cat.hcomp.items()},
        name=_toggle(cat.name, "op"),
    )


@typechecked
def hop_dblcat(dbl: FinDblCat) -> FinDblCat:
    """Reverse the horizontal morphisms; squares swap left and right."""
    return FinDblCat(
        objects=dbl.objects,
        hsrc=dbl.htgt, htgt=dbl.hsrc, hid=dbl.hid,
        hcomp={(a, b): c for (b, a), c in dbl.hcomp.items()},
        vsrc=dbl.vsrc, vtgt=dbl.vtgt, vid=dbl.vid, vcomp=dbl.vcomp,
        top=dbl.top, bottom=dbl.bottom, left=dbl.right, right=dbl.left,
        hcomp_sq={(s, t): r for (t, s), r in dbl.hcomp_sq.items()},
        vcomp_sq=dbl.vcomp_sq, hid_sq=dbl.hid_sq, vid_sq=dbl.vid_sq,
        name=_toggle(dbl.name, "hop"),
    )


def _toggle(name: str, suffix: str) -> str:
    marker = "^" + suffix
    return name[:-len(marker)] if name.endswith(marker) else name + marker


@typechecked
def vertical_embed(cat: FinCat) -> FinDblCat:
    """𝕍C: only identity horizontals (named by their object); squares are
    the identity squares of vertical morphisms, named by the morphism."""
    return FinDblCat(
        objects=cat.objects,
        hsrc={x: x for x in cat.objects}, htgt={x: x for x in cat.objects},
        hid={x: x for x in cat.objects}, hcomp={(x, x): x for x in cat.objects},
        vsrc=cat.src, vtgt=cat.tgt, vid=cat.identity, vcomp=cat.comp,
        top={u: cat.src[u] for u in cat.morphisms},
        bottom={u: cat.tgt[u] for u in cat.morphisms},
        left={u: u for u in cat.morphisms}, right={u: u for u in cat.morphisms},
        hcomp_sq={(u, u): u for u in cat.morphisms},
        vcomp_sq=cat.comp,
        hid_sq={u: u for u in cat.morphisms},
        vid_sq={x: cat.identity[x] for x in cat.objects},
        name="V{}".format(cat.name),
    )


def _pairs(left: Iterable[Id], right: Iterable[Id]) -> Tuple[Tuple[Id, Id], ...]:
    return tuple((a, b) for a in left for b in right)


def _pair_table(t1, t2) -> Dict:
    return {(k1, k2): (v1, v2) for k1, v1 in t1.items() for k2, v2 in t2.items()}


def _pair_comp(t1, t2) -> Dict:
    return {((g1, g2), (f1, f2)): (v1, v2)
            for (g1, f1), v1 in t1.items() for (g2, f2), v2 in t2.items()}


@typechecked
def product_2(a: Fin2Cat, b: Fin2Cat, cap=None) -> Fin2Cat:
    return _capped(Fin2Cat(
        objects=_pairs(a.objects, b.objects),
        src=_pair_table(a.src, b.src), tgt=_pair_table(a.tgt, b.tgt),
        identity=_pair_table(a.identity, b.identity), comp=_pair_comp(a.comp, b.comp),
        msrc=_pair_table(a.msrc, b.msrc), mtgt=_pair_table(a.mtgt, b.mtgt),
        id2=_pair_table(a.id2, b.id2),
        vcomp=_pair_comp(a.vcomp, b.vcomp), hcomp=_pair_comp(a.hcomp, b.hcomp),
        name="{}x{}".format(a.name, b.name),
    ), cap)


@typechecked
def product_dbl(d: FinDblCat, e: FinDblCat, cap=None) -> FinDblCat:
    tables = {attr: _pair_table(getattr(d, attr), getattr(e, attr))
              for attr in ("hsrc", "htgt", "hid", "vsrc", "vtgt", "vid",
                           "top", "bottom", "left", "right", "hid_sq", "vid_sq")}
    comps = {attr: _pair_comp(getattr(d, attr), getattr(e, attr))
             for attr in ("hcomp", "vcomp", "hcomp_sq", "vcomp_sq")}
    return _capped(FinDblCat(objects=_pairs(d.objects, e.objects),
                             name="{}x{}".format(d.name, e.name),
                             **tables, **comps), cap)


def projection_2(product: Fin2Cat, factor: Fin2Cat, side: int) -> PseudoFunctor2:
    """The strict projection of a :func:`product_2` onto factor ``side``."""
    return strict_functor2(
        product, factor,
        {x: x[side] for x in product.objects},
        {f: f[side] for f in product.morphisms},
        {c: c[side] for c in product.twocells},
        name="pi{}".format(side),
    )


def projection_dbl(product: FinDblCat, factor: FinDblCat, side: int) -> PsDblFunctor:
    return strict_dbl_functor(
        product, factor,
        {x: x[side] for x in product.objects},
        {a: a[side] for a in product.hmor},
        {u: u[side] for u in product.vmor},
        {s: s[side] for s in product.squares},
        name="pi{}".format(side),
    )


@typechecked
def terminal_2cat() -> Fin2Cat:
    """The terminal 2-category on the object ``"*"``."""
    return Fin2Cat(
        objects=["*"], src={"id_*": "*"}, tgt={"id_*": "*"},
        identity={"*": "id_*"}, comp={("id_*", "id_*"): "id_*"},
        msrc={"1_id_*": "id_*"}, mtgt={"1_id_*": "id_*"},
        id2={"id_*": "1_id_*"},
        vcomp={("1_id_*", "1_id_*"): "1_id_*"}, hcomp={("1_id_*", "1_id_*"): "1_id_*"},
        name="TERM",
    )


@typechecked
def terminal_dbl() -> FinDblCat:
    return hh_embed(terminal_2cat())


@typechecked
def object_functor_2(cat: Fin2Cat, x: Id) -> PseudoFunctor2:
    """The strict 2-functor from the terminal 2-category picking ``x``."""
    idx = cat.identity[x]
    return strict_functor2(terminal_2cat(), cat, {"*": x}, {"id_*": idx},
                           {"1_id_*": cat.id2[idx]}, name="{!r}".format(x))


@typechecked
def object_functor(dbl: FinDblCat, x: Id) -> PsDblFunctor:
    """The strict double functor from the terminal double category picking ``x``."""
    return strict_dbl_functor(terminal_dbl(), dbl, {"*": x}, {"id_*": dbl.hid[x]},
                              {"*": dbl.vid[x]}, {"1_id_*": dbl.double_identity(x)},
                              name="{!r}".format(x))


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------

@typechecked
@convert_lookup_errors
def hh_embed_map(f: PseudoFunctor2) -> PsDblFunctor:
    """ℍF; compositor 2-cells become compositor squares."""
    return PsDblFunctor(
        hh_embed(f.source), hh_embed(f.target),
        f.on_objects, f.on_morphisms, f.on_objects, f.on_cells, f.compositors,
        name="H({})".format(f.name),
    )


@typechecked
@convert_lookup_errors
def underlying_h_map(f: PsDblFunctor) -> PseudoFunctor2:
    source = underlying_h(f.source)
    return PseudoFunctor2(
        source, underlying_h(f.target),
        f.on_objects, f.on_hmor,
        {s: f.sq(s) for s in source.twocells},
        f.compositors,
        name="H{}".format(f.name),
    )


@typechecked
@convert_lookup_errors
def vertical_2cat_map(f: PsDblFunctor, cap=None) -> PseudoFunctor2:
    """𝒱F; the compositor at ``(β, α)`` is
    ``(Fβ∘Fα, F(β∘α), φ_top, φ_bottom)``."""
    src, tgt = f.source, f.target
    source, target = vertical_2cat(src, cap), vertical_2cat(tgt, cap)
    cells = {c: (f.sq(c[0]), f.sq(c[1]), f.sq(c[2]), f.sq(c[3])) for c in source.twocells}
    compositors = {}
    for (beta, alpha), ba in src.hcomp_sq.items():
        compositors[(beta, alpha)] = (
            tgt.hcomp_sq[(f.sq(beta), f.sq(alpha))], f.sq(ba),
            f.phi(src.top[beta], src.top[alpha]),
            f.phi(src.bottom[beta], src.bottom[alpha]))
    return PseudoFunctor2(source, target, f.on_vmor, f.on_squares, cells, compositors,
                          name="V{}".format(f.name))


@typechecked
@convert_lookup_errors
def ar_star_map(f: PseudoFunctor2, cap=None) -> PseudoFunctor2:
    src, tgt = f.source, f.target
    source, target = ar_star(src, cap), ar_star(tgt, cap)
    cells = {c: (f.cell(c[0]), f.cell(c[1]), f.cell(c[2]), f.cell(c[3]))
             for c in source.twocells}
    compositors = {}
    for (beta, alpha), ba in src.hcomp.items():
        compositors[(beta, alpha)] = (
            tgt.hcomp[(f.cell(beta), f.cell(alpha))], f.cell(ba),
            f.phi(src.msrc[beta], src.msrc[alpha]),
            f.phi(src.mtgt[beta], src.mtgt[alpha]))
    return PseudoFunctor2(source, target, f.on_objects, f.on_cells, cells, compositors,
                          name="Ar*{}".format(f.name))


@typechecked
def op_psfun(f: PseudoFunctor2) -> PseudoFunctor2:
    """``F^op: A^op → B^op``; the compositor at ``(f, g)`` is ``φ_{g,f}``."""
    return PseudoFunctor2(
        op_2cat(f.source), op_2cat(f.target),
        f.on_objects, f.on_morphisms, f.on_cells,
        {(g, h): c for (h, g), c in f.compositors.items()},
        name=_toggle(f.name, "op"),
    )
