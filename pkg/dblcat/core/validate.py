"""
Exhaustive axiom validators, boundary queries and isomorphism checks.

Validators return a :class:`Report`; they only raise
:class:`MalformedTable` when a table references ids that do not exist.

"""
from typing import Iterable, Mapping, Tuple, Union

from typeguard import typechecked

from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.report import Report
from dblcat.core.sortmap import SortMap
from dblcat.exceptions import (InconsistentBoundary, MalformedTable,
                               SortMismatch, UnknownId)
from dblcat.logs import get_logger
from dblcat.types import Id

__all__ = [
    "validate_fin_cat",
    "validate_fin_2cat",
    "validate_fin_dblcat",
    "squares_filling",
    "assert_isomorphism",
]

_LOG = get_logger("core")


# ---------------------------------------------------------------------------
# Table shape checks
# ---------------------------------------------------------------------------

def _require_keys(table: Mapping, keys: Iterable, what: str) -> None:
    expected = set(keys)
    actual = set(table)
    if actual != expected:
        raise MalformedTable("Table '{}' is keyed by {} but should be keyed by {}".format(
            what, sorted(map(repr, actual ^ expected)), "its sort"))


def _require_values(table: Mapping, allowed: Iterable, what: str) -> None:
    allowed = set(allowed)
    for key, val in table.items():
        if val not in allowed:
            raise MalformedTable("Table '{}' maps {!r} to unknown id {!r}".format(
                what, key, val))


def _require_pairs(table: Mapping, allowed: Iterable, what: str) -> None:
    allowed = set(allowed)
    for key, val in table.items():
        if not isinstance(key, tuple) or len(key) != 2 \
                or key[0] not in allowed or key[1] not in allowed:
            raise MalformedTable("Table '{}' has a key {!r} with unknown ids".format(
                what, key))
        if val not in allowed:
            raise MalformedTable("Table '{}' maps {!r} to unknown id {!r}".format(
                what, key, val))


def _check_cat_tables(objects, src, tgt, identity, comp, label: str) -> None:
    morphisms = set(src)
    _require_keys(tgt, morphisms, label + " tgt")
    _require_values(src, objects, label + " src")
    _require_values(tgt, objects, label + " tgt")
    _require_keys(identity, objects, label + " identity")
    _require_values(identity, morphisms, label + " identity")
    _require_pairs(comp, morphisms, label + " compose")


# ---------------------------------------------------------------------------
# Categories
# ---------------------------------------------------------------------------

def _category_laws(report: Report, objects, morphisms, src, tgt, identity, comp,
                   prefix: str = "") -> None:
    tag = (lambda s: "{}: {}".format(prefix, s)) if prefix else (lambda s: s)
    identities = {identity[x]: x for x in objects}

    for x in objects:
        report.check(src[identity[x]] == x and tgt[identity[x]] == x,
                     tag("identity typing"), x)

    for (g, f), h in comp.items():
        if tgt[f] != src[g]:
            report.fail(tag("composition typing"), g, f)
            continue
        if src[h] != src[f] or tgt[h] != tgt[g]:
            if h in identities:
                report.fail(tag("unit law"), g, f, h)
            else:
                report.fail(tag("composition typing"), g, f, h)

    for f in morphisms:
        for g in morphisms:
            if tgt[f] == src[g] and (g, f) not in comp:
                report.fail(tag("composition totality"), g, f)

    for f in morphisms:
        report.check(comp.get((identity[tgt[f]], f)) == f, tag("unit law"), f)
        report.check(comp.get((f, identity[src[f]])) == f, tag("unit law"), f)

    for (g, f), gf in comp.items():
        for h in morphisms:
            if src[h] != tgt[g]:
                continue
            hg = comp.get((h, g))
            lhs = comp.get((h, gf))
            rhs = comp.get((hg, f)) if hg is not None else None
            if lhs is None or lhs != rhs:
                report.fail(tag("associativity"), h, g, f)


@typechecked
def validate_fin_cat(cat: FinCat) -> Report:
    """Check the category axioms of ``cat`` exhaustively.

    Raises:
        MalformedTable: a table references unknown ids.
    """
    _check_cat_tables(set(cat.objects), cat.src, cat.tgt, cat.identity, cat.comp,
                      "category")
    report = Report(name="validate_fin_cat({})".format(cat.name))
    _category_laws(report, cat.objects, cat.morphisms, cat.src, cat.tgt,
                   cat.identity, cat.comp)
    _LOG.debug("%s: %d violations", report.name, len(report.violations))
    return report


# ---------------------------------------------------------------------------
# 2-categories
# ---------------------------------------------------------------------------

@typechecked
def validate_fin_2cat(cat: Fin2Cat) -> Report:
    """Check the 2-category axioms, including middle-four interchange."""
    _check_cat_tables(set(cat.objects), cat.src, cat.tgt, cat.identity, cat.comp,
                      "1-cell")
    cells = set(cat.msrc)
    _require_keys(cat.mtgt, cells, "mtgt")
    _require_values(cat.msrc, cat.src, "msrc")
    _require_values(cat.mtgt, cat.src, "mtgt")
    _require_keys(cat.id2, cat.src, "id2")
    _require_values(cat.id2, cells, "id2")
    _require_pairs(cat.vcomp, cells, "vcompose")
    _require_pairs(cat.hcomp, cells, "hcompose")

    report = Report(name="validate_fin_2cat({})".format(cat.name))
    _category_laws(report, cat.objects, cat.morphisms, cat.src, cat.tgt,
                   cat.identity, cat.comp)
    msrc, mtgt, id2 = cat.msrc, cat.mtgt, cat.id2

    for c in cat.twocells:
        report.check(cat.src[msrc[c]] == cat.src[mtgt[c]]
                     and cat.tgt[msrc[c]] == cat.tgt[mtgt[c]], "2-cell boundary", c)
    for f in cat.morphisms:
        report.check(msrc[id2[f]] == f and mtgt[id2[f]] == f, "identity 2-cell", f)

    # vertical structure: each hom is a category
    _category_laws(report, cat.morphisms, cat.twocells, msrc, mtgt, id2,
                   cat.vcomp, prefix="vertical")

    # horizontal structure
    for (b, a), ba in cat.hcomp.items():
        if cat.cell_tgt(a) != cat.cell_src(b):
            report.fail("horizontal typing", b, a)
            continue
        report.check(msrc[ba] == cat.comp.get((msrc[b], msrc[a]))
                     and mtgt[ba] == cat.comp.get((mtgt[b], mtgt[a])),
                     "horizontal typing", b, a, ba)
    for a in cat.twocells:
        for b in cat.twocells:
            if cat.cell_tgt(a) == cat.cell_src(b) and (b, a) not in cat.hcomp:
                report.fail("horizontal totality", b, a)

    for a in cat.twocells:
        left_unit = id2[cat.identity[cat.cell_tgt(a)]]
        right_unit = id2[cat.identity[cat.cell_src(a)]]
        report.check(cat.hcomp.get((left_unit, a)) == a, "interchange/whisker", a)
        report.check(cat.hcomp.get((a, right_unit)) == a, "interchange/whisker", a)

    for (g, f), gf in cat.comp.items():
        report.check(cat.hcomp.get((id2[g], id2[f])) == id2[gf],
                     "interchange/whisker", g, f)

    for (b, a), ba in cat.hcomp.items():
        for c in cat.twocells:
            if cat.cell_src(c) != cat.cell_tgt(b):
                continue
            cb = cat.hcomp.get((c, b))
            lhs = cat.hcomp.get((c, ba))
            rhs = cat.hcomp.get((cb, a)) if cb is not None else None
            if lhs is None or lhs != rhs:
                report.fail("horizontal associativity", c, b, a)

    # middle four: (d·c)*(b·a) = (d*b)·(c*a)
    for (b, a), ba in cat.vcomp.items():
        for (d, c), dc in cat.vcomp.items():
            if cat.cell_tgt(a) != cat.cell_src(c):
                continue
            lhs = cat.hcomp.get((dc, ba))
            db, ca = cat.hcomp.get((d, b)), cat.hcomp.get((c, a))
            rhs = cat.vcomp.get((db, ca)) if db is not None and ca is not None else None
            if lhs is None or lhs != rhs:
                report.fail("interchange/whisker", d, c, b, a)

    _LOG.debug("%s: %d violations", report.name, len(report.violations))
    return report


# ---------------------------------------------------------------------------
# Double categories
# ---------------------------------------------------------------------------

@typechecked
def validate_fin_dblcat(dbl: FinDblCat) -> Report:
    """Check the double category axioms, including interchange on every
    2x2 grid and the identity square laws."""
    objects = set(dbl.objects)
    _check_cat_tables(objects, dbl.hsrc, dbl.htgt, dbl.hid, dbl.hcomp, "horizontal")
    _check_cat_tables(objects, dbl.vsrc, dbl.vtgt, dbl.vid, dbl.vcomp, "vertical")
    squares = set(dbl.top)
    for attr in ("bottom", "left", "right"):
        _require_keys(getattr(dbl, attr), squares, attr)
    _require_values(dbl.top, dbl.hsrc, "top")
    _require_values(dbl.bottom, dbl.hsrc, "bottom")
    _require_values(dbl.left, dbl.vsrc, "left")
    _require_values(dbl.right, dbl.vsrc, "right")
    _require_pairs(dbl.hcomp_sq, squares, "hcompose_sq")
    _require_pairs(dbl.vcomp_sq, squares, "vcompose_sq")
    _require_keys(dbl.hid_sq, dbl.vsrc, "hid_sq")
    _require_values(dbl.hid_sq, squares, "hid_sq")
    _require_keys(dbl.vid_sq, dbl.hsrc, "vid_sq")
    _require_values(dbl.vid_sq, squares, "vid_sq")

    report = Report(name="validate_fin_dblcat({})".format(dbl.name))
    _category_laws(report, dbl.objects, dbl.hmor, dbl.hsrc, dbl.htgt, dbl.hid,
                   dbl.hcomp, prefix="horizontal")
    _category_laws(report, dbl.objects, dbl.vmor, dbl.vsrc, dbl.vtgt, dbl.vid,
                   dbl.vcomp, prefix="vertical")

    for s in dbl.squares:
        report.check(dbl.corners_agree(*dbl.boundary(s)), "square boundary", s)

    for u in dbl.vmor:
        report.check(
            dbl.boundary(dbl.hid_sq[u]) == (dbl.hid[dbl.vsrc[u]], dbl.hid[dbl.vtgt[u]], u, u),
            "identity square boundary", u)
    for a in dbl.hmor:
        report.check(
            dbl.boundary(dbl.vid_sq[a]) == (a, a, dbl.vid[dbl.hsrc[a]], dbl.vid[dbl.htgt[a]]),
            "identity square boundary", a)

    # horizontal composition of squares
    for (t, s), ts in dbl.hcomp_sq.items():
        if dbl.right[s] != dbl.left[t]:
            report.fail("square composition boundary", t, s)
            continue
        expected = (dbl.hcomp.get((dbl.top[t], dbl.top[s])),
                    dbl.hcomp.get((dbl.bottom[t], dbl.bottom[s])),
                    dbl.left[s], dbl.right[t])
        report.check(dbl.boundary(ts) == expected, "square composition boundary", t, s)
    for (t, s) in dbl.hcomposable_sq():
        report.check((t, s) in dbl.hcomp_sq, "square composition totality", t, s)
    for s in dbl.squares:
        report.check(dbl.hcomp_sq.get((dbl.hid_sq[dbl.right[s]], s)) == s,
                     "square unit law", s)
        report.check(dbl.hcomp_sq.get((s, dbl.hid_sq[dbl.left[s]])) == s,
                     "square unit law", s)
    for (t, s), ts in dbl.hcomp_sq.items():
        for r in dbl.squares:
            if dbl.left[r] != dbl.right[t]:
                continue
            rt = dbl.hcomp_sq.get((r, t))
            lhs = dbl.hcomp_sq.get((r, ts))
            rhs = dbl.hcomp_sq.get((rt, s)) if rt is not None else None
            if lhs is None or lhs != rhs:
                report.fail("square associativity", r, t, s)

    # vertical composition of squares
    for (t, s), ts in dbl.vcomp_sq.items():
        if dbl.bottom[s] != dbl.top[t]:
            report.fail("square composition boundary", t, s)
            continue
        expected = (dbl.top[s], dbl.bottom[t],
                    dbl.vcomp.get((dbl.left[t], dbl.left[s])),
                    dbl.vcomp.get((dbl.right[t], dbl.right[s])))
        report.check(dbl.boundary(ts) == expected, "square composition boundary", t, s)
    for (t, s) in dbl.vcomposable_sq():
        report.check((t, s) in dbl.vcomp_sq, "square composition totality", t, s)
    for s in dbl.squares:
        report.check(dbl.vcomp_sq.get((dbl.vid_sq[dbl.bottom[s]], s)) == s,
                     "square unit law", s)
        report.check(dbl.vcomp_sq.get((s, dbl.vid_sq[dbl.top[s]])) == s,
                     "square unit law", s)
    for (t, s), ts in dbl.vcomp_sq.items():
        for r in dbl.squares:
            if dbl.top[r] != dbl.bottom[t]:
                continue
            rt = dbl.vcomp_sq.get((r, t))
            lhs = dbl.vcomp_sq.get((r, ts))
            rhs = dbl.vcomp_sq.get((rt, s)) if rt is not None else None
            if lhs is None or lhs != rhs:
                report.fail("square associativity", r, t, s)

    # interchange: a b over c d
    for (b, a), ba in dbl.hcomp_sq.items():
        for (d, c), dc in dbl.hcomp_sq.items():
            if dbl.bottom[a] != dbl.top[c] or dbl.bottom[b] != dbl.top[d]:
                continue
            lhs = dbl.vcomp_sq.get((dc, ba))
            db, ca = dbl.vcomp_sq.get((d, b)), dbl.vcomp_sq.get((c, a))
            rhs = dbl.hcomp_sq.get((db, ca)) if db is not None and ca is not None else None
            if lhs is None or lhs != rhs:
                report.fail("interchange", a, b, c, d)

    for x in dbl.objects:
        report.check(dbl.hid_sq[dbl.vid[x]] == dbl.vid_sq[dbl.hid[x]],
                     "double identity", x)
    for (v, u), vu in dbl.vcomp.items():
        report.check(
            dbl.vcomp_sq.get((dbl.hid_sq[v], dbl.hid_sq[u])) == dbl.hid_sq[vu],
            "identity square functoriality", v, u)
    for (b, a), ba in dbl.hcomp.items():
        report.check(
            dbl.hcomp_sq.get((dbl.vid_sq[b], dbl.vid_sq[a])) == dbl.vid_sq[ba],
            "identity square functoriality", b, a)

    _LOG.debug("%s: %d violations", report.name, len(report.violations))
    return report


# ---------------------------------------------------------------------------
# Boundary queries
# ---------------------------------------------------------------------------

@typechecked
def squares_filling(dbl: FinDblCat, top: Id, bottom: Id, left: Id, right: Id) -> Tuple[Id, ...]:
    """All squares with the given boundary, in canonical order.

    Raises:
        UnknownId: one of the sides is not a morphism of ``dbl``.
        InconsistentBoundary: the sides do not meet at the corners.
    """
    for a in (top, bottom):
        if a not in dbl.hsrc:
            raise UnknownId("Unknown horizontal morphism {!r}".format(a))
    for u in (left, right):
        if u not in dbl.vsrc:
            raise UnknownId("Unknown vertical morphism {!r}".format(u))
    if not dbl.corners_agree(top, bottom, left, right):
        raise InconsistentBoundary(
            "Boundary ({!r}, {!r}, {!r}, {!r}) does not close".format(
                top, bottom, left, right))
    return dbl.with_boundary(top, bottom, left, right)


# ---------------------------------------------------------------------------
# Isomorphisms
# ---------------------------------------------------------------------------

def _bijection(report: Report, mapping: Mapping, domain, codomain, sort: str) -> bool:
    domain, codomain = set(domain), set(codomain)
    ok = set(mapping) == domain and set(mapping.values()) == codomain \
        and len(set(mapping.values())) == len(mapping)
    return report.check(ok, "bijection on " + sort)


def _preserves(report: Report, x_table: Mapping, y_table: Mapping, key_map,
               val_map, what: str) -> None:
    images = set()
    for key, val in x_table.items():
        image = key_map(key)
        images.add(image)
        report.check(y_table.get(image) == val_map(val), "preserves " + what, key)
    report.check(len(y_table) == len(images) and images <= set(y_table),
                 "reflects " + what)


@typechecked
def assert_isomorphism(
    x: Union[Fin2Cat, FinDblCat], y: Union[Fin2Cat, FinDblCat], m: SortMap
) -> Report:
    """Check that ``m`` is an isomorphism ``x ≅ y`` sort by sort.

    Raises:
        SortMismatch: ``x`` and ``y`` are not the same kind of structure.
    """
    if type(x) is not type(y):
        raise SortMismatch("Cannot compare a {} with a {}".format(
            type(x).__name__, type(y).__name__))
    report = Report(name="assert_isomorphism({}, {})".format(x.name, y.name))
    o, h, c = m.objects, m.morphisms, m.cells
    pair = lambda table: (lambda k: (table[k[0]], table[k[1]]))

    if isinstance(x, Fin2Cat):
        sorts_ok = all([
            _bijection(report, o, x.objects, y.objects, "objects"),
            _bijection(report, h, x.morphisms, y.morphisms, "morphisms"),
            _bijection(report, c, x.twocells, y.twocells, "2-cells"),
        ])
        if not sorts_ok:
            return report
        _preserves(report, x.src, y.src, h.get, o.get, "src")
        _preserves(report, x.tgt, y.tgt, h.get, o.get, "tgt")
        _preserves(report, x.identity, y.identity, o.get, h.get, "identities")
        _preserves(report, x.comp, y.comp, pair(h), h.get, "composition")
        _preserves(report, x.msrc, y.msrc, c.get, h.get, "2-cell sources")
        _preserves(report, x.mtgt, y.mtgt, c.get, h.get, "2-cell targets")
        _preserves(report, x.id2, y.id2, h.get, c.get, "identity 2-cells")
        _preserves(report, x.vcomp, y.vcomp, pair(c), c.get, "vertical composition")
        _preserves(report, x.hcomp, y.hcomp, pair(c), c.get, "horizontal composition")
        return report

    v = m.vmor
    sorts_ok = all([
        _bijection(report, o, x.objects, y.objects, "objects"),
        _bijection(report, h, x.hmor, y.hmor, "horizontal morphisms"),
        _bijection(report, v, x.vmor, y.vmor, "vertical morphisms"),
        _bijection(report, c, x.squares, y.squares, "squares"),
    ])
    if not sorts_ok:
        return report
    for attr, kmap, vmap in (
            ("hsrc", h.get, o.get), ("htgt", h.get, o.get), ("hid", o.get, h.get),
            ("hcomp", pair(h), h.get),
            ("vsrc", v.get, o.get), ("vtgt", v.get, o.get), ("vid", o.get, v.get),
            ("vcomp", pair(v), v.get),
            ("top", c.get, h.get), ("bottom", c.get, h.get),
            ("left", c.get, v.get), ("right", c.get, v.get),
            ("hcomp_sq", pair(c), c.get), ("vcomp_sq", pair(c), c.get),
            ("hid_sq", v.get, c.get), ("vid_sq", h.get, c.get)):
        _preserves(report, getattr(x, attr), getattr(y, attr), kmap, vmap, attr)
    return report
