"""
Trivial fibrations and the four flavours of 2-dimensional initiality.

Bi-initiality is decided by the unique-filler characterisation; the
slice-projection definition is implemented separately through
:func:`is_trivfib_2` / :func:`is_dbl_trivfib` so the two can be compared.

"""
from dataclasses import dataclass
from typing import Optional, Tuple

from typeguard import typechecked

from dblcat.commas import slice_2, slice_dbl
from dblcat.constructions import (hop_dblcat, op_2cat, underlying_h,
                                  underlying_h_map, vertical_2cat,
                                  vertical_2cat_map)
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.report import Report
from dblcat.exceptions import MalformedTable, UnknownId, convert_lookup_errors
from dblcat.logs import get_logger
from dblcat.maps.pseudo import (PsDblFunctor, PseudoFunctor2,
                                identity_ps_dbl_functor, identity_pseudofunctor2)
from dblcat.types import Id

__all__ = [
    "InitialityReport",
    "NO_MORPHISM",
    "NONUNIQUE_CELL",
    "NO_SQUARE",
    "NONUNIQUE_SQUARE",
    "is_trivfib_2",
    "is_dbl_trivfib",
    "trivfib_equiv_check",
    "is_bi_initial",
    "is_bi_terminal",
    "is_dbl_bi_initial",
    "is_dbl_bi_terminal",
    "initiality_equiv_check",
    "bi_initial_definition_check",
    "dbl_bi_initial_definition_check",
    "find_bi_initial",
    "find_bi_terminal",
    "find_dbl_bi_initial",
    "find_dbl_bi_terminal",
]

_LOG = get_logger("initiality")

NO_MORPHISM = "no-morphism-to"
NONUNIQUE_CELL = "nonunique-2cell"
NO_SQUARE = "no-square"
NONUNIQUE_SQUARE = "nonunique-square"


@dataclass(frozen=True)
class InitialityReport:
    """``verdict`` holds iff ``tag`` is None; ``ids`` locate the first failure."""

    verdict: bool
    tag: Optional[str] = None
    ids: Tuple[Id, ...] = ()

    def __bool__(self) -> bool:
        return self.verdict

    def __str__(self):
        if self.verdict:
            return "initial"
        return "{}: {}".format(self.tag, ", ".join(repr(i) for i in self.ids))


_PASS = InitialityReport(True)


def _require_strict(f, what: str) -> None:
    if not f.is_strict:
        raise MalformedTable("{} {} has non-identity compositors".format(what, f.name))


# ---------------------------------------------------------------------------
# Trivial fibrations
# ---------------------------------------------------------------------------

@typechecked
@convert_lookup_errors
def is_trivfib_2(p: PseudoFunctor2) -> Report:
    """Surjective on objects, full on morphisms, unique lifting of 2-cells.

    Raises:
        MalformedTable: ``p`` is not strict.
    """
    _require_strict(p, "2-functor")
    src, tgt = p.source, p.target
    report = Report(name="is_trivfib_2({})".format(p.name))
    images = {p.ob(a) for a in src.objects}
    for y in tgt.objects:
        report.check(y in images, "surjective on objects", y)
    for a in src.objects:
        for b in src.objects:
            lifted = {p.mor(f) for f in src.hom(a, b)}
            for g in tgt.hom(p.ob(a), p.ob(b)):
                report.check(g in lifted, "full on morphisms", a, b, g)
            for f1 in src.hom(a, b):
                for f2 in src.hom(a, b):
                    for beta in tgt.cells(p.mor(f1), p.mor(f2)):
                        lifts = [al for al in src.cells(f1, f2) if p.cell(al) == beta]
                        report.check(len(lifts) == 1, "unique 2-cell lifting", f1, f2, beta)
    _LOG.debug("%s: ok=%s", report.name, report.ok)
    return report


@typechecked
@convert_lookup_errors
def is_dbl_trivfib(p: PsDblFunctor) -> Report:
    """Surjective on objects and on vertical morphisms, full on horizontal
    morphisms, unique lifting of squares along every boundary.

    Raises:
        MalformedTable: ``p`` is not strict.
    """
    _require_strict(p, "double functor")
    src, tgt = p.source, p.target
    report = Report(name="is_dbl_trivfib({})".format(p.name))
    images = {p.ob(a) for a in src.objects}
    for y in tgt.objects:
        report.check(y in images, "surjective on objects", y)
    for a in src.objects:
        for b in src.objects:
            lifted = {p.hmor(f) for f in src.hhom(a, b)}
            for g in tgt.hhom(p.ob(a), p.ob(b)):
                report.check(g in lifted, "full on horizontal morphisms", a, b, g)
    vimages = {p.vmor(u) for u in src.vmor}
    for v in tgt.vmor:
        report.check(v in vimages, "surjective on vertical morphisms", v)
    for u in src.vmor:
        for u2 in src.vmor:
            for top in src.hhom(src.vsrc[u], src.vsrc[u2]):
                for bottom in src.hhom(src.vtgt[u], src.vtgt[u2]):
                    for beta in tgt.with_boundary(p.hmor(top), p.hmor(bottom),
                                                  p.vmor(u), p.vmor(u2)):
                        lifts = [s for s in src.with_boundary(top, bottom, u, u2)
                                 if p.sq(s) == beta]
                        report.check(len(lifts) == 1, "unique square lifting",
                                     top, bottom, u, u2, beta)
    _LOG.debug("%s: ok=%s", report.name, report.ok)
    return report


@typechecked
def trivfib_equiv_check(p: PsDblFunctor, cap=None) -> Report:
    """The double trivial fibration verdict agrees with ``Hp`` and ``𝒱p``
    both being trivial fibrations and with ``𝒱p`` alone."""
    report = Report(name="trivfib_equiv_check({})".format(p.name))
    double = is_dbl_trivfib(p).ok
    v_only = is_trivfib_2(vertical_2cat_map(p, cap)).ok
    pair = is_trivfib_2(underlying_h_map(p)).ok and v_only
    report.witness = (double, pair, v_only)
    if not report.check(double == pair == v_only, "verdicts agree", double, pair, v_only):
        _LOG.warning("%s: verdicts disagree %s", report.name, report.witness)
    return report


# ---------------------------------------------------------------------------
# Bi-initial objects
# ---------------------------------------------------------------------------

@typechecked
def is_bi_initial(cat: Fin2Cat, i: Id) -> InitialityReport:
    """A morphism ``i → A`` for every A and exactly one 2-cell between any
    two of them.

    Raises:
        UnknownId: ``i`` is not an object of ``cat``.
    """
    if i not in cat.objects:
        raise UnknownId("Unknown object {!r} of {}".format(i, cat.name))
    for a in cat.objects:
        if not cat.hom(i, a):
            return InitialityReport(False, NO_MORPHISM, (a,))
    for a in cat.objects:
        homs = cat.hom(i, a)
        for f in homs:
            for f2 in homs:
                if len(cat.cells(f2, f)) != 1:
                    return InitialityReport(False, NONUNIQUE_CELL, (f2, f))
    return _PASS


@typechecked
def is_bi_terminal(cat: Fin2Cat, i: Id) -> InitialityReport:
    return is_bi_initial(op_2cat(cat), i)


@typechecked
def is_dbl_bi_initial(dbl: FinDblCat, i: Id) -> InitialityReport:
    """A horizontal morphism ``i → A`` for every A, and for every vertical
    ``u: A → B`` and horizontals ``f: i → A``, ``g: i → B`` exactly one
    square ``(f, g, vid_i, u)``.

    Raises:
        UnknownId: ``i`` is not an object of ``dbl``.
    """
    if i not in dbl.objects:
        raise UnknownId("Unknown object {!r} of {}".format(i, dbl.name))
    for a in dbl.objects:
        if not dbl.hhom(i, a):
            return InitialityReport(False, NO_MORPHISM, (a,))
    side = dbl.vid[i]
    for u in dbl.vmor:
        for f in dbl.hhom(i, dbl.vsrc[u]):
            for g in dbl.hhom(i, dbl.vtgt[u]):
                count = len(dbl.with_boundary(f, g, side, u))
                if count == 0:
                    return InitialityReport(False, NO_SQUARE, (f, g, u))
                if count > 1:
                    return InitialityReport(False, NONUNIQUE_SQUARE, (f, g, u))
    return _PASS


@typechecked
def is_dbl_bi_terminal(dbl: FinDblCat, i: Id) -> InitialityReport:
    return is_dbl_bi_initial(hop_dblcat(dbl), i)


@typechecked
def find_bi_initial(cat: Fin2Cat) -> Tuple[Id, ...]:
    return tuple(x for x in cat.objects if is_bi_initial(cat, x))


@typechecked
def find_bi_terminal(cat: Fin2Cat) -> Tuple[Id, ...]:
    return find_bi_initial(op_2cat(cat))


@typechecked
def find_dbl_bi_initial(dbl: FinDblCat) -> Tuple[Id, ...]:
    return tuple(x for x in dbl.objects if is_dbl_bi_initial(dbl, x))


@typechecked
def find_dbl_bi_terminal(dbl: FinDblCat) -> Tuple[Id, ...]:
    return find_dbl_bi_initial(hop_dblcat(dbl))


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------

@typechecked
def initiality_equiv_check(dbl: FinDblCat, i: Id, cap=None) -> Report:
    """Double bi-initiality of ``i`` agrees with bi-initiality of ``vid_i``
    in 𝒱 and with the conjunction of that and bi-initiality of ``i`` in H."""
    report = Report(name="initiality_equiv_check({}, {!r})".format(dbl.name, i))
    double = is_dbl_bi_initial(dbl, i).verdict
    h = is_bi_initial(underlying_h(dbl), i).verdict
    v = is_bi_initial(vertical_2cat(dbl, cap), dbl.vid[i]).verdict
    report.witness = (double, h and v, v)
    if not report.check(double == (h and v) == v, "verdicts agree", i, double, h, v):
        _LOG.warning("%s: verdicts disagree %s", report.name, report.witness)
    return report


@typechecked
def bi_initial_definition_check(cat: Fin2Cat, i: Id, cap=None) -> Report:
    """The unique-filler verdict agrees with the projection of ``i↓A``
    being a trivial fibration."""
    report = Report(name="bi_initial_definition_check({}, {!r})".format(cat.name, i))
    filler = is_bi_initial(cat, i).verdict
    fibration = is_trivfib_2(slice_2(i, identity_pseudofunctor2(cat), cap).projection).ok
    report.witness = (filler, fibration)
    if not report.check(filler == fibration, "verdicts agree", i, filler, fibration):
        _LOG.warning("%s: verdicts disagree %s", report.name, report.witness)
    return report


@typechecked
def dbl_bi_initial_definition_check(dbl: FinDblCat, i: Id, cap=None) -> Report:
    """The double analogue of :func:`bi_initial_definition_check`."""
    report = Report(name="dbl_bi_initial_definition_check({}, {!r})".format(dbl.name, i))
    filler = is_dbl_bi_initial(dbl, i).verdict
    projection = slice_dbl(i, identity_ps_dbl_functor(dbl), cap).projection
    fibration = is_dbl_trivfib(projection).ok
    report.witness = (filler, fibration)
    if not report.check(filler == fibration, "verdicts agree", i, filler, fibration):
        _LOG.warning("%s: verdicts disagree %s", report.name, report.witness)
    return report
