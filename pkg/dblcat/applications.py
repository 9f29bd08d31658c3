"""
Right bi-adjoints and weighted bi-limits, both read off the double
category of elements of a suitable pseudo-functor.

``L: ℂ → 𝔻`` has a right bi-adjoint at ``D`` exactly when ``𝔻(L-, D)`` is
bi-representable; a weighted bi-limit of ``F`` is a bi-representation of
the weighted-cone pseudo-functor ``c ↦ Psd(I, Cat)(W, ℂ(c, F-))``.

"""
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from typeguard import typechecked

from dblcat.config import progress
from dblcat.core.report import Report
from dblcat.elements import (WeightCones, conical_weight, cone_dbl, el_dbl,
                             hom_psfun, weight_cones)
from dblcat.exceptions import convert_lookup_errors
from dblcat.initiality import find_dbl_bi_initial, find_dbl_bi_terminal
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun
from dblcat.maps.equivalence import equivalence_witness
from dblcat.maps.functors import Functor
from dblcat.maps.pseudo import PseudoFunctor2
from dblcat.maps.psnat import PsNat
from dblcat.representability import birep_equiv_check, find_birep
from dblcat.tabulators import has_tensors_by_two, preserves_powers_by_two
from dblcat.types import Id

__all__ = [
    "BiAdjointReport",
    "BiLimitWitness",
    "right_biadjoint_at",
    "right_biadjoint",
    "biadjoint_equiv_check",
    "verify_weighted_bilimit",
    "find_weighted_bilimit",
    "find_conical_bilimit",
    "conical_bilimit_check",
    "bilimit_equiv_check",
]

_LOG = get_logger("applications")


@dataclass(frozen=True)
class BiAdjointReport:
    """Per object D of the codomain, ``(RD, ε_D)`` or None."""

    verdicts: Mapping[Id, Optional[Tuple[Id, Id]]] = field(default_factory=dict)

    @property
    def total(self) -> bool:
        return all(v is not None for v in self.verdicts.values())

    @property
    def assignment(self) -> Dict[Id, Tuple[Id, Id]]:
        return {d: v for d, v in self.verdicts.items() if v is not None}

    def __bool__(self) -> bool:
        return self.total


@dataclass(frozen=True)
class BiLimitWitness:
    """The apex ``obj`` with the weighted cone ``cone: W ⇒ ℂ(obj, F-)``."""

    obj: Id
    cone: PsNat
    weight: CatPsFun
    diagram: PseudoFunctor2


# ---------------------------------------------------------------------------
# Bi-adjoints
# ---------------------------------------------------------------------------

@typechecked
def right_biadjoint_at(left: PseudoFunctor2, d0: Id, cap=None) -> Optional[Tuple[Id, Id]]:
    """The least double bi-initial ``(RD, ε_D)`` of ``el(𝔻(L-, d0))``.

    Raises:
        UnknownId: ``d0`` is not an object of the codomain.
    """
    found = find_dbl_bi_initial(el_dbl(hom_psfun(left, d0), cap))
    if not found:
        _LOG.debug("right_biadjoint_at(%s, %r): none", left.name, d0)
        return None
    return found[0]


@typechecked
def right_biadjoint(left: PseudoFunctor2, cap=None) -> BiAdjointReport:
    target = left.target
    verdicts = {d: right_biadjoint_at(left, d, cap)
                for d in progress(target.objects, len(target.objects), "right bi-adjoint")}
    result = BiAdjointReport(verdicts)
    _LOG.info("right_biadjoint(%s): total=%s", left.name, result.total)
    return result


@typechecked
def biadjoint_equiv_check(left: PseudoFunctor2, cap=None) -> Report:
    """Per codomain object, the criteria of :func:`birep_equiv_check` for
    ``𝔻(L-, D)`` and agreement of :func:`right_biadjoint_at` with an
    independent :func:`find_birep`."""
    report = Report(name="biadjoint_equiv_check({})".format(left.name))
    witness = {}
    for d in progress(left.target.objects, len(left.target.objects), "bi-adjoint check"):
        hom = hom_psfun(left, d)
        report.extend(birep_equiv_check(hom, cap), repr(d))
        local = right_biadjoint_at(left, d, cap)
        birep = find_birep(hom, cap)
        report.check((local is None) == (birep is None),
                     "right bi-adjoint iff bi-representation", d)
        if local is not None and birep is not None:
            report.check(local == (birep.obj, birep.element),
                         "same least element", d, local, (birep.obj, birep.element))
        witness[d] = local
    report.witness = witness
    if not report.ok:
        _LOG.warning("%s: %s", report.name, report)
    return report


# ---------------------------------------------------------------------------
# Weighted bi-limits
# ---------------------------------------------------------------------------

def _cone_index(tables: WeightCones, obj: Id, cone: PsNat) -> Optional[int]:
    try:
        return tables.index(obj, cone)
    except KeyError:
        return None


@typechecked
@convert_lookup_errors
def verify_weighted_bilimit(weight: CatPsFun, diagram: PseudoFunctor2, obj: Id,
                            cone: PsNat, cap=None) -> Report:
    """For every C, precomposition with ``cone`` is an equivalence
    ``ℂ(C, obj) ≃ Psd(I, Cat)(W, ℂ(C, F-))``; the witnesses are returned in
    ``report.witness``.

    Raises:
        BoundaryMismatch: the weight is not indexed by ``op(I)``.
    """
    report = Report(name="verify_weighted_bilimit({}, {}, {!r})".format(
        weight.name, diagram.name, obj))
    cat = diagram.target
    if obj not in cat.objects:
        return report.fail("apex", obj)
    tables = weight_cones(weight, diagram, cap)
    if not report.check(_cone_index(tables, obj, cone) is not None, "cone", obj):
        return report
    witnesses = {}
    for c in cat.objects:
        source = cat.hom_cat(c, obj)
        induced = Functor(
            source, tables.psfun.fibre(c),
            {h: tables.index(c, tables.precompose(cone, h)) for h in source.objects},
            {d: tables.morphism(c, tables.whisker(cone, d)) for d in source.morphisms},
        )
        witness = equivalence_witness(induced)
        if report.check(witness is not None, "precomposition is an equivalence", c):
            witnesses[c] = witness
    report.witness = witnesses
    return report


@typechecked
def find_weighted_bilimit(weight: CatPsFun, diagram: PseudoFunctor2,
                          cap=None) -> Optional[BiLimitWitness]:
    """The least double bi-initial element of the weighted-cone pseudo-functor.

    Raises:
        SizeCapExceeded: an enumeration of cones or modifications is too large.
        BoundaryMismatch: the weight is not indexed by ``op(I)``.
    """
    tables = weight_cones(weight, diagram, cap)
    found = find_dbl_bi_initial(el_dbl(tables.psfun, cap))
    if not found:
        _LOG.debug("find_weighted_bilimit(%s, %s): none", weight.name, diagram.name)
        return None
    obj, n = found[0]
    return BiLimitWitness(obj, tables.cones[obj][n], weight, diagram)


@typechecked
def find_conical_bilimit(diagram: PseudoFunctor2, cap=None) -> Optional[BiLimitWitness]:
    return find_weighted_bilimit(conical_weight(diagram.source), diagram, cap)


def _weighted_key(cone: PsNat, diagram: PseudoFunctor2) -> Tuple:
    index = diagram.source
    return (tuple(cone.components[i].ob("*") for i in index.objects),
            tuple(cone.cells[k]["*"] for k in index.morphisms))


@typechecked
def conical_bilimit_check(diagram: PseudoFunctor2, cap=None) -> Report:
    """Conical bi-limits found through the weighted route coincide with the
    double bi-terminal objects of the directly built cone double category."""
    report = Report(name="conical_bilimit_check({})".format(diagram.name))
    index = diagram.source
    tables = weight_cones(conical_weight(index), diagram, cap)
    weighted = set()
    for obj, n in find_dbl_bi_initial(el_dbl(tables.psfun, cap)):
        weighted.add((obj,) + _weighted_key(tables.cones[obj][n], diagram))
    dbl, cones = cone_dbl(diagram, cap)
    direct = set()
    for obj, n in find_dbl_bi_terminal(dbl):
        cone = cones[obj][n]
        direct.add((obj,
                    tuple(cone.components[i] for i in index.objects),
                    tuple(cone.cells[k] for k in index.morphisms)))
    report.witness = (sorted(weighted, key=repr), sorted(direct, key=repr))
    for key in sorted(weighted ^ direct, key=repr):
        report.fail("weighted and direct bi-limits agree", *key)
    if not report.ok:
        _LOG.warning("%s: %s", report.name, report)
    return report


@typechecked
def bilimit_equiv_check(weight: CatPsFun, diagram: PseudoFunctor2, cap=None) -> Report:
    """The criteria of :func:`birep_equiv_check` for the weighted-cone
    pseudo-functor. When ℂ has tensors by 2 they are preserved by it, and a
    found bi-limit passes :func:`verify_weighted_bilimit`."""
    report = Report(name="bilimit_equiv_check({}, {})".format(weight.name, diagram.name))
    tables = weight_cones(weight, diagram, cap)
    sub = birep_equiv_check(tables.psfun, cap)
    report.extend(sub, "weighted cones")
    tensors = has_tensors_by_two(diagram.target).ok
    if tensors:
        report.check(preserves_powers_by_two(tables.psfun).ok,
                     "weighted cones preserve powers by 2")
    found = find_weighted_bilimit(weight, diagram, cap)
    if found is not None:
        report.extend(verify_weighted_bilimit(weight, diagram, found.obj, found.cone, cap),
                      "found")
    report.witness = {"verdicts": sub.witness["verdicts"], "tensors": tensors,
                      "bilimit": found}
    if not report.ok:
        _LOG.warning("%s: %s", report.name, report)
    return report
