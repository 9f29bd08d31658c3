"""
Bi-representations of pseudo-functors ``F: ℂ^op → Cat``.

A bi-representation is an object I with a pseudo-natural equivalence
``ρ: hom(-, I) ⇒ F``. One exists exactly when some ``(I, i)`` is double
bi-initial in ``el(F)``; in that case ``ρ_C(f) = (Ff)i``.

"""
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from typeguard import typechecked

from dblcat.core.report import Report
from dblcat.core.validate import squares_filling
from dblcat.elements import el_dbl, representable_psfun
from dblcat.constructions import underlying_h, vertical_2cat
from dblcat.exceptions import NoFiller, NotInitial, NoTensors, convert_lookup_errors
from dblcat.initiality import find_dbl_bi_initial, is_bi_initial, is_dbl_bi_initial
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun
from dblcat.maps.equivalence import EquivWitness, equivalence_witness
from dblcat.maps.functors import Functor, NatTrans, compose_functors
from dblcat.maps.psnat import Modif, PsNat, validate_modification, validate_psnat
from dblcat.tabulators import preserves_powers_by_two
from dblcat.types import Id

__all__ = [
    "BiRep",
    "verify_birep",
    "birep_from_point",
    "find_birep",
    "unique_filler",
    "rectify_birep",
    "birep_equiv_check",
]

_LOG = get_logger("representability")


@dataclass(frozen=True)
class BiRep:
    """``rho: hom(-, obj) ⇒ F`` with ``element = rho_obj(id_obj)``."""

    obj: Id
    element: Id
    rho: PsNat
    witnesses: Mapping[Id, EquivWitness] = field(default_factory=dict)


@typechecked
def verify_birep(f: CatPsFun, candidate: BiRep) -> Report:
    """Pseudo-naturality of ``rho`` and an adjoint equivalence witness for
    every component; the witnesses are returned in ``report.witness``."""
    report = Report(name="verify_birep({}, {!r})".format(f.name, candidate.obj))
    rho = candidate.rho
    base = f.base
    representable = representable_psfun(base, candidate.obj)
    if not report.check(rho.source == representable and rho.target == f, "boundary"):
        return report
    report.extend(validate_psnat(rho), "pseudo-naturality")
    if not report.ok:
        return report
    report.check(rho.components[candidate.obj].ob(base.identity[candidate.obj])
                 == candidate.element, "element")
    witnesses: Dict[Id, EquivWitness] = {}
    for c in base.objects:
        witness = equivalence_witness(rho.components[c])
        if report.check(witness is not None, "component equivalence", c):
            witnesses[c] = witness
    report.witness = witnesses
    return report


def _point_transformation(f: CatPsFun, i_obj: Id, i: Id) -> PsNat:
    """``ρ_C(h) = (Fh)i`` with 2-cell components read off the compositors."""
    base = f.base
    representable = representable_psfun(base, i_obj)
    components = {}
    for c in base.objects:
        hom = representable.fibre(c)
        components[c] = Functor(
            hom, f.fibre(c),
            {h: f.functor(h).ob(i) for h in hom.objects},
            {g: f.nat(g)[i] for g in hom.morphisms},
        )
    cells = {}
    for m in base.morphisms:
        a, b = base.src[m], base.tgt[m]
        hom = representable.fibre(b)
        cells[m] = NatTrans(
            compose_functors(f.functor(m), components[b]),
            compose_functors(components[a], representable.functor(m)),
            {h: f.phi(h, m)[i] for h in hom.objects},
        )
    return PsNat(representable, f, components, cells, name="rho")


@typechecked
@convert_lookup_errors
def birep_from_point(f: CatPsFun, i_obj: Id, i: Id) -> BiRep:
    """The bi-representation induced by a double bi-initial ``(I, i)``.

    Raises:
        NotInitial: ``(I, i)`` is not double bi-initial in ``el(F)``.
    """
    verdict = is_dbl_bi_initial(el_dbl(f), (i_obj, i))
    if not verdict:
        raise NotInitial("({!r}, {!r}) is not double bi-initial in el({}): {}".format(
            i_obj, i, f.name, verdict))
    candidate = BiRep(i_obj, i, _point_transformation(f, i_obj, i))
    report = verify_birep(f, candidate)
    if not report.ok:
        _LOG.warning("birep_from_point: constructed candidate fails: %s", report)
        raise NotInitial(str(report))
    return BiRep(i_obj, i, candidate.rho, report.witness)


@typechecked
def find_birep(f: CatPsFun, cap=None) -> Optional[BiRep]:
    """The bi-representation at the least double bi-initial element."""
    found = find_dbl_bi_initial(el_dbl(f, cap))
    if not found:
        return None
    i_obj, i = found[0]
    return birep_from_point(f, i_obj, i)


@typechecked
def unique_filler(f: CatPsFun, top: Id, bottom: Id, alpha: Id) -> Id:
    """The unique square of ``el(F)`` with the given top and bottom, an
    identity on the left and ``alpha`` on the right.

    Raises:
        NoFiller: there is no such square or there are several.
    """
    el = el_dbl(f)
    left = el.vid[el.hsrc[top]]
    fillers = squares_filling(el, top, bottom, left, alpha)
    if len(fillers) != 1:
        raise NoFiller("{} squares fill ({!r}, {!r}, {!r}, {!r})".format(
            len(fillers), top, bottom, left, alpha))
    return fillers[0]


@typechecked
def rectify_birep(f: CatPsFun, candidate: BiRep) -> Tuple[BiRep, Modif]:
    """Rebuild ``candidate`` from ``i = ρ_I(id_I)`` and return it with the
    invertible modification ``ρ̄ ⇛ ρ`` whose components are ``(ρ_h)_{id_I}``.

    Raises:
        NotInitial: ``candidate`` is not a bi-representation, or the rebuilt
            one or the modification fails verification.
    """
    given = verify_birep(f, candidate)
    if not given.ok:
        raise NotInitial("rectify_birep: not a bi-representation: {}".format(given))
    base = f.base
    i_obj = candidate.obj
    ident = base.identity[i_obj]
    rho = candidate.rho
    i = rho.components[i_obj].ob(ident)
    rectified = _point_transformation(f, i_obj, i)
    gamma = Modif(rectified, rho, {
        c: NatTrans(rectified.components[c], rho.components[c],
                    {h: rho.cells[h][ident] for h in base.hom(c, i_obj)})
        for c in base.objects})
    report = verify_birep(f, BiRep(i_obj, i, rectified))
    report.extend(validate_modification(gamma), "modification")
    if not report.ok:
        _LOG.warning("rectify_birep: %s", report)
        raise NotInitial(str(report))
    return BiRep(i_obj, i, rectified, report.witness), gamma


@typechecked
def birep_equiv_check(f: CatPsFun, cap=None) -> Report:
    """Per element ``(I, i)``: double bi-initial in ``el(F)``, bi-initial in
    ``el_2(F)`` together with ``id_i`` in ``mor(F)``, and ``id_i`` in
    ``mor(F)`` alone agree; existence agrees with :func:`find_birep`. When
    F preserves powers by 2 the ``el_2(F)`` verdict must agree too."""
    report = Report(name="birep_equiv_check({})".format(f.name))
    el = el_dbl(f, cap)
    horizontal, vertical = underlying_h(el), vertical_2cat(el, cap)
    try:
        tensors = preserves_powers_by_two(f).ok
    except NoTensors:
        tensors = False
    verdicts = {}
    for o in el.objects:
        double = is_dbl_bi_initial(el, o).verdict
        h = is_bi_initial(horizontal, o).verdict
        v = is_bi_initial(vertical, el.vid[o]).verdict
        verdicts[o] = (double, h and v, v, h)
        report.check(double == (h and v) == v, "element verdicts agree", o, double, h, v)
        if tensors:
            report.check(h == double, "el verdict agrees under tensors", o, h, double)
    found = find_birep(f, cap)
    exists = any(v[0] for v in verdicts.values())
    report.check((found is not None) == exists, "bi-representation exists iff initial element",
                 found is not None, exists)
    if found is not None:
        report.extend(verify_birep(f, found), "found")
    report.witness = {"verdicts": verdicts, "birep": found, "tensors": tensors}
    if not report.ok:
        _LOG.warning("%s: %s", report.name, report)
    return report
