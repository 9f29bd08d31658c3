"""
Tabulators of vertical morphisms, powers and tensors by the walking arrow,
and the simplification of double bi-initiality they allow.

A tabulator of ``u: A → B`` is an object T with a square ``τ`` of boundary
``(p, q, vid_T, u)`` through which every square ``(f, g, vid_I, u)`` factors
uniquely as ``τ`` pasted with ``vid_t``, and likewise for morphisms of such
squares.

"""
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional

from typeguard import typechecked

from dblcat.constructions import op_2cat, underlying_h, vertical_2cat
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import arrow_category
from dblcat.core.findblcat import FinDblCat
from dblcat.core.report import Report
from dblcat.exceptions import NoTabulators, NoTensors, UnknownId, convert_lookup_errors
from dblcat.initiality import is_bi_initial, is_dbl_bi_initial
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun
from dblcat.maps.functors import Functor
from dblcat.types import Id

__all__ = [
    "TabulatorWitness",
    "PowerWitness",
    "find_tabulator",
    "has_tabulators",
    "find_power_by_two",
    "find_tensor_by_two",
    "has_powers_by_two",
    "has_tensors_by_two",
    "preserves_powers_by_two",
    "tabulator_initiality_check",
]

_LOG = get_logger("tabulators")


@dataclass(frozen=True)
class TabulatorWitness:
    vertical: Id
    apex: Id
    square: Id
    p: Id
    q: Id


@dataclass(frozen=True)
class PowerWitness:
    """``apex`` with the 2-cell ``cone: l0 ⇒ l1`` between morphisms
    ``apex → base`` and, per test object, the isomorphism it induces."""

    base: Id
    apex: Id
    cone: Id
    isomorphisms: Mapping[Id, Functor] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Tabulators
# ---------------------------------------------------------------------------

def _cones(dbl: FinDblCat, u: Id):
    """Squares ``(f, g, vid_X, u)`` for any X."""
    return [s for s in dbl.squares
            if dbl.right[s] == u and dbl.left[s] == dbl.vid[dbl.vsrc[dbl.left[s]]]]


def _factor(dbl: FinDblCat, tau: Id, gamma: Id) -> list:
    apex = dbl.hsrc[dbl.top[tau]]
    x = dbl.hsrc[dbl.top[gamma]]
    return [t for t in dbl.hhom(x, apex)
            if dbl.hcomp_sq.get((tau, dbl.vid_sq[t])) == gamma]


def _is_tabulator(dbl: FinDblCat, u: Id, tau: Id, cones) -> bool:
    p, q = dbl.top[tau], dbl.bottom[tau]
    apex = dbl.hsrc[p]
    factors = {}
    for gamma in cones:
        found = _factor(dbl, tau, gamma)
        if len(found) != 1:
            return False
        factors[gamma] = found[0]
    a, b = dbl.vsrc[u], dbl.vtgt[u]
    for gamma in cones:
        x = dbl.hsrc[dbl.top[gamma]]
        f, g = dbl.top[gamma], dbl.bottom[gamma]
        for gamma2 in cones:
            x2 = dbl.hsrc[dbl.top[gamma2]]
            f2, g2 = dbl.top[gamma2], dbl.bottom[gamma2]
            for v in dbl.vhom(x2, x):
                for theta0 in dbl.with_boundary(f2, f, v, dbl.vid[a]):
                    for theta1 in dbl.with_boundary(g2, g, v, dbl.vid[b]):
                        if dbl.vcomp_sq[(gamma, theta0)] != dbl.vcomp_sq[(theta1, gamma2)]:
                            continue
                        lifts = [
                            theta for theta in dbl.with_boundary(
                                factors[gamma2], factors[gamma], v, dbl.vid[apex])
                            if dbl.hcomp_sq[(dbl.vid_sq[p], theta)] == theta0
                            and dbl.hcomp_sq[(dbl.vid_sq[q], theta)] == theta1]
                        if len(lifts) != 1:
                            return False
    return True


@typechecked
@convert_lookup_errors
def find_tabulator(dbl: FinDblCat, u: Id) -> Optional[TabulatorWitness]:
    """The least ``(T, τ)`` satisfying both universal properties, or None.

    Raises:
        UnknownId: ``u`` is not a vertical morphism of ``dbl``.
    """
    if u not in dbl.vsrc:
        raise UnknownId("Unknown vertical morphism {!r}".format(u))
    cones = _cones(dbl, u)
    for apex in dbl.objects:
        for tau in cones:
            if dbl.left[tau] != dbl.vid[apex]:
                continue
            if _is_tabulator(dbl, u, tau, cones):
                _LOG.debug("tabulator of %r: %r", u, tau)
                return TabulatorWitness(u, apex, tau, dbl.top[tau], dbl.bottom[tau])
    return None


@typechecked
def has_tabulators(dbl: FinDblCat) -> Report:
    report = Report(name="has_tabulators({})".format(dbl.name))
    for u in dbl.vmor:
        report.check(find_tabulator(dbl, u) is not None, "tabulator", u)
    return report


# ---------------------------------------------------------------------------
# Powers and tensors by 2
# ---------------------------------------------------------------------------

def _induced(cat: Fin2Cat, c: Id, cone: Id, test: Id) -> Functor:
    """``hom(test, apex) → ar(hom(test, c))`` induced by the cone."""
    source = cat.hom_cat(test, cat.cell_src(cone))
    target = arrow_category(cat.hom_cat(test, c))
    l0, l1 = cat.msrc[cone], cat.mtgt[cone]
    return Functor(
        source, target,
        {h: cat.whisker_right(cone, h) for h in source.objects},
        {d: (cat.whisker_right(cone, source.src[d]), cat.whisker_right(cone, source.tgt[d]),
             cat.whisker_left(l0, d), cat.whisker_left(l1, d))
         for d in source.morphisms},
    )


def _is_isomorphism(u: Functor) -> bool:
    x, y = u.source, u.target
    return (len(set(u.on_objects.values())) == len(x.objects) == len(y.objects)
            and len(set(u.on_morphisms.values())) == len(x.morphisms) == len(y.morphisms)
            and set(u.on_morphisms.values()) == set(y.morphisms))


@typechecked
@convert_lookup_errors
def find_power_by_two(cat: Fin2Cat, c: Id) -> Optional[PowerWitness]:
    """The least ``(P, λ)`` with ``λ`` a 2-cell between morphisms ``P → c``
    such that precomposition is an isomorphism ``hom(X, P) ≅ ar(hom(X, c))``
    for every X.

    Raises:
        UnknownId: ``c`` is not an object of ``cat``.
    """
    if c not in cat.objects:
        raise UnknownId("Unknown object {!r} of {}".format(c, cat.name))
    for apex in cat.objects:
        homs = set(cat.hom(apex, c))
        for cone in cat.twocells:
            if cat.msrc[cone] not in homs:
                continue
            isos: Dict[Id, Functor] = {}
            for test in cat.objects:
                induced = _induced(cat, c, cone, test)
                if not _is_isomorphism(induced):
                    break
                isos[test] = induced
            else:
                _LOG.debug("power of %r by 2 in %s: %r", c, cat.name, apex)
                return PowerWitness(c, apex, cone, isos)
    return None


@typechecked
def find_tensor_by_two(cat: Fin2Cat, c: Id) -> Optional[PowerWitness]:
    """A power in ``op(cat)``: the cone is a 2-cell between morphisms ``c → T``."""
    return find_power_by_two(op_2cat(cat), c)


@typechecked
def has_powers_by_two(cat: Fin2Cat) -> Report:
    report = Report(name="has_powers_by_two({})".format(cat.name))
    for c in cat.objects:
        report.check(find_power_by_two(cat, c) is not None, "power by 2", c)
    return report


@typechecked
def has_tensors_by_two(cat: Fin2Cat) -> Report:
    report = Report(name="has_tensors_by_two({})".format(cat.name))
    for c in cat.objects:
        report.check(find_tensor_by_two(cat, c) is not None, "tensor by 2", c)
    return report


@typechecked
@convert_lookup_errors
def preserves_powers_by_two(f: CatPsFun) -> Report:
    """For the tensor ``(T, ζ)`` of every object C of the base, the functor
    ``x ↦ (Fζ)_x`` is an isomorphism ``FT ≅ ar(FC)``.

    Raises:
        NoTensors: the base lacks a tensor by 2 at some object.
    """
    base = f.base
    report = Report(name="preserves_powers_by_two({})".format(f.name))
    for c in base.objects:
        tensor = find_tensor_by_two(base, c)
        if tensor is None:
            raise NoTensors("{} has no tensor of {!r} by 2".format(base.name, c))
        zeta = f.nat(tensor.cone)
        source = f.fibre(tensor.apex)
        target = arrow_category(f.fibre(c))
        induced = Functor(
            source, target,
            {x: zeta[x] for x in source.objects},
            {a: (zeta[source.src[a]], zeta[source.tgt[a]],
                 zeta.source.mor(a), zeta.target.mor(a))
             for a in source.morphisms},
        )
        report.check(_is_isomorphism(induced), "preserves power by 2", c)
    return report


# ---------------------------------------------------------------------------
# Cross-check
# ---------------------------------------------------------------------------

@typechecked
def tabulator_initiality_check(dbl: FinDblCat, i: Id, cap=None) -> Report:
    """With tabulators, double bi-initiality of ``i`` is bi-initiality in
    H, which in turn agrees with bi-initiality of ``vid_i`` in 𝒱.

    Raises:
        NoTabulators: some vertical morphism of ``dbl`` has no tabulator.
    """
    tabulators = has_tabulators(dbl)
    if not tabulators.ok:
        raise NoTabulators("{} lacks tabulators: {}".format(
            dbl.name, ", ".join(str(v) for v in tabulators.violations)))
    report = Report(name="tabulator_initiality_check({}, {!r})".format(dbl.name, i))
    double = is_dbl_bi_initial(dbl, i).verdict
    h = is_bi_initial(underlying_h(dbl), i).verdict
    v = is_bi_initial(vertical_2cat(dbl, cap), dbl.vid[i]).verdict
    report.witness = (double, h, v)
    agree = report.check(double == h, "double bi-initial iff bi-initial in H", i, double, h)
    agree = report.check(h == v, "bi-initial in H iff vid bi-initial in V", i, h, v) and agree
    if not agree:
        _LOG.warning("%s: verdicts disagree %s", report.name, report.witness)
    return report
