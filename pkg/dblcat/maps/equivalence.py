"""
Adjoint equivalence witnesses for functors between finite categories.

The search is constructive: pick for every object of the target the least
object of the source with the least isomorphism onto it, read off the
quasi-inverse and the unit from full faithfulness, then promote the counit
so both triangle identities hold. Every stage is re-verified exhaustively,
so a returned witness is always an adjoint equivalence.

"""
from dataclasses import dataclass
from typing import Dict, Optional

from typeguard import typechecked

from dblcat.core.report import Report
from dblcat.logs import get_logger
from dblcat.maps.functors import (Functor, NatTrans, compose_functors,
                                  identity_functor, is_nat_iso,
                                  validate_functor, validate_nat_trans)
from dblcat.types import Id

__all__ = ["EquivWitness", "equivalence_witness", "verify_equivalence"]

_LOG = get_logger("maps.equivalence")


@dataclass(frozen=True)
class EquivWitness:
    """``u: X → Y`` with quasi-inverse ``v``, unit ``id ⇒ v∘u`` and counit
    ``u∘v ⇒ id``."""

    u: Functor
    v: Functor
    unit: NatTrans
    counit: NatTrans


@typechecked
def verify_equivalence(w: EquivWitness) -> Report:
    """Functoriality, naturality, invertibility and both triangle identities."""
    report = Report(name="verify_equivalence")
    report.extend(validate_functor(w.u), "u")
    report.extend(validate_functor(w.v), "v")
    report.extend(validate_nat_trans(w.unit), "unit")
    report.extend(validate_nat_trans(w.counit), "counit")
    if not report.ok:
        return report
    report.check(is_nat_iso(w.unit), "unit invertible")
    report.check(is_nat_iso(w.counit), "counit invertible")
    x, y = w.u.source, w.u.target
    for a in x.objects:
        # (counit u)∘(u unit) = id_u
        lhs = y.comp[(w.counit[w.u.ob(a)], w.u.mor(w.unit[a]))]
        report.check(lhs == y.identity[w.u.ob(a)], "triangle identity", a)
    for b in y.objects:
        # (v counit)∘(unit v) = id_v
        lhs = x.comp[(w.v.mor(w.counit[b]), w.unit[w.v.ob(b)])]
        report.check(lhs == x.identity[w.v.ob(b)], "triangle identity", b)
    return report


def _preimage(u: Functor, a: Id, b: Id, target_mor: Id) -> Optional[Id]:
    for m in u.source.hom(a, b):
        if u.mor(m) == target_mor:
            return m
    return None


@typechecked
def equivalence_witness(u: Functor) -> Optional[EquivWitness]:
    """The least adjoint equivalence witness for ``u``, or None."""
    x, y = u.source, u.target

    # choice of v on objects and of the isomorphisms eps_b: u(v b) → b
    v_obj: Dict[Id, Id] = {}
    eps: Dict[Id, Id] = {}
    for b in y.objects:
        for a in x.objects:
            isos = y.isos(u.ob(a), b)
            if isos:
                v_obj[b], eps[b] = a, isos[0]
                break
        else:
            _LOG.debug("equivalence_witness: %r is not in the essential image", b)
            return None
    eps_inv = {b: y.inverse(e) for b, e in eps.items()}

    v_mor: Dict[Id, Id] = {}
    for g in y.morphisms:
        b, b2 = y.src[g], y.tgt[g]
        wanted = y.compose(eps_inv[b2], g, eps[b])
        h = _preimage(u, v_obj[b], v_obj[b2], wanted)
        if h is None:
            _LOG.debug("equivalence_witness: %r has no preimage", g)
            return None
        v_mor[g] = h
    v = Functor(y, x, v_obj, v_mor, name="quasi-inverse")
    if not validate_functor(v).ok:
        return None

    eta: Dict[Id, Id] = {}
    for a in x.objects:
        h = _preimage(u, a, v_obj[u.ob(a)], eps_inv[u.ob(a)])
        if h is None:
            return None
        eta[a] = h
    unit = NatTrans(identity_functor(x), compose_functors(v, u), eta)
    if not is_nat_iso(unit):
        return None
    eta_inv = {a: x.inverse(m) for a, m in eta.items()}

    # eps'_b = eps_b ∘ u(eta_{v b})^{-1} ∘ eps_{u v b}^{-1}
    promoted = {}
    for b in y.objects:
        vb = v_obj[b]
        promoted[b] = y.compose(eps[b], u.mor(eta_inv[vb]), eps_inv[u.ob(vb)])
    counit = NatTrans(compose_functors(u, v), identity_functor(y), promoted)

    witness = EquivWitness(u, v, unit, counit)
    report = verify_equivalence(witness)
    if not report.ok:
        _LOG.debug("equivalence_witness: candidate rejected: %s", report)
        return None
    return witness
