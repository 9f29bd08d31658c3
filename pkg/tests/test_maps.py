import itertools
import logging

import pytest

from dblcat.cli.fixtures import fixture
from dblcat.core.fincat import FinCat
from dblcat.exceptions import MalformedTable, SizeCapExceeded
from dblcat.logs import TRACE, get_logger
from dblcat.maps import (compose_functors, enumerate_functors,
                         enumerate_nat_trans, equivalence_witness, identity_functor,
                         identity_nat, is_essentially_surjective, is_fully_faithful,
                         validate_cat_psfun, validate_functor, verify_equivalence)
from dblcat.maps.functors import hcompose_nat, validate_nat_trans, vcompose_nat
from dblcat.maps.pseudo import (identity_ps_dbl_functor, strict_functor2,
                                validate_ps_dbl_functor, validate_pseudofunctor2)
from dblcat.maps.psnat import (compose_psnat, enumerate_psnats, enumerate_psnats2,
                               identity_modification, identity_psnat, validate_modification,
                               validate_psnat)

from tests.conftest import FUNCTOR2_NAMES, PSFUN_NAMES


class TestFunctors:

    def test_enumerate_two_to_two(self, two):
        functors = enumerate_functors(two, two)
        assert len(functors) == 3
        assert all(validate_functor(u).ok for u in functors)

    def test_enumerate_two_to_iso(self, two, iso):
        assert len(enumerate_functors(two, iso)) == 4

    def test_identity_nat(self, two):
        ident = identity_functor(two)
        found = enumerate_nat_trans(ident, ident)
        assert [n.components for n in found] == [identity_nat(ident).components]

    def test_composites_of_natural_transformations(self, iso):
        ident = identity_functor(iso)
        alpha = identity_nat(ident)
        assert validate_nat_trans(vcompose_nat(alpha, alpha)).ok
        assert validate_nat_trans(hcompose_nat(alpha, alpha)).ok
        assert compose_functors(ident, ident).on_morphisms == ident.on_morphisms


def _all_functors(*cats):
    for x, y in itertools.product(cats, repeat=2):
        yield from enumerate_functors(x, y)


class TestEquivalences:

    def test_witness_agrees_with_direct_test(self, two, iso):
        point = FinCat.discrete(["*"])
        for u in _all_functors(two, iso, point):
            witness = equivalence_witness(u)
            direct = is_fully_faithful(u) and is_essentially_surjective(u)
            assert (witness is not None) == direct, (u.source.name, u.target.name, u.on_objects)
            if witness is not None:
                assert verify_equivalence(witness).ok

    def test_iso_is_contractible(self, iso):
        [u] = enumerate_functors(iso, FinCat.discrete(["*"]))
        assert equivalence_witness(u) is not None

    def test_two_is_not_contractible(self, two):
        [u] = enumerate_functors(two, FinCat.discrete(["*"]))
        assert equivalence_witness(u) is None


@pytest.mark.parametrize("name", PSFUN_NAMES)
def test_shipped_psfuns_validate(name):
    assert validate_cat_psfun(fixture(name)).ok


@pytest.mark.parametrize("name", FUNCTOR2_NAMES)
def test_shipped_pseudofunctors_validate(name):
    report = validate_pseudofunctor2(fixture(name))
    assert report.ok, str(report)


def test_strict_functor_must_preserve_composites(arr):
    with pytest.raises(MalformedTable):
        strict_functor2(arr, arr, {0: 0, 1: 0},
                        {"id_0": "id_0", "id_1": "id_0", "f": "f"},
                        {"1_id_0": "1_id_0", "1_id_1": "1_id_0", "1_f": "1_f"})


def test_identity_double_functor(sq):
    assert validate_ps_dbl_functor(identity_ps_dbl_functor(sq)).ok


class TestPseudoNaturality:

    @pytest.mark.parametrize("name", PSFUN_NAMES)
    def test_identities_validate(self, name):
        f = fixture(name)
        alpha = identity_psnat(f)
        assert validate_psnat(alpha).ok
        assert validate_psnat(compose_psnat(alpha, alpha)).ok
        assert validate_modification(identity_modification(alpha)).ok

    def test_enumerate_endo_transformations(self):
        f = fixture("F_ISO")
        found = enumerate_psnats(f, f)
        assert len(found) == 4
        assert identity_psnat(f).key() in {alpha.key() for alpha in found}

    def test_enumeration_respects_the_cap(self):
        f = fixture("F_ISO")
        with pytest.raises(SizeCapExceeded) as err:
            enumerate_psnats(f, f, cap=3)
        assert (err.value.size, err.value.cap) == (4, 3)
        assert len(enumerate_psnats(f, f, cap=4)) == 4
        with pytest.raises(SizeCapExceeded):
            enumerate_psnats2(fixture("ID_ARR"), fixture("ID_ARR"), cap=0)
        assert len(enumerate_psnats2(fixture("ID_CELL"), fixture("ID_CELL"), cap=1)) == 1

    def test_rejections_are_logged_at_trace_level(self, caplog):
        root = logging.getLogger("dblcat")
        level = root.level
        root.addHandler(caplog.handler)
        root.setLevel(TRACE)
        try:
            get_logger("maps.psnat").trace("rejected candidate: %s", "alpha")
        finally:
            root.removeHandler(caplog.handler)
            root.setLevel(level)
        assert [(r.levelname, r.getMessage()) for r in caplog.records] == [
            ("TRACE", "rejected candidate: alpha")]

    def test_composites_of_enumerated_validate(self):
        f = fixture("F_ISO")
        found = enumerate_psnats(f, f)
        for beta, alpha in itertools.product(found, repeat=2):
            assert validate_psnat(compose_psnat(beta, alpha)).ok
