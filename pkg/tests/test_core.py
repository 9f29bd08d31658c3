from dataclasses import replace

import pytest

from dblcat.cli.fixtures import fixture
from dblcat.core import (FinCat, Fin2Cat, FinDblCat, Report, arrow_category, least,
                         ordered, product_cat, squares_filling, validate_fin_2cat,
                         validate_fin_cat, validate_fin_dblcat)
from dblcat.exceptions import MalformedTable

from tests.conftest import STRUCTURE_NAMES, patched, patched_pairs

_VALIDATORS = {FinCat: validate_fin_cat, Fin2Cat: validate_fin_2cat,
               FinDblCat: validate_fin_dblcat}


def _validate(structure) -> Report:
    return _VALIDATORS[type(structure)](structure)


@pytest.mark.parametrize("name", STRUCTURE_NAMES)
def test_shipped_structures_validate(name):
    report = _validate(fixture(name))
    assert report.ok, str(report)


class TestCorruptedStructures:

    def test_wrong_unit(self, arr):
        report = validate_fin_2cat(patched_pairs(arr, "comp", {("f", "id_0"): "id_1"}))
        assert "unit law" in report.axioms

    def test_missing_composite(self, arr):
        comp = dict(arr.comp)
        del comp[("id_1", "f")]
        report = validate_fin_2cat(replace(arr, comp=comp))
        assert "composition totality" in report.axioms

    def test_horizontal_typing(self, cell):
        report = validate_fin_2cat(patched_pairs(cell, "hcomp", {("alpha", "1_id_0"): "1_f"}))
        assert "horizontal typing" in report.axioms

    def test_whiskering(self, cell):
        report = validate_fin_2cat(patched_pairs(cell, "hcomp", {("1_id_1", "alpha"): "1_f"}))
        assert "interchange/whisker" in report.axioms

    def test_vertical_unit(self, cell):
        report = validate_fin_2cat(patched_pairs(cell, "vcomp", {("1_g", "alpha"): "1_f"}))
        assert "vertical: unit law" in report.axioms

    def test_square_boundary(self, sq):
        report = validate_fin_dblcat(patched(sq, "top", sigma="k"))
        assert "square boundary" in report.axioms

    def test_double_identity(self, sq):
        report = validate_fin_dblcat(patched(sq, "vid_sq", id_0="V_h"))
        assert "double identity" in report.axioms

    def test_identity_square_boundary(self, varr):
        report = validate_fin_dblcat(patched(varr, "hid_sq", u="id_0"))
        assert "identity square boundary" in report.axioms

    def test_unknown_object_is_malformed(self, arr):
        with pytest.raises(MalformedTable):
            validate_fin_2cat(patched(arr, "src", f=7))


class TestFinCat:

    def test_inverse(self, iso, two):
        assert iso.inverse("i") == "j"
        assert iso.isos("a", "b") == ("i",)
        assert two.inverse("f") is None
        assert two.is_iso("id_a")

    def test_compose_chain(self, iso):
        assert iso.compose("j", "i") == "id_a"
        assert iso.compose("i", "j", "i") == "i"

    def test_discrete(self):
        cat = FinCat.discrete([1, 0])
        assert cat.objects == (0, 1)
        assert cat.morphisms == (("id", 0), ("id", 1))
        assert validate_fin_cat(cat).ok

    def test_from_preorder_closes_transitively(self):
        cat = FinCat.from_preorder([0, 1, 2], [(0, 1), (1, 2)])
        assert cat.hom(0, 2) == ((0, 2),)
        assert cat.hom(2, 0) == ()
        assert validate_fin_cat(cat).ok

    def test_arrow_category(self, two):
        ar = arrow_category(two)
        assert ar.objects == two.morphisms
        assert len(ar.morphisms) == 6
        assert validate_fin_cat(ar).ok

    def test_product(self, two):
        prod = product_cat(two, two)
        assert len(prod.objects) == 4
        assert len(prod.morphisms) == 9
        assert validate_fin_cat(prod).ok


class TestFin2Cat:

    def test_hom_cat(self, cell):
        hom = cell.hom_cat(0, 1)
        assert hom.objects == ("f", "g")
        assert set(hom.morphisms) == {"1_f", "1_g", "alpha"}
        assert validate_fin_cat(hom).ok

    def test_inverse2(self, cell, icell):
        assert not cell.is_invertible2("alpha")
        assert icell.inverse2("alpha") == "alpha_inv"

    def test_whiskering_by_identities(self, cell):
        assert cell.whisker_left("id_1", "alpha") == "alpha"
        assert cell.whisker_right("alpha", "id_0") == "alpha"

    def test_locally_discrete(self, two):
        cat = Fin2Cat.locally_discrete(two)
        assert cat.twocells == cat.morphisms
        assert validate_fin_2cat(cat).ok


class TestFinDblCat:

    def test_boundaries(self, sq):
        assert sq.hhom(0, 1) == ("h",)
        assert sq.vhom(1, 3) == ("v",)
        assert sq.with_boundary("h", "k", "u", "v") == ("sigma",)
        assert squares_filling(sq, "h", "k", "u", "v") == ("sigma",)
        assert sq.double_identity(0) == "1_0"

    def test_vertical_inverse(self, sq):
        assert sq.is_globular("V_h")
        assert sq.vertical_inverse("V_h") == "V_h"
        assert not sq.is_globular("sigma")
        assert sq.vertical_inverse("sigma") is None


def test_canonical_order():
    assert ordered([("a", 1), "b", 2, 0, "b"]) == (0, 2, "b", ("a", 1))
    assert least([]) is None
    assert least(["x", 3]) == 3


def test_report_extend_prefixes():
    inner = Report(name="inner").fail("unit law", "f")
    outer = Report(name="outer")
    outer.check(True, "never")
    outer.extend(inner, "part")
    assert not outer.ok
    assert outer.axioms == ("part: unit law",)
