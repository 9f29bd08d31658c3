import pytest

from dblcat.cli.fixtures import fixture
from dblcat.core.validate import validate_fin_2cat, validate_fin_dblcat
from dblcat.elements import (conical_weight, cone_dbl, el_2cat, el_dbl,
                             el_of_hom_vs_slice_check, hom_psfun, mor_2cat,
                             representable_psfun, weight_cones, weightcone_psfun)
from dblcat.exceptions import BoundaryMismatch, UnknownId
from dblcat.maps.catpsfun import validate_cat_psfun

from tests.conftest import PSFUN_NAMES


@pytest.mark.parametrize("name", PSFUN_NAMES)
def test_elements_of_shipped_psfuns_validate(name):
    f = fixture(name)
    assert validate_fin_dblcat(el_dbl(f)).ok
    assert validate_fin_2cat(el_2cat(f)).ok
    assert validate_fin_2cat(mor_2cat(f)).ok


def test_elements_of_constant_iso():
    el = el_dbl(fixture("F_ISO"))
    assert set(el.objects) == {("*", "a"), ("*", "b")}
    assert len(el.hmor) == 4
    assert len(el.vmor) == 4


class TestRepresentables:

    def test_elements_are_the_arrows_into_the_point(self, arr):
        f = representable_psfun(arr, 1)
        assert validate_cat_psfun(f).ok
        el = el_dbl(f)
        assert set(el.objects) == {(0, "f"), (1, "id_1")}
        assert validate_fin_dblcat(el).ok

    def test_unknown_object(self, arr):
        with pytest.raises(UnknownId):
            representable_psfun(arr, 7)

    @pytest.mark.parametrize("name", ["ID_ARR", "ID_CELL", "COLLAPSE", "ARR_TO_TERM"])
    def test_hom_psfuns_validate(self, name):
        left = fixture(name)
        for d0 in left.target.objects:
            assert validate_cat_psfun(hom_psfun(left, d0)).ok, (name, d0)

    @pytest.mark.parametrize("name", ["ID_ARR", "COLLAPSE", "TERM_AT_0"])
    def test_elements_of_hom_are_a_coslice(self, name):
        left = fixture(name)
        for d0 in left.target.objects:
            report = el_of_hom_vs_slice_check(left, d0)
            assert report.ok, str(report)


class TestWeightedCones:

    def test_conical_weight(self, disc2):
        weight = conical_weight(disc2)
        assert validate_cat_psfun(weight).ok
        assert set(weight.base.objects) == {0, 1}

    def test_cones_over_a_pair(self, disc2):
        diagram = fixture("PAIR01")
        tables = weight_cones(conical_weight(disc2), diagram)
        assert len(tables.cones[0]) == 1
        assert len(tables.cones[1]) == 0
        assert validate_cat_psfun(tables.psfun).ok
        assert weightcone_psfun(conical_weight(disc2), diagram).fibres == tables.psfun.fibres

    def test_weight_must_match_the_index(self, arr):
        with pytest.raises(BoundaryMismatch):
            weight_cones(conical_weight(arr), fixture("PAIR01"))

    def test_conical_cone_double_category(self):
        dbl, cones = cone_dbl(fixture("PAIR01"))
        assert dbl.objects == ((0, 0),)
        assert [len(cones[x]) for x in (0, 1)] == [1, 0]
        assert validate_fin_dblcat(dbl).ok
