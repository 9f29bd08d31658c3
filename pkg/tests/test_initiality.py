import pytest

from dblcat.cli.fixtures import fixture
from dblcat.commas import slice_dbl
from dblcat.exceptions import UnknownId
from dblcat.initiality import (NO_MORPHISM, NONUNIQUE_CELL, bi_initial_definition_check,
                               dbl_bi_initial_definition_check, find_bi_initial,
                               find_bi_terminal, find_dbl_bi_initial, find_dbl_bi_terminal,
                               initiality_equiv_check, is_bi_initial, is_bi_terminal,
                               is_dbl_bi_initial, is_dbl_trivfib, is_trivfib_2,
                               trivfib_equiv_check)
from dblcat.maps.pseudo import identity_ps_dbl_functor, identity_pseudofunctor2

from tests.conftest import DOUBLE_CATEGORY_NAMES, TWO_CATEGORY_NAMES


class TestBiInitial:

    def test_source_of_the_arrow(self, arr):
        assert is_bi_initial(arr, 0)
        report = is_bi_initial(arr, 1)
        assert not report
        assert report.tag == NO_MORPHISM
        assert report.ids == (0,)
        assert str(is_bi_initial(arr, 0)) == "initial"

    def test_parallel_morphisms_need_a_unique_cell(self, cell, icell):
        report = is_bi_initial(cell, 0)
        assert report.tag == NONUNIQUE_CELL
        assert is_bi_initial(icell, 0)

    def test_terminal(self, arr):
        assert is_bi_terminal(arr, 1)
        assert not is_bi_terminal(arr, 0)

    def test_find(self, arr, term, disc2):
        assert find_bi_initial(arr) == (0,)
        assert find_bi_terminal(arr) == (1,)
        assert find_bi_initial(term) == ("*",)
        assert find_bi_initial(disc2) == ()

    def test_unknown_object(self, arr):
        with pytest.raises(UnknownId):
            is_bi_initial(arr, 5)

    @pytest.mark.parametrize("name", TWO_CATEGORY_NAMES)
    def test_definition_agrees_with_unique_fillers(self, name):
        cat = fixture(name)
        for x in cat.objects:
            report = bi_initial_definition_check(cat, x)
            assert report.ok, str(report)


class TestDoubleBiInitial:

    def test_horizontal_arrow(self, harr):
        assert is_dbl_bi_initial(harr, 0)
        assert find_dbl_bi_initial(harr) == (0,)
        assert find_dbl_bi_terminal(harr) == (1,)

    def test_vertical_arrow_has_none(self, varr):
        report = is_dbl_bi_initial(varr, 0)
        assert report.tag == NO_MORPHISM
        assert find_dbl_bi_initial(varr) == ()

    def test_free_square_has_none(self, sq):
        assert find_dbl_bi_initial(sq) == ()

    @pytest.mark.parametrize("name", DOUBLE_CATEGORY_NAMES)
    def test_verdicts_agree(self, name):
        dbl = fixture(name)
        for x in dbl.objects:
            report = initiality_equiv_check(dbl, x)
            assert report.ok, str(report)
            report = dbl_bi_initial_definition_check(dbl, x)
            assert report.ok, str(report)


class TestTrivialFibrations:

    def test_identity(self, arr, sq):
        assert is_trivfib_2(identity_pseudofunctor2(arr)).ok
        assert is_dbl_trivfib(identity_ps_dbl_functor(sq)).ok

    def test_collapsing_a_cell(self):
        report = is_trivfib_2(fixture("COLLAPSE"))
        assert "unique 2-cell lifting" in report.axioms

    def test_slice_of_the_vertical_arrow_is_not_a_trivial_fibration(self, varr):
        p = slice_dbl(0, identity_ps_dbl_functor(varr)).projection
        assert not is_dbl_trivfib(p).ok
        assert trivfib_equiv_check(p).witness == (False, False, False)

    @pytest.mark.parametrize("name", ["HARR", "VARR", "VARR_H"])
    def test_slice_projections(self, name):
        dbl = fixture(name)
        for x in dbl.objects:
            p = slice_dbl(x, identity_ps_dbl_functor(dbl)).projection
            report = trivfib_equiv_check(p)
            assert report.ok, str(report)
