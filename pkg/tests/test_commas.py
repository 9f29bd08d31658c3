import pytest

from dblcat.cli.fixtures import fixture
from dblcat.commas import (comma_2, comma_dbl, comma_preservation_check, coslice_2,
                           coslice_dbl, slice_2, slice_dbl)
from dblcat.core.validate import validate_fin_2cat, validate_fin_dblcat
from dblcat.exceptions import BoundaryMismatch, SizeCapExceeded
from dblcat.maps.pseudo import (identity_ps_dbl_functor, identity_pseudofunctor2,
                                validate_ps_dbl_functor, validate_pseudofunctor2)


class TestDoubleSlices:

    def test_slice_under_initial_object(self, harr):
        result = slice_dbl(0, identity_ps_dbl_functor(harr))
        assert set(result.structure.objects) == {(0, "id_0"), (1, "f")}
        assert validate_fin_dblcat(result.structure).ok
        assert validate_ps_dbl_functor(result.projection).ok

    def test_coslice_over_terminal_object(self, harr):
        result = coslice_dbl(identity_ps_dbl_functor(harr), 1)
        assert set(result.structure.objects) == {(0, "f"), (1, "id_1")}
        assert validate_fin_dblcat(result.structure).ok
        assert validate_ps_dbl_functor(result.projection).ok

    @pytest.mark.parametrize("name", ["VARR", "SQ"])
    def test_slices_validate(self, name):
        dbl = fixture(name)
        ident = identity_ps_dbl_functor(dbl)
        for x in dbl.objects:
            result = slice_dbl(x, ident)
            assert validate_fin_dblcat(result.structure).ok, (name, x)
            assert validate_ps_dbl_functor(result.projection).ok, (name, x)

    def test_comma_of_identities(self, varr):
        ident = identity_ps_dbl_functor(varr)
        result = comma_dbl(ident, ident)
        assert validate_fin_dblcat(result.structure).ok
        assert validate_ps_dbl_functor(result.projection).ok

    def test_legs_must_share_a_codomain(self, harr, sq):
        with pytest.raises(BoundaryMismatch):
            comma_dbl(identity_ps_dbl_functor(harr), identity_ps_dbl_functor(sq))

    def test_cap(self, sq):
        ident = identity_ps_dbl_functor(sq)
        with pytest.raises(SizeCapExceeded):
            comma_dbl(ident, ident, cap=2)


class TestTwoCategorySlices:

    def test_slice(self, arr):
        result = slice_2(0, identity_pseudofunctor2(arr))
        assert set(result.structure.objects) == {(0, "id_0"), (1, "f")}
        assert validate_fin_2cat(result.structure).ok
        assert validate_pseudofunctor2(result.projection).ok

    def test_coslice(self, arr):
        result = coslice_2(identity_pseudofunctor2(arr), 0)
        assert set(result.structure.objects) == {(0, "id_0")}

    @pytest.mark.parametrize("name", ["ID_CELL", "COLLAPSE", "PAIR01"])
    def test_slices_of_shipped_functors(self, name):
        f = fixture(name)
        for x in f.target.objects:
            result = slice_2(x, f)
            assert validate_fin_2cat(result.structure).ok, (name, x)
            assert validate_pseudofunctor2(result.projection).ok, (name, x)

    def test_comma(self, cell):
        ident = identity_pseudofunctor2(cell)
        result = comma_2(ident, ident)
        assert validate_fin_2cat(result.structure).ok


@pytest.mark.parametrize("name", ["HARR", "VARR"])
def test_commas_commute_with_underlying_and_vertical(name):
    ident = identity_ps_dbl_functor(fixture(name))
    report = comma_preservation_check(ident, ident)
    assert report.ok, str(report)
