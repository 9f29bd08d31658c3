import pytest

from dblcat.cli.fixtures import fixture
from dblcat.constructions import (ar_star, ar_star_map, hh_embed, hh_embed_map, hop_dblcat,
                                  object_functor, object_functor_2, op_2cat, op_psfun, product_2,
                                  product_dbl, projection_2, projection_dbl, terminal_2cat,
                                  underlying_h, underlying_h_map, vertical_2cat,
                                  vertical_2cat_map, vertical_embed)
from dblcat.core.validate import validate_fin_2cat, validate_fin_dblcat
from dblcat.exceptions import SizeCapExceeded
from dblcat.maps.pseudo import validate_ps_dbl_functor, validate_pseudofunctor2

from tests.conftest import DOUBLE_CATEGORY_NAMES, FUNCTOR2_NAMES, TWO_CATEGORY_NAMES


@pytest.mark.parametrize("name", TWO_CATEGORY_NAMES)
class TestEmbeddingIdentities:

    def test_underlying_of_embedding(self, name):
        cat = fixture(name)
        assert underlying_h(hh_embed(cat)) == cat

    def test_vertical_of_embedding_is_ar_star(self, name):
        cat = fixture(name)
        assert vertical_2cat(hh_embed(cat)) == ar_star(cat)

    def test_embedding_validates(self, name):
        cat = fixture(name)
        assert validate_fin_dblcat(hh_embed(cat)).ok
        assert validate_fin_2cat(ar_star(cat)).ok

    def test_op_is_involutive(self, name):
        cat = fixture(name)
        twice = op_2cat(op_2cat(cat))
        assert twice == cat
        assert twice.name == cat.name
        assert validate_fin_2cat(op_2cat(cat)).ok


@pytest.mark.parametrize("name", FUNCTOR2_NAMES)
def test_map_level_identities(name):
    f = fixture(name)
    embedded = hh_embed_map(f)
    assert validate_ps_dbl_functor(embedded).ok
    assert underlying_h_map(embedded) == f
    assert vertical_2cat_map(embedded) == ar_star_map(f)


@pytest.mark.parametrize("name", FUNCTOR2_NAMES)
def test_op_of_a_pseudofunctor(name):
    f = fixture(name)
    dual = op_psfun(f)
    assert validate_pseudofunctor2(dual).ok
    assert op_psfun(dual) == f
    assert dual.source == op_2cat(f.source)


@pytest.mark.parametrize("name", DOUBLE_CATEGORY_NAMES)
def test_hop_is_involutive(name):
    dbl = fixture(name)
    assert hop_dblcat(hop_dblcat(dbl)) == dbl
    assert validate_fin_dblcat(hop_dblcat(dbl)).ok


@pytest.mark.parametrize("name", DOUBLE_CATEGORY_NAMES)
def test_vertical_2cat_validates(name):
    assert validate_fin_2cat(vertical_2cat(fixture(name))).ok


def test_vertical_embed(iso):
    dbl = vertical_embed(iso)
    assert dbl.hmor == ("a", "b")
    assert dbl.vmor == iso.morphisms
    assert validate_fin_dblcat(dbl).ok


class TestProducts:

    def test_product_2(self, arr, cell):
        prod = product_2(arr, cell)
        assert len(prod.objects) == 4
        assert validate_fin_2cat(prod).ok
        assert validate_pseudofunctor2(projection_2(prod, cell, 1)).ok

    def test_product_dbl(self, harr, varr):
        prod = product_dbl(harr, varr)
        assert validate_fin_dblcat(prod).ok
        assert validate_ps_dbl_functor(projection_dbl(prod, varr, 1)).ok

    def test_cap(self, sq):
        with pytest.raises(SizeCapExceeded):
            product_dbl(sq, sq, cap=8)


def test_terminal_and_object_functors(arr, harr):
    assert validate_fin_2cat(terminal_2cat()).ok
    assert validate_pseudofunctor2(object_functor_2(arr, 1)).ok
    assert validate_ps_dbl_functor(object_functor(harr, 0)).ok
