import pytest

from dblcat.cli.fixtures import fixture
from dblcat.elements import el_dbl, representable_psfun
from dblcat.exceptions import NoFiller, NotInitial
from dblcat.maps.psnat import enumerate_psnats, validate_modification
from dblcat.representability import (BiRep, birep_equiv_check, birep_from_point,
                                     find_birep, rectify_birep, unique_filler, verify_birep)

from tests.conftest import PSFUN_NAMES


class TestFindBirep:

    def test_constant_at_a_contractible_groupoid(self):
        f = fixture("F_ISO")
        found = find_birep(f)
        assert (found.obj, found.element) == ("*", "a")
        assert set(found.witnesses) == {"*"}
        assert verify_birep(f, found).ok

    def test_constant_at_the_arrow(self):
        f = fixture("F_ARR")
        assert find_birep(f) is None
        with pytest.raises(NotInitial):
            birep_from_point(f, "*", "a")

    def test_representable(self, arr):
        f = representable_psfun(arr, 1)
        found = find_birep(f)
        assert (found.obj, found.element) == (1, "id_1")
        with pytest.raises(NotInitial):
            birep_from_point(f, 0, "f")

    def test_wrong_boundary_is_rejected(self, arr):
        found = find_birep(fixture("F_ISO"))
        report = verify_birep(representable_psfun(arr, 1), found)
        assert report.axioms == ("boundary",)


def test_rectify(arr):
    f = representable_psfun(arr, 1)
    found = find_birep(f)
    rectified, gamma = rectify_birep(f, BiRep(found.obj, found.element, found.rho))
    assert rectified.element == "id_1"
    assert rectified.rho == found.rho
    assert validate_modification(gamma).ok


def test_rectify_a_twisted_representation():
    f = fixture("F_ISO_ARR")
    obj = find_birep(f).obj
    ident = f.base.identity[obj]
    candidates = enumerate_psnats(representable_psfun(f.base, obj), f)
    assert len(candidates) == 4
    twisted = []
    for rho in candidates:
        element = rho.components[obj].ob(ident)
        rectified, gamma = rectify_birep(f, BiRep(obj, element, rho))
        assert rectified.element == element
        assert verify_birep(f, rectified).ok
        assert validate_modification(gamma).ok
        if rectified.rho.key() != rho.key():
            twisted.append(gamma)
    assert len(twisted) == 2
    for gamma in twisted:
        assert any(arrow not in f.fibre(c).identity.values()
                   for c, component in gamma.components.items()
                   for arrow in component.components.values())


def test_rectify_rejects_a_non_representation(arr):
    f = representable_psfun(arr, 1)
    found = find_birep(f)
    with pytest.raises(NotInitial):
        rectify_birep(f, BiRep(1, "f", found.rho))
    with pytest.raises(NotInitial):
        rectify_birep(fixture("F_ISO"), BiRep("*", "a", found.rho))


class TestUniqueFiller:

    def test_identity_square(self):
        f = fixture("F_ISO")
        el = el_dbl(f)
        top = el.hid[("*", "a")]
        assert unique_filler(f, top, top, el.vid[("*", "a")]) == el.vid_sq[top]

    def test_no_filler(self):
        f = fixture("F_ARR")
        el = el_dbl(f)
        alpha = (("*", "a"), ("*", "b"), "f")
        with pytest.raises(NoFiller):
            unique_filler(f, el.hid[("*", "a")], el.hid[("*", "b")], alpha)


@pytest.mark.parametrize("name", PSFUN_NAMES)
def test_verdicts_agree(name):
    report = birep_equiv_check(fixture(name))
    assert report.ok, str(report)
