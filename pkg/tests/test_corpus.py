"""Cross-checks over the seeded corpus of generated instances."""
import pytest

from dblcat.cli.fixtures import fixture
from dblcat.cli.generator import gen_structure
from dblcat.commas import slice_dbl
from dblcat.constructions import underlying_h
from dblcat.elements import representable_psfun
from dblcat.exceptions import NoTabulators
from dblcat.initiality import (NO_SQUARE, bi_initial_definition_check,
                               dbl_bi_initial_definition_check, initiality_equiv_check,
                               is_bi_initial, is_dbl_bi_initial, trivfib_equiv_check)
from dblcat.maps.pseudo import identity_ps_dbl_functor
from dblcat.representability import birep_equiv_check, verify_birep
from dblcat.tabulators import has_tabulators, tabulator_initiality_check

CORPUS = range(200)
PSFUN_CORPUS = range(60)


@pytest.mark.parametrize("seed", CORPUS)
def test_initiality_verdicts_agree(seed):
    dbl = gen_structure(seed, "tiny")
    for x in dbl.objects:
        report = initiality_equiv_check(dbl, x)
        assert report.ok, str(report)


@pytest.mark.parametrize("seed", CORPUS)
def test_definitions_agree_with_characterizations(seed):
    dbl = gen_structure(seed, "tiny")
    horizontal = underlying_h(dbl)
    for x in dbl.objects:
        report = bi_initial_definition_check(horizontal, x)
        assert report.ok, str(report)
        report = dbl_bi_initial_definition_check(dbl, x)
        assert report.ok, str(report)


@pytest.mark.parametrize("seed", CORPUS)
def test_tabulators_reduce_to_horizontal_initiality(seed):
    dbl = gen_structure(seed, "tiny")
    if not has_tabulators(dbl).ok:
        with pytest.raises(NoTabulators):
            tabulator_initiality_check(dbl, dbl.objects[0])
        return
    for x in dbl.objects:
        report = tabulator_initiality_check(dbl, x)
        assert report.ok, str(report)


def test_corpus_has_instances_with_tabulators():
    assert any(has_tabulators(gen_structure(seed, "tiny")).ok for seed in CORPUS)


def test_slice_projections_are_trivial_fibrations_consistently():
    projections = [slice_dbl(x, identity_ps_dbl_functor(fixture(name))).projection
                   for name in ("HARR", "VARR", "VARR_H", "SQ")
                   for x in fixture(name).objects]
    for seed in range(60):
        dbl = gen_structure(seed, "tiny")
        projections += [slice_dbl(x, identity_ps_dbl_functor(dbl)).projection
                        for x in dbl.objects]
    assert len(projections) >= 50
    for p in projections:
        report = trivfib_equiv_check(p)
        assert report.ok, str(report)


def test_tabulator_hypothesis_is_needed():
    dbl = fixture("VARR_H")
    assert [v.ids for v in has_tabulators(dbl).violations] == [("u",)]
    assert is_bi_initial(underlying_h(dbl), 0)
    report = is_dbl_bi_initial(dbl, 0)
    assert not report
    assert report.tag == NO_SQUARE
    with pytest.raises(NoTabulators):
        tabulator_initiality_check(dbl, 0)
    assert initiality_equiv_check(dbl, 0).ok


@pytest.mark.parametrize("seed", PSFUN_CORPUS)
def test_representability_verdicts_agree(seed):
    f = gen_structure(seed, "tiny", "cat_psfun")
    report = birep_equiv_check(f)
    assert report.ok, str(report)
    found = report.witness["birep"]
    if found is not None:
        assert verify_birep(f, found).ok


@pytest.mark.parametrize("name", ["TERM", "ARR", "CELL", "ICELL", "DISC2"])
def test_representables_over_fixture_bases(name):
    base = fixture(name)
    for c in base.objects:
        f = representable_psfun(base, c)
        report = birep_equiv_check(f)
        assert report.ok, str(report)
        assert report.witness["birep"] is not None
