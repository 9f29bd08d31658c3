import pytest
from hypothesis import HealthCheck, example, given, settings
from hypothesis import strategies as st

from dblcat.cli.document import serialize, validate_structure
from dblcat.cli.generator import (GEN_KINDS, LOCAL_KINDS, PROFILES, gen, gen_structure,
                                  leveled_two_category)
from dblcat.constructions import vertical_2cat
from dblcat.core.validate import validate_fin_2cat
from dblcat.elements import el_dbl
from dblcat.exceptions import OptionsError

seeds = st.integers(min_value=0, max_value=2 ** 63)


@pytest.mark.parametrize("local", LOCAL_KINDS)
def test_leveled_two_categories_validate(local):
    cat = leveled_two_category(3, [(0, 1), (0, 2), (1, 2)], 2, local)
    assert len(cat.morphisms) == 3 + 3 * 2
    report = validate_fin_2cat(cat)
    assert report.ok, str(report)


def test_unknown_local_structure():
    with pytest.raises(OptionsError):
        leveled_two_category(2, [(0, 1)], 1, "lax")


@pytest.mark.parametrize("kind", GEN_KINDS)
@settings(max_examples=50, deadline=None,
          suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(seed=seeds)
def test_generated_structures_validate(kind, seed):
    report = validate_structure(gen_structure(seed, "tiny", kind))
    assert report.ok, str(report)


@settings(max_examples=50, deadline=None,
          suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(seed=seeds)
def test_generated_double_categories_fit_the_profile(seed):
    profile = PROFILES["tiny"]
    dbl = gen_structure(seed, "tiny", "double_category")
    assert len(dbl.objects) <= profile.objects
    assert len(dbl.hmor) <= profile.hmor
    assert len(dbl.vmor) <= profile.vmor


def test_generation_is_deterministic():
    assert serialize(gen(7)) == serialize(gen(7))
    assert gen(7).name == "gen-7-tiny"
    assert gen(7, name="mine").name == "mine"


def test_unknown_profile_or_kind():
    with pytest.raises(OptionsError):
        gen_structure(1, profile="huge")
    with pytest.raises(OptionsError):
        gen_structure(1, kind="monoid")


@settings(max_examples=50, deadline=None,
          suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(seed=seeds)
@example(seed=3)
def test_generated_instances_stay_under_the_default_cap(seed):
    vertical_2cat(gen_structure(seed, "tiny", "double_category"))
    vertical_2cat(el_dbl(gen_structure(seed, "tiny", "cat_psfun")))


@pytest.mark.parametrize("seed", range(10))
def test_codiscrete_levels_are_bounded(seed):
    cat = gen_structure(seed, "tiny", "two_category")
    if cat.name.startswith("c"):
        assert int(cat.name.split("x")[1]) <= 2
