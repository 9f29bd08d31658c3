import pytest

from dblcat.constructions import hh_embed
from dblcat.exceptions import NoTabulators, NoTensors, UnknownId
from dblcat.cli.fixtures import fixture
from dblcat.maps.catpsfun import constant_psfun
from dblcat.tabulators import (TabulatorWitness, find_power_by_two, find_tabulator,
                               find_tensor_by_two, has_powers_by_two, has_tabulators,
                               has_tensors_by_two, preserves_powers_by_two,
                               tabulator_initiality_check)


class TestTabulators:

    def test_horizontal_arrow(self, harr):
        assert find_tabulator(harr, 0) == TabulatorWitness(0, 0, "1_id_0", "id_0", "id_0")
        assert find_tabulator(harr, 1).apex == 1
        assert has_tabulators(harr).ok

    def test_invertible_cell_has_no_tabulator_at_the_target(self, icell):
        dbl = hh_embed(icell)
        assert find_tabulator(dbl, 1) is None
        assert not has_tabulators(dbl).ok

    def test_vertical_arrow_has_no_tabulator(self, varr):
        assert find_tabulator(varr, "u") is None
        assert [v.ids for v in has_tabulators(varr).violations] == [("u",)]
        with pytest.raises(NoTabulators):
            tabulator_initiality_check(varr, 0)

    def test_unknown_vertical_morphism(self, harr):
        with pytest.raises(UnknownId):
            find_tabulator(harr, "u")

    @pytest.mark.parametrize("i", [0, 1])
    def test_initiality_with_tabulators(self, harr, i):
        report = tabulator_initiality_check(harr, i)
        assert report.ok, str(report)

    def test_initiality_without_tabulators(self, icell):
        with pytest.raises(NoTabulators):
            tabulator_initiality_check(hh_embed(icell), 0)


class TestPowers:

    def test_power_of_the_source(self, arr):
        witness = find_power_by_two(arr, 0)
        assert (witness.apex, witness.cone) == (0, "1_id_0")
        assert set(witness.isomorphisms) == {0, 1}
        assert has_powers_by_two(arr).ok

    def test_tensor(self, arr):
        assert find_tensor_by_two(arr, 1).apex == 1
        assert has_tensors_by_two(arr).ok

    def test_parallel_pair_has_no_power(self, cell):
        assert find_power_by_two(cell, 1) is None
        assert not has_powers_by_two(cell).ok

    def test_preservation(self):
        assert preserves_powers_by_two(fixture("F_TERM")).ok
        assert not preserves_powers_by_two(fixture("F_ISO")).ok

    def test_preservation_needs_tensors(self, cell, two):
        with pytest.raises(NoTensors):
            preserves_powers_by_two(constant_psfun(cell, two))
