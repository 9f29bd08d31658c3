import pytest

from dblcat.applications import (biadjoint_equiv_check, bilimit_equiv_check,
                                 conical_bilimit_check, find_conical_bilimit,
                                 find_weighted_bilimit, right_biadjoint, right_biadjoint_at,
                                 verify_weighted_bilimit)
from dblcat.cli.fixtures import fixture
from dblcat.elements import conical_weight


class TestRightBiadjoints:

    def test_identity(self):
        result = right_biadjoint(fixture("ID_ARR"))
        assert result.verdicts == {0: (0, "id_0"), 1: (1, "id_1")}
        assert result.total

    def test_collapse_to_a_point(self):
        result = right_biadjoint(fixture("ARR_TO_TERM"))
        assert result.verdicts == {"*": (1, "id_*")}
        assert result

    def test_partial(self):
        result = right_biadjoint(fixture("COLLAPSE"))
        assert result.verdicts == {0: (0, "id_0"), 1: None}
        assert not result.total
        assert result.assignment == {0: (0, "id_0")}
        assert right_biadjoint_at(fixture("COLLAPSE"), 1) is None

    def test_partial_over_a_noninvertible_cell(self):
        result = right_biadjoint(fixture("CELL_AT_0"))
        assert result.verdicts[0][0] == "*"
        assert result.verdicts[1] is None
        assert not result.total

    @pytest.mark.parametrize("name", ["ID_ARR", "ARR_TO_TERM", "COLLAPSE", "AT_1", "CELL_AT_0"])
    def test_verdicts_agree(self, name):
        report = biadjoint_equiv_check(fixture(name))
        assert report.ok, str(report)


class TestWeightedBilimits:

    def test_binary_product(self):
        found = find_conical_bilimit(fixture("PAIR01"))
        assert found.obj == 0
        assert tuple(found.cone.components[i].ob("*") for i in (0, 1)) == ("id_0", "f")

    def test_no_product_in_a_discrete_category(self):
        assert find_conical_bilimit(fixture("ID_DISC2")) is None

    def test_power_by_the_arrow(self):
        weight = fixture("W_ARROW")
        assert find_weighted_bilimit(weight, fixture("TERM_AT_0")).obj == 0
        assert find_weighted_bilimit(weight, fixture("AT_1")).obj == 1

    def test_verify(self):
        weight, diagram = fixture("W_ARROW"), fixture("TERM_AT_0")
        found = find_weighted_bilimit(weight, diagram)
        report = verify_weighted_bilimit(weight, diagram, found.obj, found.cone)
        assert report.ok
        assert set(report.witness) == {0, 1}
        assert verify_weighted_bilimit(weight, diagram, 1, found.cone).axioms == ("cone",)
        assert verify_weighted_bilimit(weight, diagram, 7, found.cone).axioms == ("apex",)

    @pytest.mark.parametrize("name", ["PAIR01", "TERM_AT_0", "AT_1"])
    def test_conical_routes_agree(self, name):
        report = conical_bilimit_check(fixture(name))
        assert report.ok, str(report)

    def test_weighted_verdicts_agree(self, disc2):
        report = bilimit_equiv_check(fixture("W_ARROW"), fixture("TERM_AT_0"))
        assert report.ok, str(report)
        report = bilimit_equiv_check(conical_weight(disc2), fixture("PAIR01"))
        assert report.ok, str(report)
