import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dblcat.cli.document import (dump, format_id, kind_of, load, normalize, parse,
                                 parse_id, serialize, validate_structure)
from dblcat.cli.fixtures import FIXTURE_DIR, fixture, shipped_documents
from dblcat.exceptions import ParseError, ValidationError
from dblcat.maps.psnat import identity_psnat, validate_psnat

ARR_TEXT = (FIXTURE_DIR / "arr.dc").read_text()


@pytest.mark.parametrize("name", sorted(shipped_documents()))
def test_shipped_documents_match_the_library(name):
    text = shipped_documents()[name].read_text()
    assert load(text) == fixture(name)


def test_serialization_is_canonical():
    once = normalize(ARR_TEXT)
    assert normalize(once) == once
    assert dump(load(ARR_TEXT)) == once
    assert "#" not in once


def test_maps_reload(sq):
    collapse = fixture("COLLAPSE")
    assert load(dump(collapse)) == collapse
    alpha = identity_psnat(fixture("F_ISO"))
    assert validate_psnat(load(dump(alpha))).ok
    assert kind_of(alpha) == "psnat"
    assert kind_of(fixture("F_ISO")) == "cat_psfun"
    assert validate_structure(sq).ok


class TestIds:

    @pytest.mark.parametrize("text, value", [
        ("12", 12),
        ("1_f", "1_f"),
        ("(0, f)", (0, "f")),
        ("((id, 0), 1_id_0)", (("id", 0), "1_id_0")),
        ('"a b"', "a b"),
    ])
    def test_parse(self, text, value):
        assert parse_id(text) == value

    @settings(suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(st.recursive(st.integers(-5, 50) | st.text(alphabet="abfgi_01*'", min_size=1, max_size=4),
                        lambda inner: st.tuples(inner, inner), max_leaves=6))
    def test_formatted_ids_read_back(self, value):
        assert parse_id(format_id(value)) == value

    def test_trailing_input(self):
        with pytest.raises(ParseError):
            parse_id("f g")

    def test_format(self):
        assert format_id(("id", 0)) == "(id, 0)"
        assert format_id("end") == '"end"'
        assert format_id("H(ARR)") == '"H(ARR)"'
        assert format_id("7") == '"7"'
        with pytest.raises(ValidationError):
            format_id(True)


class TestErrors:

    def test_dangling_id(self):
        text = ARR_TEXT.replace("  id_1 = 1\ntable identity", "  id_1 = 7\ntable identity")
        with pytest.raises(ParseError) as err:
            load(text)
        assert (err.value.line, err.value.column) == (12, 3)

    def test_missing_kind(self):
        with pytest.raises(ParseError):
            parse("objects 0 1\n")

    def test_unknown_kind(self):
        with pytest.raises(ParseError):
            parse("kind monoid\n")

    def test_end_without_part(self):
        with pytest.raises(ParseError):
            parse("kind category\nend\n")

    def test_unterminated_part(self):
        with pytest.raises(ParseError):
            parse("kind psnat\npart source\n  kind cat_psfun\n")

    def test_entry_outside_a_table(self):
        with pytest.raises(ParseError) as err:
            parse("kind category\n  f = 0\n")
        assert err.value.line == 2

    def test_duplicate_entry(self):
        with pytest.raises(ParseError):
            parse("kind category\ntable src\n  f = 0\n  f = 1\n")

    def test_axiom_violation(self):
        text = ARR_TEXT.replace("f . id_0 = f", "f . id_0 = id_1")
        with pytest.raises(ValidationError):
            load(text)
        assert load(text, validate=False).comp[("f", "id_0")] == "id_1"


def test_serialize_quotes_strings_that_look_like_ints():
    doc = parse('kind category\nobjects "0" 0\n')
    assert doc.objects == ("0", 0)
    assert serialize(doc) == 'kind category\nobjects 0 "0"\n'


def test_comments_after_quoted_ids():
    doc = parse('kind category\nname "my cat"  # a comment\nobjects 0 # one object\n')
    assert doc.name == "my cat"
    assert doc.objects == (0,)
    assert parse('kind category\nname "a#b" # c\n').name == "a#b"
