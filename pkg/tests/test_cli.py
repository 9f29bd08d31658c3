import json

import pytest

from dblcat import __version__
from dblcat.cli.document import load, serialize
from dblcat.cli.fixtures import FIXTURE_DIR, fixture
from dblcat.cli.generator import gen
from dblcat.cli.main import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main
from dblcat.constructions import hh_embed


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCheck:

    def test_bi_initial(self, capsys):
        code, out, _ = run(capsys, "check", "bi-initial", "--in", "arr.dc", "--object", "0")
        assert code == EXIT_OK
        assert "yes" in out

    def test_not_bi_initial(self, capsys):
        code, out, _ = run(capsys, "check", "bi-initial", "--in", "ARR", "--object", "1")
        assert code == EXIT_NEGATIVE
        assert "no-morphism-to" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "check", "bi-initial", "--in", "ARR", "--json")
        assert code == EXIT_OK
        body = json.loads(out)
        assert body["rows"] == [["0", "yes", ""], ["1", "no", "no-morphism-to: 0"]]

    def test_birep_at_a_point(self, capsys):
        code, out, _ = run(capsys, "check", "birep", "--in", "F_ISO", "--object", "(*, a)")
        assert code == EXIT_OK
        assert "I = *, i = a" in out

    def test_birep_point_must_be_a_pair(self, capsys):
        code, _, err = run(capsys, "check", "birep", "--in", "F_ISO", "--object", "0")
        assert code == EXIT_USAGE
        assert "usage error" in err

    def test_tabulators(self, capsys):
        assert run(capsys, "check", "tabulators", "--in", "HARR")[0] == EXIT_OK


class TestXcheck:

    def test_initiality(self, capsys):
        code, out, _ = run(capsys, "xcheck", "initiality", "--in", "varr.dc")
        assert code == EXIT_OK
        assert "ok" in out

    def test_missing_tabulators(self, capsys):
        code, out, _ = run(capsys, "xcheck", "tabulators", "--in", "ICELL", "--json")
        assert code == EXIT_NEGATIVE
        assert json.loads(out)["ok"] is False

    @pytest.mark.parametrize("theorem, source", [
        ("trivfib", "HARR"),
        ("birep", "F_ISO"),
        ("biadjoint", "ARR_TO_TERM"),
        ("bilimit", "PAIR01"),
    ])
    def test_theorems_hold(self, capsys, theorem, source):
        code, out, _ = run(capsys, "xcheck", theorem, "--in", source)
        assert code == EXIT_OK, out


class TestSearch:

    def test_conical_bilimit(self, capsys):
        code, out, _ = run(capsys, "search", "bilimit", "--diagram", "PAIR01",
                           "--weight", "conical")
        assert code == EXIT_OK
        assert "bi-limit of pair01: 0" in out

    def test_biadjoint(self, capsys):
        code, out, _ = run(capsys, "search", "biadjoint", "--in", "ARR_TO_TERM", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["total"] is True

    def test_no_birep(self, capsys):
        assert run(capsys, "search", "birep", "--in", "F_ARR")[0] == EXIT_NEGATIVE

    def test_needs_an_input(self, capsys):
        assert run(capsys, "search", "bilimit")[0] == EXIT_USAGE


class TestValidate:

    def test_shipped(self, capsys):
        assert run(capsys, "validate", "--in", "arr.dc")[0] == EXIT_OK

    def test_axiom_violation(self, capsys, tmp_path):
        text = (FIXTURE_DIR / "arr.dc").read_text().replace("f . id_0 = f", "f . id_0 = id_1")
        path = tmp_path / "bad.dc"
        path.write_text(text)
        code, out, _ = run(capsys, "validate", "--in", str(path))
        assert code == EXIT_NEGATIVE
        assert "FAILED" in out

    def test_dangling_id(self, capsys, tmp_path):
        path = tmp_path / "bad.dc"
        path.write_text("kind category\nobjects 0\ntable src\n  f = 9\n")
        code, _, err = run(capsys, "validate", "--in", str(path))
        assert code == EXIT_ERROR
        assert err.startswith("error:")

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "validate", "--in", str(tmp_path / "none.dc"))[0] == EXIT_ERROR


class TestBuildAndGen:

    def test_build(self, capsys):
        code, out, _ = run(capsys, "build", "hh", "--in", "ARR")
        assert code == EXIT_OK
        assert load(out) == hh_embed(fixture("ARR"))

    def test_wrong_kind(self, capsys):
        assert run(capsys, "build", "el", "--in", "ARR")[0] == EXIT_ERROR

    def test_cap(self, capsys):
        assert run(capsys, "build", "v", "--in", "SQ", "--cap", "1")[0] == EXIT_ERROR

    def test_gen_is_deterministic(self, capsys):
        first = run(capsys, "gen", "--seed", "1")
        second = run(capsys, "gen", "--seed", "1")
        assert first == second
        assert first[1] == serialize(gen(1))

    def test_fixtures(self, capsys):
        code, out, _ = run(capsys, "fixtures")
        assert code == EXIT_OK
        assert "arr.dc" in out


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["validate"],
                                  ["check", "initial", "--in", "ARR"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["--version"])
    assert exit_info.value.code == 0
    assert __version__ in capsys.readouterr().out
