"""
The ``dblcat`` command.

Exit codes: 0 when the structure is valid or the property holds or a search
found something, 1 on a negative verdict, 2 on an error, 64 on bad usage.

"""
import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from tabulate import tabulate

from dblcat import __version__
from dblcat.applications import (biadjoint_equiv_check, bilimit_equiv_check,
                                 conical_bilimit_check, find_weighted_bilimit,
                                 right_biadjoint)
from dblcat.cli.document import (dump, format_id, kind_of, load, parse_id,
                                 serialize, validate_structure)
from dblcat.cli.fixtures import FIXTURES, FIXTURE_DIR, fixture, shipped_documents
from dblcat.cli.generator import GEN_KINDS, PROFILES, gen
from dblcat.commas import slice_dbl
from dblcat.config import Options, get_options, set_options
from dblcat.constructions import (ar_star, hh_embed, hop_dblcat, op_2cat,
                                  underlying_h, vertical_2cat)
from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.report import Report
from dblcat.elements import conical_weight, el_2cat, el_dbl, mor_2cat
from dblcat.exceptions import DblCatError, NotInitial, NoTabulators, ValidationError
from dblcat.initiality import (dbl_bi_initial_definition_check, find_bi_initial,
                               find_dbl_bi_initial, initiality_equiv_check,
                               is_bi_initial, is_bi_terminal, is_dbl_bi_initial,
                               is_dbl_bi_terminal, trivfib_equiv_check)
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun
from dblcat.maps.pseudo import PsDblFunctor, PseudoFunctor2, identity_ps_dbl_functor
from dblcat.representability import birep_equiv_check, birep_from_point, find_birep
from dblcat.tabulators import (find_power_by_two, find_tabulator, has_tabulators,
                               tabulator_initiality_check)
from dblcat.types import Id

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_NEGATIVE", "EXIT_ERROR", "EXIT_USAGE"]

_LOG = get_logger("cli")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises :class:`UsageError` instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Input and output
# ---------------------------------------------------------------------------

def read_input(name: str, validate: bool = True):
    """A fixture name, a shipped ``.dc`` file name or a path to a document.
    Documents are checked against their axioms unless ``validate`` is False.

    Raises:
        ParseError, ValidationError: the document is malformed or invalid.
        OSError: the file cannot be read.
    """
    if name in FIXTURES:
        return fixture(name)
    path = Path(name)
    if not path.exists() and (FIXTURE_DIR / name).exists():
        path = FIXTURE_DIR / name
    _LOG.debug("reading %s", path)
    return load(path.read_text(encoding="utf-8"), validate)


def _show(value: Any) -> str:
    if isinstance(value, str):
        return value
    try:
        return format_id(value)
    except ValidationError:
        return repr(value)


def _expect(structure, *classes):
    if not isinstance(structure, classes):
        raise ValidationError("kind", "Expected {}; got {}".format(
            " or ".join(cls.__name__ for cls in classes), kind_of(structure)))
    return structure


def _two_category(structure) -> Fin2Cat:
    if isinstance(structure, FinDblCat):
        return underlying_h(structure)
    return _expect(structure, Fin2Cat)


def _double_category(structure) -> FinDblCat:
    if isinstance(structure, Fin2Cat):
        return hh_embed(structure)
    return _expect(structure, FinDblCat)


def _object(args, default: Optional[Sequence[Id]] = None) -> List[Id]:
    if args.object is not None:
        return [parse_id(args.object)]
    return list(default or ())


def _emit(args, title: str, headers: Sequence[str], rows: List[Sequence[Any]],
          payload: Optional[Dict] = None) -> None:
    if args.json:
        body = {"title": title, "rows": [[_show(c) for c in row] for row in rows]}
        body.update(payload or {})
        print(json.dumps(body, sort_keys=True, default=_show))
        return
    print(title)
    if rows:
        print(tabulate([[_show(c) for c in row] for row in rows], headers=headers))


def _emit_report(args, report: Report) -> int:
    rows = [(v.axiom, ", ".join(_show(i) for i in v.ids)) for v in report.violations]
    _emit(args, "{}: {}".format(report.name, "ok" if report.ok else "FAILED"),
          ("axiom", "ids"), rows, {"ok": report.ok})
    return EXIT_OK if report.ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_validate(args: argparse.Namespace) -> int:
    structure = read_input(args.input, validate=False)
    return _emit_report(args, validate_structure(structure))


_CONSTRUCTIONS: Dict[str, Callable] = {
    "hh": lambda s, cap: hh_embed(_expect(s, Fin2Cat)),
    "h": lambda s, cap: underlying_h(_expect(s, FinDblCat)),
    "v": lambda s, cap: vertical_2cat(_expect(s, FinDblCat), cap),
    "ar-star": lambda s, cap: ar_star(_expect(s, Fin2Cat), cap),
    "op": lambda s, cap: op_2cat(_expect(s, Fin2Cat)),
    "hop": lambda s, cap: hop_dblcat(_expect(s, FinDblCat)),
    "el": lambda s, cap: el_dbl(_expect(s, CatPsFun), cap),
    "el2": lambda s, cap: el_2cat(_expect(s, CatPsFun), cap),
    "mor": lambda s, cap: mor_2cat(_expect(s, CatPsFun), cap),
}


def cmd_build(args: argparse.Namespace) -> int:
    structure = _CONSTRUCTIONS[args.construction](read_input(args.input), args.cap)
    sys.stdout.write(dump(structure))
    return EXIT_OK


def _verdict_table(args, title: str, objects, decide) -> int:
    rows = []
    for o in objects:
        verdict = decide(o)
        rows.append((o, "yes" if verdict else "no", "" if verdict else str(verdict)))
    _emit(args, title, ("object", "verdict", "reason"), rows)
    return EXIT_OK if any(r[1] == "yes" for r in rows) else EXIT_NEGATIVE


def cmd_check(args: argparse.Namespace) -> int:
    structure = read_input(args.input)
    prop = args.property
    if prop in ("bi-initial", "bi-terminal"):
        cat = _two_category(structure)
        decide = is_bi_initial if prop == "bi-initial" else is_bi_terminal
        return _verdict_table(args, "{} in {}".format(prop, cat.name),
                              _object(args, cat.objects), lambda o: decide(cat, o))
    if prop in ("dbl-bi-initial", "dbl-bi-terminal"):
        dbl = _double_category(structure)
        decide = is_dbl_bi_initial if prop == "dbl-bi-initial" else is_dbl_bi_terminal
        return _verdict_table(args, "{} in {}".format(prop, dbl.name),
                              _object(args, dbl.objects), lambda o: decide(dbl, o))
    if prop == "tabulators":
        return _emit_report(args, has_tabulators(_double_category(structure)))
    f = _expect(structure, CatPsFun)
    if args.object is None:
        found = find_birep(f, args.cap)
    else:
        point = parse_id(args.object)
        if not isinstance(point, tuple) or len(point) != 2:
            raise UsageError("--object must be an element (C, x) of el(F)")
        try:
            found = birep_from_point(f, point[0], point[1])
        except NotInitial as err:
            _LOG.debug("%s", err)
            found = None
    return _emit_birep(args, f, found)


def _emit_birep(args, f: CatPsFun, found) -> int:
    if found is None:
        _emit(args, "no bi-representation of {}".format(f.name), (), [], {"found": False})
        return EXIT_NEGATIVE
    rows = [(c, len(w.u.source.objects), len(w.u.target.objects)) for c, w in sorted(
        found.witnesses.items(), key=lambda kv: _show(kv[0]))]
    _emit(args, "bi-representation of {}: I = {}, i = {}".format(
        f.name, _show(found.obj), _show(found.element)),
        ("C", "|hom(C, I)|", "|F(C)|"), rows,
        {"found": True, "object": _show(found.obj), "element": _show(found.element)})
    return EXIT_OK


def _xcheck_initiality(structure, cap) -> Report:
    dbl = _double_category(structure)
    report = Report(name="initiality_equiv_check({})".format(dbl.name))
    for o in dbl.objects:
        report.extend(initiality_equiv_check(dbl, o, cap), _show(o))
        report.extend(dbl_bi_initial_definition_check(dbl, o, cap), "definition " + _show(o))
    return report


def _xcheck_tabulators(structure, cap) -> Report:
    dbl = _double_category(structure)
    report = Report(name="tabulator_initiality_check({})".format(dbl.name))
    for o in dbl.objects:
        try:
            report.extend(tabulator_initiality_check(dbl, o, cap), _show(o))
        except NoTabulators as err:
            _LOG.info("%s", err)
            return report.fail("has tabulators", dbl.name)
    return report


def _xcheck_trivfib(structure, cap) -> Report:
    if isinstance(structure, PsDblFunctor):
        return trivfib_equiv_check(structure, cap)
    dbl = _double_category(structure)
    report = Report(name="trivfib_equiv_check(slices of {})".format(dbl.name))
    for o in dbl.objects:
        projection = slice_dbl(o, identity_ps_dbl_functor(dbl), cap).projection
        report.extend(trivfib_equiv_check(projection, cap), _show(o))
    return report


def _xcheck_bilimit(args, structure) -> Report:
    diagram = _expect(structure, PseudoFunctor2)
    weight = _weight(args, diagram)
    report = bilimit_equiv_check(weight, diagram, args.cap)
    if args.weight == "conical":
        report.extend(conical_bilimit_check(diagram, args.cap), "conical")
    return report


def cmd_xcheck(args: argparse.Namespace) -> int:
    structure = read_input(args.input)
    theorem = args.theorem
    if theorem == "initiality":
        report = _xcheck_initiality(structure, args.cap)
    elif theorem == "tabulators":
        report = _xcheck_tabulators(structure, args.cap)
    elif theorem == "trivfib":
        report = _xcheck_trivfib(structure, args.cap)
    elif theorem == "birep":
        report = birep_equiv_check(_expect(structure, CatPsFun), args.cap)
    elif theorem == "biadjoint":
        report = biadjoint_equiv_check(_expect(structure, PseudoFunctor2), args.cap)
    else:
        report = _xcheck_bilimit(args, structure)
    _LOG.info("%s", report)
    return _emit_report(args, report)


def _weight(args, diagram: PseudoFunctor2) -> CatPsFun:
    if args.weight in (None, "conical"):
        return conical_weight(diagram.source)
    return _expect(read_input(args.weight), CatPsFun)


def _found_list(args, title: str, found: Tuple) -> int:
    _emit(args, title, ("object",), [(o,) for o in found], {"found": [_show(o) for o in found]})
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_search(args: argparse.Namespace) -> int:
    source = args.input or args.diagram
    if source is None:
        raise UsageError("search needs --in or --diagram")
    structure = read_input(source)
    target = args.target
    if target == "bi-initial":
        cat = _two_category(structure)
        return _found_list(args, "bi-initial objects of {}".format(cat.name), find_bi_initial(cat))
    if target == "dbl-bi-initial":
        dbl = _double_category(structure)
        return _found_list(args, "double bi-initial objects of {}".format(dbl.name),
                           find_dbl_bi_initial(dbl))
    if target == "tabulator":
        dbl = _double_category(structure)
        vmors = [parse_id(args.vmor)] if args.vmor is not None else list(dbl.vmor)
        rows = []
        for u in vmors:
            w = find_tabulator(dbl, u)
            rows.append((u,) + ((w.apex, w.square, w.p, w.q) if w else ("-",) * 4))
        _emit(args, "tabulators in {}".format(dbl.name), ("vertical", "apex", "square", "p", "q"), rows)
        return EXIT_OK if all(r[1] != "-" for r in rows) else EXIT_NEGATIVE
    if target == "power":
        cat = _two_category(structure)
        rows = []
        for c in _object(args, cat.objects):
            w = find_power_by_two(cat, c)
            rows.append((c,) + ((w.apex, w.cone) if w else ("-", "-")))
        _emit(args, "powers by 2 in {}".format(cat.name), ("object", "apex", "cone"), rows)
        return EXIT_OK if all(r[1] != "-" for r in rows) else EXIT_NEGATIVE
    if target == "birep":
        f = _expect(structure, CatPsFun)
        return _emit_birep(args, f, find_birep(f, args.cap))
    if target == "biadjoint":
        left = _expect(structure, PseudoFunctor2)
        result = right_biadjoint(left, args.cap)
        rows = [(d, v[0], v[1]) if v else (d, "-", "-") for d, v in result.verdicts.items()]
        _emit(args, "right bi-adjoint of {}: {}".format(
            left.name, "total" if result.total else "partial"),
            ("D", "RD", "counit"), rows, {"total": result.total})
        return EXIT_OK if result.total else EXIT_NEGATIVE
    diagram = _expect(structure, PseudoFunctor2)
    weight = _weight(args, diagram)
    found = find_weighted_bilimit(weight, diagram, args.cap)
    if found is None:
        _emit(args, "no {}-weighted bi-limit of {}".format(weight.name, diagram.name), (), [],
              {"found": False})
        return EXIT_NEGATIVE
    rows = [(i, x, y) for i in diagram.source.objects
            for x, y in sorted(found.cone.components[i].on_objects.items(),
                               key=lambda kv: _show(kv[0]))]
    _emit(args, "{}-weighted bi-limit of {}: {}".format(weight.name, diagram.name, _show(found.obj)),
          ("index", "weight", "leg"), rows, {"found": True, "object": _show(found.obj)})
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize(gen(args.seed, args.profile, args.kind)))
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    shipped = shipped_documents()
    rows = [(name, kind_of(fixture(name)), shipped[name].name if name in shipped else "")
            for name in FIXTURES]
    _emit(args, "{} fixtures".format(len(rows)), ("name", "kind", "file"), rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON report")
    common.add_argument("--cap", type=int, default=None, help="Sort-size cap for constructions")

    ap = _Parser(prog="dblcat", description="Finite 2-category and double-category workbench")
    ap.add_argument("--version", action="version", version="%(prog)s " + __version__)
    ap.add_argument("--progress", action="store_true", help="Show progress bars")
    ap.add_argument("--log-level", default=None, help="Log level of the dblcat loggers")
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)
    sub.required = True

    v = sub.add_parser("validate", parents=[common], help="Validate a document")
    v.add_argument("--in", dest="input", required=True)
    v.set_defaults(func=cmd_validate)

    b = sub.add_parser("build", parents=[common], help="Print a derived structure")
    b.add_argument("construction", choices=sorted(_CONSTRUCTIONS))
    b.add_argument("--in", dest="input", required=True)
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", parents=[common], help="Decide a property")
    c.add_argument("property", choices=("bi-initial", "bi-terminal", "dbl-bi-initial",
                                        "dbl-bi-terminal", "tabulators", "birep"))
    c.add_argument("--in", dest="input", required=True)
    c.add_argument("--object", default=None)
    c.set_defaults(func=cmd_check)

    x = sub.add_parser("xcheck", parents=[common], help="Cross-check equivalent criteria")
    x.add_argument("theorem", choices=("initiality", "tabulators", "trivfib", "birep",
                                       "biadjoint", "bilimit"))
    x.add_argument("--in", dest="input", required=True)
    x.add_argument("--weight", default="conical")
    x.set_defaults(func=cmd_xcheck)

    s = sub.add_parser("search", parents=[common], help="Search for universal objects")
    s.add_argument("target", choices=("bi-initial", "dbl-bi-initial", "tabulator", "power",
                                      "birep", "biadjoint", "bilimit"))
    s.add_argument("--in", dest="input", default=None)
    s.add_argument("--diagram", default=None)
    s.add_argument("--weight", default="conical")
    s.add_argument("--vmor", default=None)
    s.add_argument("--object", default=None)
    s.set_defaults(func=cmd_search)

    g = sub.add_parser("gen", parents=[common], help="Generate a valid document")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--profile", choices=sorted(PROFILES), default="tiny")
    g.add_argument("--kind", choices=GEN_KINDS, default="double_category")
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("fixtures", parents=[common], help="List shipped fixtures")
    f.set_defaults(func=cmd_fixtures)
    return ap


def _configure(args: argparse.Namespace) -> None:
    options = Options(_dict=get_options().as_dict())
    if args.progress:
        options.show_progress = True
    if args.log_level:
        options.log_level = args.log_level
    if getattr(args, "cap", None) is not None:
        options.cap = args.cap
    set_options(options)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _configure(args)
        return int(args.func(args))
    except UsageError as err:
        print("usage error: {}".format(err), file=sys.stderr)
        return EXIT_USAGE
    except (DblCatError, OSError) as err:
        _LOG.debug("command failed", exc_info=True)
        print("error: {}".format(err), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
