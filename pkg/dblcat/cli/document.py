"""
A line-oriented text format for finite structures and the maps between them.

A document is a sequence of lines; ``#`` starts a comment::

    kind two_category
    name CELL
    objects 0 1
    table src
      f = 0
      g = 0
    table comp
      f . id_0 = f
    part fibre 0
      kind category
      ...
    end

``table NAME [KEY ...]`` opens a table whose entries are ``a = b`` or
``g . f = h`` (a composable pair, outermost first). Ids are integers,
bare names, double-quoted strings or parenthesised tuples of ids.
``part ROLE [KEY ...]`` nests a whole document until the matching ``end``.

"""
import json
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from typeguard import typechecked

from dblcat.core.fin2cat import Fin2Cat
from dblcat.core.fincat import FinCat
from dblcat.core.findblcat import FinDblCat
from dblcat.core.order import id_key, ordered
from dblcat.core.report import Report
from dblcat.core.validate import validate_fin_2cat, validate_fin_cat, validate_fin_dblcat
from dblcat.exceptions import DblCatError, ParseError, ValidationError
from dblcat.logs import get_logger
from dblcat.maps.catpsfun import CatPsFun, validate_cat_psfun
from dblcat.maps.functors import Functor, NatTrans, compose_functors
from dblcat.maps.pseudo import (PsDblFunctor, PseudoFunctor2,
                                validate_ps_dbl_functor, validate_pseudofunctor2)
from dblcat.maps.psnat import PsNat, validate_psnat
from dblcat.types import Id

__all__ = [
    "KINDS",
    "Document",
    "parse",
    "parse_id",
    "serialize",
    "normalize",
    "to_structure",
    "from_structure",
    "load",
    "dump",
    "format_id",
    "kind_of",
    "validate_structure",
]

_LOG = get_logger("cli.document")

KINDS = ("category", "two_category", "double_category", "pseudofunctor2",
         "cat_psfun", "psnat", "dbl_functor")

_KEYWORDS = ("kind", "name", "cap", "objects", "table", "part", "end")

TableKey = Tuple[Any, ...]


@dataclass
class Document:
    kind: str = ""
    name: str = ""
    cap: Optional[int] = None
    objects: Tuple[Id, ...] = ()
    tables: Dict[TableKey, Dict[Id, Id]] = field(default_factory=dict)
    parts: Dict[TableKey, "Document"] = field(default_factory=dict)
    positions: Dict[Tuple[TableKey, Id], Tuple[int, int]] = field(
        default_factory=dict, compare=False, repr=False)

    def table(self, *key) -> Dict[Id, Id]:
        return self.tables.get(tuple(key), {})

    def part(self, *key) -> "Document":
        try:
            return self.parts[tuple(key)]
        except KeyError:
            raise ParseError("Missing part {}".format(" ".join(format_id(k) for k in key)))


# ---------------------------------------------------------------------------
# Ids
# ---------------------------------------------------------------------------

_BARE = re.compile(r"[A-Za-z0-9_*][A-Za-z0-9_*'+\-]*")
_INT = re.compile(r"-?[0-9]+")
_TOKEN = re.compile(r"""\s*(?:(?P<string>"(?:[^"\\]|\\.)*")|(?P<int>-?[0-9]+(?![A-Za-z0-9_*'+\-]))|"""
                    r"""(?P<bare>[A-Za-z0-9_*][A-Za-z0-9_*'+\-]*)|(?P<punct>[(),.=]))""")
_CODE = re.compile(r'(?:[^"#]|"(?:[^"\\]|\\.)*")*')


def format_id(value: Id) -> str:
    if isinstance(value, bool):
        raise ValidationError("id", "Booleans are not ids: {!r}".format(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        if _BARE.fullmatch(value) and not _INT.fullmatch(value) and value not in _KEYWORDS:
            return value
        return json.dumps(value)
    if isinstance(value, tuple):
        return "({})".format(", ".join(format_id(v) for v in value))
    raise ValidationError("id", "Cannot serialize id {!r}".format(value))


def _strip_comment(raw: str) -> str:
    """Drop a ``#`` comment that is not inside a quoted string."""
    end = _CODE.match(raw).end()
    if end < len(raw) and raw[end] == "#":
        return raw[:end]
    return raw


def _tokenize(text: str, line: int) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError("Unexpected character {!r}".format(text[pos:].strip()[0]),
                             line, pos + 1)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start + 1))
        pos = match.end()
    return tokens


class _Ids(object):
    """Recursive-descent reader of ids over one line's tokens."""

    def __init__(self, tokens, line: int):
        self.tokens = tokens
        self.line = line
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def column(self) -> int:
        if self.at_end():
            return (self.tokens[-1][2] + len(self.tokens[-1][1])) if self.tokens else 1
        return self.tokens[self.pos][2]

    def peek(self) -> Optional[str]:
        return None if self.at_end() else self.tokens[self.pos][1]

    def expect(self, punct: str) -> None:
        if self.peek() != punct:
            raise ParseError("Expected {!r}".format(punct), self.line, self.column())
        self.pos += 1

    def read(self) -> Id:
        if self.at_end():
            raise ParseError("Expected an id", self.line, self.column())
        kind, text, col = self.tokens[self.pos]
        self.pos += 1
        if kind == "int":
            return int(text)
        if kind == "bare":
            return text
        if kind == "string":
            return json.loads(text)
        if text == "(":
            items = [self.read()]
            while self.peek() == ",":
                self.pos += 1
                items.append(self.read())
            self.expect(")")
            return tuple(items)
        raise ParseError("Unexpected {!r}".format(text), self.line, col)

    def read_all(self) -> List[Id]:
        items = []
        while not self.at_end():
            items.append(self.read())
        return items


@typechecked
def parse_id(text: str) -> Id:
    """Read a single id written as in a document, e.g. ``0``, ``f`` or ``(0, f)``.

    Raises:
        ParseError: ``text`` is not exactly one id.
    """
    ids = _Ids(_tokenize(text, 1), 1)
    value = ids.read()
    if not ids.at_end():
        raise ParseError("Trailing input after id", 1, ids.column())
    return value


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------

@typechecked
def parse(text: str) -> Document:
    """Parse document text.

    Raises:
        ParseError: malformed text, with 1-based line and column.
    """
    stack = [Document()]
    current_table: Optional[TableKey] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw)
        if not content.strip():
            continue
        indent = len(content) - len(content.lstrip())
        body = content.strip()
        keyword, _, rest = body.partition(" ")
        doc = stack[-1]
        offset = indent + len(keyword) + 2
        if keyword in _KEYWORDS:
            current_table = None
            ids = _Ids(_tokenize(rest, number), number)
            if keyword == "kind":
                if rest.strip() not in KINDS:
                    raise ParseError("Unknown kind {!r}".format(rest.strip()), number, offset)
                doc.kind = rest.strip()
            elif keyword == "name":
                doc.name = str(ids.read()) if rest.strip() else ""
            elif keyword == "cap":
                value = ids.read()
                if not isinstance(value, int) or value <= 0:
                    raise ParseError("cap must be a positive integer", number, offset)
                doc.cap = value
            elif keyword == "objects":
                doc.objects = tuple(ids.read_all())
            elif keyword == "table":
                key = tuple(ids.read_all())
                if not key:
                    raise ParseError("table needs a name", number, offset)
                doc.tables.setdefault(key, {})
                doc.positions[(key, None)] = (number, indent + 1)
                current_table = key
            elif keyword == "part":
                key = tuple(ids.read_all())
                if not key:
                    raise ParseError("part needs a role", number, offset)
                child = Document()
                doc.parts[key] = child
                stack.append(child)
            elif keyword == "end":
                if len(stack) == 1:
                    raise ParseError("'end' without 'part'", number, indent + 1)
                stack.pop()
            continue
        if current_table is None:
            raise ParseError("Entry outside a table", number, indent + 1)
        tokens = _tokenize(body, number)
        tokens = [(k, t, c + indent) for k, t, c in tokens]
        ids = _Ids(tokens, number)
        lhs = ids.read()
        if ids.peek() == ".":
            ids.pos += 1
            lhs = (lhs, ids.read())
        ids.expect("=")
        rhs = ids.read()
        if not ids.at_end():
            raise ParseError("Trailing input", number, ids.column())
        table = doc.tables[current_table]
        if lhs in table:
            raise ParseError("Duplicate entry {}".format(format_id(lhs)), number, indent + 1)
        table[lhs] = rhs
        doc.positions[(current_table, lhs)] = (number, indent + 1)
    if len(stack) != 1:
        raise ParseError("Unterminated part", len(text.splitlines()), 1)
    if not stack[0].kind:
        raise ParseError("Missing 'kind'", 1, 1)
    return stack[0]


def _is_pair_table(key: TableKey) -> bool:
    return key[0] in _PAIR_TABLES


def _entries(doc: Document, key: TableKey):
    return sorted(doc.tables[key].items(), key=lambda kv: id_key(kv[0]))


def _emit(doc: Document, out: List[str], indent: str) -> None:
    out.append("{}kind {}".format(indent, doc.kind))
    if doc.name:
        out.append("{}name {}".format(indent, format_id(doc.name)))
    if doc.cap is not None:
        out.append("{}cap {}".format(indent, doc.cap))
    if doc.objects:
        out.append("{}objects {}".format(
            indent, " ".join(format_id(o) for o in ordered(doc.objects))))
    for key in sorted(doc.tables, key=id_key):
        out.append("{}table {}".format(indent, " ".join(format_id(k) for k in key)))
        for lhs, rhs in _entries(doc, key):
            if _is_pair_table(key):
                left = "{} . {}".format(format_id(lhs[0]), format_id(lhs[1]))
            else:
                left = format_id(lhs)
            out.append("{}  {} = {}".format(indent, left, format_id(rhs)))
    for key in sorted(doc.parts, key=id_key):
        out.append("{}part {}".format(indent, " ".join(format_id(k) for k in key)))
        _emit(doc.parts[key], out, indent + "  ")
        out.append("{}end".format(indent))


@typechecked
def serialize(doc: Document) -> str:
    """Canonical text: tables and entries in id order, two-space nesting."""
    out: List[str] = []
    _emit(doc, out, "")
    return "\n".join(out) + "\n"


@typechecked
def normalize(text: str) -> str:
    return serialize(parse(text))


# ---------------------------------------------------------------------------
# Structures
# ---------------------------------------------------------------------------

# table -> (key sort, value sort); pair tables take composable pairs as keys
_SCHEMAS = {
    "category": {
        "src": ("mor", "obj"), "tgt": ("mor", "obj"),
        "identity": ("obj", "mor"), "comp": ("mor", "mor"),
    },
    "two_category": {
        "src": ("mor", "obj"), "tgt": ("mor", "obj"),
        "identity": ("obj", "mor"), "comp": ("mor", "mor"),
        "msrc": ("cell", "mor"), "mtgt": ("cell", "mor"),
        "id2": ("mor", "cell"), "vcomp": ("cell", "cell"), "hcomp": ("cell", "cell"),
    },
    "double_category": {
        "hsrc": ("hmor", "obj"), "htgt": ("hmor", "obj"),
        "hid": ("obj", "hmor"), "hcomp": ("hmor", "hmor"),
        "vsrc": ("vmor", "obj"), "vtgt": ("vmor", "obj"),
        "vid": ("obj", "vmor"), "vcomp": ("vmor", "vmor"),
        "top": ("sq", "hmor"), "bottom": ("sq", "hmor"),
        "left": ("sq", "vmor"), "right": ("sq", "vmor"),
        "hcomp_sq": ("sq", "sq"), "vcomp_sq": ("sq", "sq"),
        "hid_sq": ("vmor", "sq"), "vid_sq": ("hmor", "sq"),
    },
}

_PAIR_TABLES = ("comp", "vcomp", "hcomp", "hcomp_sq", "vcomp_sq", "compositors")

# the tables whose keys declare a sort
_DECLARING = {
    "category": {"mor": "src"},
    "two_category": {"mor": "src", "cell": "msrc"},
    "double_category": {"hmor": "hsrc", "vmor": "vsrc", "sq": "top"},
}


def _fail_at(doc: Document, key: TableKey, lhs: Id, message: str) -> ParseError:
    line, column = doc.positions.get((key, lhs), (0, 0))
    return ParseError(message, line, column)


def _check_references(doc: Document) -> None:
    """Every id a table mentions is declared."""
    schema = _SCHEMAS[doc.kind]
    sorts = {"obj": set(doc.objects)}
    for sort, table in _DECLARING[doc.kind].items():
        sorts[sort] = set(doc.table(table))
    for key in doc.tables:
        if key[0] not in schema:
            raise _fail_at(doc, key, None, "Unknown table {!r} for {}".format(key[0], doc.kind))
        key_sort, value_sort = schema[key[0]]
        for lhs, rhs in doc.tables[key].items():
            if _is_pair_table(key) and not (isinstance(lhs, tuple) and len(lhs) == 2):
                raise _fail_at(doc, key, lhs, "Expected a composable pair 'g . f'")
            keys = lhs if _is_pair_table(key) else (lhs,)
            for k in keys:
                if k not in sorts[key_sort]:
                    raise _fail_at(doc, key, lhs, "Dangling {} id {}".format(
                        key_sort, format_id(k)))
            if rhs not in sorts[value_sort]:
                raise _fail_at(doc, key, lhs, "Dangling {} id {}".format(
                    value_sort, format_id(rhs)))


def _structure_tables(doc: Document) -> Dict[str, Dict]:
    _check_references(doc)
    return {name: dict(doc.table(name)) for name in _SCHEMAS[doc.kind]}


def _mapping_entries(doc: Document, key: TableKey, domain, codomain, what: str) -> Dict:
    table = dict(doc.table(*key))
    for lhs, rhs in table.items():
        if lhs not in domain:
            raise _fail_at(doc, key, lhs, "Dangling {} id {}".format(what, format_id(lhs)))
        if rhs not in codomain:
            raise _fail_at(doc, key, lhs, "Dangling {} image {}".format(what, format_id(rhs)))
    return table


def _build_category(doc: Document) -> FinCat:
    t = _structure_tables(doc)
    return FinCat(doc.objects, t["src"], t["tgt"], t["identity"], t["comp"], name=doc.name)


def _build_2cat(doc: Document) -> Fin2Cat:
    t = _structure_tables(doc)
    return Fin2Cat(doc.objects, t["src"], t["tgt"], t["identity"], t["comp"],
                   t["msrc"], t["mtgt"], t["id2"], t["vcomp"], t["hcomp"], name=doc.name)


def _build_dbl(doc: Document) -> FinDblCat:
    t = _structure_tables(doc)
    return FinDblCat(doc.objects, name=doc.name, **t)


def _functor(doc: Document, prefix: TableKey, source: FinCat, target: FinCat) -> Functor:
    return Functor(
        source, target,
        _mapping_entries(doc, prefix + ("objects",), source.objects, target.objects, "object"),
        _mapping_entries(doc, prefix + ("morphisms",), source.morphisms, target.morphisms,
                         "morphism"),
    )


def _components(doc: Document, key: TableKey, source: Functor, target: Functor) -> NatTrans:
    return NatTrans(source, target, _mapping_entries(
        doc, key, source.source.objects, target.target.morphisms, "component"))


def _build_pseudofunctor2(doc: Document) -> PseudoFunctor2:
    source, target = _build_2cat(doc.part("source")), _build_2cat(doc.part("target"))
    return PseudoFunctor2(
        source, target,
        _mapping_entries(doc, ("on_objects",), source.objects, target.objects, "object"),
        _mapping_entries(doc, ("on_morphisms",), source.morphisms, target.morphisms, "morphism"),
        _mapping_entries(doc, ("on_cells",), source.twocells, target.twocells, "2-cell"),
        _pair_entries(doc, ("compositors",), source.morphisms, target.twocells),
        name=doc.name,
    )


def _pair_entries(doc: Document, key: TableKey, domain, codomain) -> Dict:
    table = dict(doc.table(*key))
    allowed = set(domain)
    for lhs, rhs in table.items():
        if not isinstance(lhs, tuple) or len(lhs) != 2 or not set(lhs) <= allowed:
            raise _fail_at(doc, key, lhs, "Dangling pair {}".format(format_id(lhs)))
        if rhs not in codomain:
            raise _fail_at(doc, key, lhs, "Dangling image {}".format(format_id(rhs)))
    return table


def _build_dbl_functor(doc: Document) -> PsDblFunctor:
    source, target = _build_dbl(doc.part("source")), _build_dbl(doc.part("target"))
    return PsDblFunctor(
        source, target,
        _mapping_entries(doc, ("on_objects",), source.objects, target.objects, "object"),
        _mapping_entries(doc, ("on_hmor",), source.hmor, target.hmor, "horizontal"),
        _mapping_entries(doc, ("on_vmor",), source.vmor, target.vmor, "vertical"),
        _mapping_entries(doc, ("on_squares",), source.squares, target.squares, "square"),
        _pair_entries(doc, ("compositors",), source.hmor, target.squares),
        name=doc.name,
    )


def _build_cat_psfun(doc: Document) -> CatPsFun:
    base = _build_2cat(doc.part("base"))
    fibres = {c: _build_category(doc.part("fibre", c)) for c in base.objects}
    functors = {m: _functor(doc, ("functor", m), fibres[base.tgt[m]], fibres[base.src[m]])
                for m in base.morphisms}
    nats = {g: _components(doc, ("nat", g), functors[base.msrc[g]], functors[base.mtgt[g]])
            for g in base.twocells}
    compositors = {}
    for (g, f), gf in base.comp.items():
        compositors[(g, f)] = _components(
            doc, ("phi", g, f), compose_functors(functors[f], functors[g]), functors[gf])
    return CatPsFun(base, fibres, functors, nats, compositors, name=doc.name)


def _build_psnat(doc: Document) -> PsNat:
    source = _build_cat_psfun(doc.part("source"))
    target = _build_cat_psfun(doc.part("target"))
    base = source.base
    components = {c: _functor(doc, ("component", c), source.fibre(c), target.fibre(c))
                  for c in base.objects}
    cells = {}
    for m in base.morphisms:
        a, b = base.src[m], base.tgt[m]
        cells[m] = _components(
            doc, ("cell", m),
            compose_functors(target.functor(m), components[b]),
            compose_functors(components[a], source.functor(m)))
    return PsNat(source, target, components, cells, name=doc.name)


_BUILDERS = {
    "category": (_build_category, validate_fin_cat),
    "two_category": (_build_2cat, validate_fin_2cat),
    "double_category": (_build_dbl, validate_fin_dblcat),
    "pseudofunctor2": (_build_pseudofunctor2, validate_pseudofunctor2),
    "cat_psfun": (_build_cat_psfun, validate_cat_psfun),
    "psnat": (_build_psnat, validate_psnat),
    "dbl_functor": (_build_dbl_functor, validate_ps_dbl_functor),
}


@typechecked
def to_structure(doc: Document, validate: bool = True):
    """Build the structure a document describes.

    Raises:
        ParseError: a table mentions an undeclared id.
        ValidationError: the structure violates an axiom; ``axiom`` names it.
    """
    build, validator = _BUILDERS[doc.kind]
    try:
        structure = build(doc)
    except ParseError:
        raise
    except DblCatError as err:
        raise ValidationError("tables", str(err)) from err
    if validate:
        report = validator(structure)
        if not report.ok:
            raise ValidationError(report.violations[0].axiom, str(report))
    _LOG.debug("built %s %s", doc.kind, doc.name)
    return structure


# ---------------------------------------------------------------------------
# Back to documents
# ---------------------------------------------------------------------------

def _doc_of_category(cat: FinCat) -> Document:
    return Document("category", cat.name, None, cat.objects, {
        ("src",): dict(cat.src), ("tgt",): dict(cat.tgt),
        ("identity",): dict(cat.identity), ("comp",): dict(cat.comp)})


def _doc_of_2cat(cat: Fin2Cat) -> Document:
    return Document("two_category", cat.name, None, cat.objects, {
        (name,): dict(getattr(cat, name)) for name in _SCHEMAS["two_category"]})


def _doc_of_dbl(dbl: FinDblCat) -> Document:
    return Document("double_category", dbl.name, None, dbl.objects, {
        (name,): dict(getattr(dbl, name)) for name in _SCHEMAS["double_category"]})


def _functor_tables(prefix: TableKey, u: Functor) -> Dict[TableKey, Dict]:
    return {prefix + ("objects",): dict(u.on_objects),
            prefix + ("morphisms",): dict(u.on_morphisms)}


def _doc_of_cat_psfun(f: CatPsFun) -> Document:
    tables: Dict[TableKey, Dict] = {}
    for m in f.base.morphisms:
        tables.update(_functor_tables(("functor", m), f.functor(m)))
    for g in f.base.twocells:
        tables[("nat", g)] = dict(f.nat(g).components)
    for (g, m) in f.base.comp:
        tables[("phi", g, m)] = dict(f.phi(g, m).components)
    parts = {("base",): _doc_of_2cat(f.base)}
    for c in f.base.objects:
        parts[("fibre", c)] = _doc_of_category(f.fibre(c))
    return Document("cat_psfun", f.name, None, (), tables, parts)


def _doc_of_psnat(alpha: PsNat) -> Document:
    tables: Dict[TableKey, Dict] = {}
    base = alpha.source.base
    for c in base.objects:
        tables.update(_functor_tables(("component", c), alpha.components[c]))
    for m in base.morphisms:
        tables[("cell", m)] = dict(alpha.cells[m].components)
    return Document("psnat", alpha.name, None, (), tables, {
        ("source",): _doc_of_cat_psfun(alpha.source),
        ("target",): _doc_of_cat_psfun(alpha.target)})


def _doc_of_pseudofunctor2(f: PseudoFunctor2) -> Document:
    return Document("pseudofunctor2", f.name, None, (), {
        ("on_objects",): dict(f.on_objects), ("on_morphisms",): dict(f.on_morphisms),
        ("on_cells",): dict(f.on_cells), ("compositors",): dict(f.compositors)}, {
        ("source",): _doc_of_2cat(f.source), ("target",): _doc_of_2cat(f.target)})


def _doc_of_dbl_functor(f: PsDblFunctor) -> Document:
    return Document("dbl_functor", f.name, None, (), {
        ("on_objects",): dict(f.on_objects), ("on_hmor",): dict(f.on_hmor),
        ("on_vmor",): dict(f.on_vmor), ("on_squares",): dict(f.on_squares),
        ("compositors",): dict(f.compositors)}, {
        ("source",): _doc_of_dbl(f.source), ("target",): _doc_of_dbl(f.target)})


@typechecked
def from_structure(structure) -> Document:
    """The document of a structure or map.

    Raises:
        ValidationError: ``structure`` is of no serializable kind.
    """
    for cls, convert in ((FinCat, _doc_of_category), (Fin2Cat, _doc_of_2cat),
                         (FinDblCat, _doc_of_dbl), (CatPsFun, _doc_of_cat_psfun),
                         (PsNat, _doc_of_psnat), (PseudoFunctor2, _doc_of_pseudofunctor2),
                         (PsDblFunctor, _doc_of_dbl_functor)):
        if isinstance(structure, cls):
            return convert(structure)
    raise ValidationError("kind", "Cannot serialize {}".format(type(structure).__name__))


@typechecked
def load(text: str, validate: bool = True):
    return to_structure(parse(text), validate)


@typechecked
def dump(structure) -> str:
    return serialize(from_structure(structure))


_CLASSES = ((FinCat, "category"), (Fin2Cat, "two_category"), (FinDblCat, "double_category"),
            (CatPsFun, "cat_psfun"), (PsNat, "psnat"), (PseudoFunctor2, "pseudofunctor2"),
            (PsDblFunctor, "dbl_functor"))


def kind_of(structure) -> str:
    for cls, kind in _CLASSES:
        if isinstance(structure, cls):
            return kind
    raise ValidationError("kind", "No document kind for {}".format(type(structure).__name__))


@typechecked
def validate_structure(structure) -> Report:
    """Run the validator of the structure's kind."""
    return _BUILDERS[kind_of(structure)][1](structure)
