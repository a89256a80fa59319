"""Line-oriented text format for fields, groups, hypervector spaces, soft sets and maps.

A document is a sequence of sections::

    [field Z2]
    elements = 2
    add:
    row 0: 0 1
    row 1: 1 0
    mul:
    row 0: 0 0
    row 1: 0 1

    [hvs V]
    field = Z2
    group = Z4
    hyperop:
    row 0: {0 2} {0} {0} {0}
    row 1: {0 2} {1 2 3} {0 2} {1 2 3}

    [bfss F]
    elements = 4
    param c: pos = 1/2 3/10 1/2 3/10 ; neg = -2/5 -1/5 -2/5 -1/5

    [map T]
    elements = 4
    codomain = 4
    phi = 0 3 2 1
    param c -> c

``#`` starts a comment. Degrees are ``p/q`` or decimal literals, both read
exactly. Element id 0 is the zero of every group and field; 1 is the unit
of every field.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .algebra import AbelianGroup, FiniteField, HyperVectorSpace, MalformedInput, members, to_mask
from .bipolar import BipolarFuzzySet, validate_bfs
from .soft import BipolarFuzzySoftSet
from .transforms import FuzzySoftFunction

KINDS = ("field", "group", "hvs", "bfss", "map")

_NAME = r"[A-Za-z0-9_.|\-]+"
_HEADER = re.compile(rf"\[\s*(\w+)\s+({_NAME})\s*\]$")
_KEYVAL = re.compile(rf"({_NAME})\s*=\s*(.*)$")
_ROW = re.compile(r"row\s+(\d+)\s*:(.*)$")
_TABLE = re.compile(r"(\w+)\s*:$")
_PARAM = re.compile(rf"param\s+({_NAME})\s*:\s*pos\s*=(.*?);\s*neg\s*=(.*)$")
_ARROW = re.compile(rf"param\s+({_NAME})\s*->\s*({_NAME})$")
_DEGREE = re.compile(r"-?(\d+(\.\d*)?|\.\d+)(/\d+)?$")


class ParseError(MalformedInput):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class HvsEntry:
    space: HyperVectorSpace
    field: str
    group: str


@dataclass
class Document:
    fields: dict[str, FiniteField] = field(default_factory=dict)
    groups: dict[str, AbelianGroup] = field(default_factory=dict)
    hvs: dict[str, HvsEntry] = field(default_factory=dict)
    bfss: dict[str, BipolarFuzzySoftSet] = field(default_factory=dict)
    maps: dict[str, FuzzySoftFunction] = field(default_factory=dict)

    def names(self) -> set[str]:
        return set(self.fields) | set(self.groups) | set(self.hvs) | set(self.bfss) | set(self.maps)

    def only(self, kind: str):
        """The single section of ``kind``; raises if there are zero or several."""
        table = self._table(kind)
        if len(table) != 1:
            raise MalformedInput(f"expected exactly one {kind} section, found {len(table)}")
        value = next(iter(table.values()))
        return value.space if kind == "hvs" else value

    def _table(self, kind: str) -> dict:
        return {
            "field": self.fields,
            "group": self.groups,
            "hvs": self.hvs,
            "bfss": self.bfss,
            "map": self.maps,
        }[kind]

    def add_hvs(self, name: str, space: HyperVectorSpace, field_name: Optional[str] = None,
                group_name: Optional[str] = None) -> None:
        field_name = field_name or f"{name}.K"
        group_name = group_name or f"{name}.G"
        self.fields[field_name] = space.field
        self.groups[group_name] = space.group
        self.hvs[name] = HvsEntry(space, field_name, group_name)


# -- parsing ----------------------------------------------------------------

@dataclass
class _Section:
    kind: str
    name: str
    line: int
    keys: dict[str, tuple[str, int]] = field(default_factory=dict)
    tables: dict[str, list[tuple[int, str, int]]] = field(default_factory=dict)
    params: list[tuple[str, str, str, int, int]] = field(default_factory=list)
    arrows: list[tuple[str, str, int]] = field(default_factory=list)


def _split_sections(text: str) -> list[_Section]:
    sections: list[_Section] = []
    current: Optional[_Section] = None
    table: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        m = _HEADER.match(line)
        if m:
            kind, name = m.groups()
            if kind not in KINDS:
                raise ParseError(f"unknown section kind {kind!r}", lineno, col)
            current = _Section(kind, name, lineno)
            sections.append(current)
            table = None
            continue
        if current is None:
            raise ParseError("content before the first section header", lineno, col)
        if m := _ROW.match(line):
            if table is None:
                raise ParseError("row outside a table", lineno, col)
            body_col = col + line.index(":") + 1
            current.tables[table].append((int(m.group(1)), m.group(2), lineno, body_col))
        elif m := _PARAM.match(line):
            pos_col = col + m.start(2)
            neg_col = col + m.start(3)
            current.params.append((m.group(1), m.group(2), m.group(3), lineno, (pos_col, neg_col)))
        elif m := _ARROW.match(line):
            current.arrows.append((m.group(1), m.group(2), lineno))
        elif m := _TABLE.match(line):
            table = m.group(1)
            if table in current.tables:
                raise ParseError(f"duplicate table {table!r}", lineno, col)
            current.tables[table] = []
        elif m := _KEYVAL.match(line):
            key = m.group(1)
            if key in current.keys:
                raise ParseError(f"duplicate key {key!r}", lineno, col)
            current.keys[key] = (m.group(2).strip(), lineno)
            table = None
        else:
            raise ParseError(f"cannot parse {line!r}", lineno, col)
    return sections


def _int(token: str, line: int, col: int) -> int:
    if not re.fullmatch(r"\d+", token):
        raise ParseError(f"expected an element id, got {token!r}", line, col)
    return int(token)


def _tokens(body: str, start_col: int):
    for m in re.finditer(r"\S+", body):
        yield m.group(0), start_col + m.start()


def _key(sec: _Section, key: str) -> tuple[str, int]:
    if key not in sec.keys:
        raise ParseError(f"[{sec.kind} {sec.name}] is missing '{key} ='", sec.line)
    return sec.keys[key]


def _elements(sec: _Section) -> int:
    value, line = _key(sec, "elements")
    n = _int(value, line, 1)
    if n < 1:
        raise ParseError("elements must be positive", line)
    return n


def _int_table(sec: _Section, name: str, n_rows: int, n_cols: int) -> list[list[int]]:
    if name not in sec.tables:
        raise ParseError(f"[{sec.kind} {sec.name}] is missing table '{name}:'", sec.line)
    rows = sec.tables[name]
    out: list[Optional[list[int]]] = [None] * n_rows
    for idx, body, line, col in rows:
        if not idx < n_rows:
            raise ParseError(f"row {idx} out of range 0..{n_rows - 1}", line)
        if out[idx] is not None:
            raise ParseError(f"duplicate row {idx}", line)
        values = [_int(tok, line, c) for tok, c in _tokens(body, col)]
        if len(values) != n_cols:
            raise ParseError(f"row {idx} has {len(values)} entries, expected {n_cols}", line, col)
        for (tok, c), v in zip(_tokens(body, col), values):
            if v >= n_cols:
                raise ParseError(f"entry {v} out of range 0..{n_cols - 1}", line, c)
        out[idx] = values
    for i, row in enumerate(out):
        if row is None:
            raise ParseError(f"table '{name}' is missing row {i}", sec.line)
    return out  # type: ignore[return-value]


def _set_table(sec: _Section, n_rows: int, n_cols: int) -> list[list[int]]:
    if "hyperop" not in sec.tables:
        raise ParseError(f"[hvs {sec.name}] is missing table 'hyperop:'", sec.line)
    out: list[Optional[list[int]]] = [None] * n_rows
    for idx, body, line, col in sec.tables["hyperop"]:
        if not idx < n_rows:
            raise ParseError(f"row {idx} out of range 0..{n_rows - 1}", line)
        if out[idx] is not None:
            raise ParseError(f"duplicate row {idx}", line)
        cells = []
        for m in re.finditer(r"\{([^{}]*)\}|(\S)", body):
            if m.group(2) is not None:
                raise ParseError("hyperop cells are braced lists like {0 2}", line, col + m.start())
            ids = [_int(tok, line, col + m.start(1) + off) for tok, off in _tokens(m.group(1), 0)]
            if not ids:
                raise ParseError("empty hyperop cell", line, col + m.start())
            for v in ids:
                if v >= n_cols:
                    raise ParseError(f"element {v} out of range 0..{n_cols - 1}", line, col + m.start())
            cells.append(to_mask(ids))
        if len(cells) != n_cols:
            raise ParseError(f"row {idx} has {len(cells)} cells, expected {n_cols}", line, col)
        out[idx] = cells
    for i, row in enumerate(out):
        if row is None:
            raise ParseError(f"hyperop is missing row {i}", sec.line)
    return out  # type: ignore[return-value]


def parse_degree(token: str, line: int = 0, col: int = 0) -> Fraction:
    if not _DEGREE.match(token):
        raise ParseError(f"bad degree literal {token!r}", line, col)
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad degree literal {token!r}", line, col) from exc


def _degrees(body: str, n: int, line: int, col: int, lo: Fraction, hi: Fraction, comp: str) -> tuple[Fraction, ...]:
    out = []
    for tok, c in _tokens(body, col):
        v = parse_degree(tok, line, c)
        if not lo <= v <= hi:
            raise ParseError(f"{comp} degree {tok} outside [{lo}, {hi}]", line, c)
        out.append(v)
    if len(out) != n:
        raise ParseError(f"{comp} has {len(out)} degrees, expected {n}", line, col)
    return tuple(out)


def parse(text: str) -> Document:
    """Parse a document; the first problem raises :class:`ParseError` with its location."""
    doc = Document()
    seen: dict[str, int] = {}
    for sec in _split_sections(text):
        if sec.name in seen:
            raise ParseError(f"section name {sec.name!r} already used on line {seen[sec.name]}", sec.line)
        seen[sec.name] = sec.line
        try:
            _build(doc, sec)
        except ParseError:
            raise
        except MalformedInput as exc:
            raise ParseError(str(exc), sec.line) from exc
    return doc


def _build(doc: Document, sec: _Section) -> None:
    if sec.kind == "field":
        n = _elements(sec)
        doc.fields[sec.name] = FiniteField.from_tables(_int_table(sec, "add", n, n), _int_table(sec, "mul", n, n))
    elif sec.kind == "group":
        n = _elements(sec)
        doc.groups[sec.name] = AbelianGroup.from_table(_int_table(sec, "add", n, n))
    elif sec.kind == "hvs":
        fname, fline = _key(sec, "field")
        gname, gline = _key(sec, "group")
        if fname not in doc.fields:
            raise ParseError(f"unknown field {fname!r} (define it above)", fline)
        if gname not in doc.groups:
            raise ParseError(f"unknown group {gname!r} (define it above)", gline)
        K, G = doc.fields[fname], doc.groups[gname]
        cells = _set_table(sec, K.size, G.size)
        space = HyperVectorSpace(K, G, tuple(tuple(r) for r in cells))
        doc.hvs[sec.name] = HvsEntry(space, fname, gname)
    elif sec.kind == "bfss":
        n = _elements(sec)
        sets = {}
        for name, pos_body, neg_body, line, (pcol, ncol) in sec.params:
            if name in sets:
                raise ParseError(f"duplicate parameter {name!r}", line)
            pos = _degrees(pos_body, n, line, pcol, Fraction(0), Fraction(1), "pos")
            neg = _degrees(neg_body, n, line, ncol, Fraction(-1), Fraction(0), "neg")
            sets[name] = BipolarFuzzySet(pos, neg)
        if sec.arrows:
            raise ParseError("'->' lines belong in map sections", sec.arrows[0][2])
        doc.bfss[sec.name] = BipolarFuzzySoftSet(n, sets)
    elif sec.kind == "map":
        n = _elements(sec)
        value, line = _key(sec, "codomain")
        m = _int(value, line, 1)
        body, line = _key(sec, "phi")
        phi = [_int(tok, line, c) for tok, c in _tokens(body, 1)]
        if len(phi) != n:
            raise ParseError(f"phi has {len(phi)} entries, expected {n}", line)
        if any(v >= m for v in phi):
            raise ParseError(f"phi leaves the codomain 0..{m - 1}", line)
        f: dict[str, str] = {}
        for src, dst, aline in sec.arrows:
            if src in f:
                raise ParseError(f"parameter {src!r} mapped twice", aline)
            f[src] = dst
        doc.maps[sec.name] = FuzzySoftFunction(phi, f, m)


# -- printing ---------------------------------------------------------------

def _fmt_table(label: str, table) -> list[str]:
    return [f"{label}:"] + [f"row {i}: " + " ".join(str(v) for v in row) for i, row in enumerate(table)]


def _fmt_cell(mask: int) -> str:
    return "{" + " ".join(str(v) for v in members(mask)) + "}"


def format_degrees(values) -> str:
    return " ".join(str(v) for v in values)


def format_bfss(name: str, F: BipolarFuzzySoftSet) -> list[str]:
    lines = [f"[bfss {name}]", f"elements = {F.size}"]
    for e, b in F.sets.items():
        lines.append(f"param {e}: pos = {format_degrees(b.pos)} ; neg = {format_degrees(b.neg)}")
    return lines


def print_document(doc: Document) -> str:
    """Canonical text: kinds in a fixed order, sections and parameters sorted by name."""
    blocks: list[list[str]] = []
    for name, K in sorted(doc.fields.items()):
        blocks.append([f"[field {name}]", f"elements = {K.size}"] + _fmt_table("add", K.add) + _fmt_table("mul", K.mul))
    for name, G in sorted(doc.groups.items()):
        blocks.append([f"[group {name}]", f"elements = {G.size}"] + _fmt_table("add", G.add))
    for name, entry in sorted(doc.hvs.items()):
        rows = [f"row {a}: " + " ".join(_fmt_cell(c) for c in row) for a, row in enumerate(entry.space.hyperop)]
        blocks.append([f"[hvs {name}]", f"field = {entry.field}", f"group = {entry.group}", "hyperop:"] + rows)
    for name, F in sorted(doc.bfss.items()):
        blocks.append(format_bfss(name, F))
    for name, T in sorted(doc.maps.items()):
        lines = [f"[map {name}]", f"elements = {T.domain_size}", f"codomain = {T.codomain_size}",
                 "phi = " + " ".join(str(v) for v in T.phi)]
        lines += [f"param {e} -> {u}" for e, u in T.f.items()]
        blocks.append(lines)
    return "\n\n".join("\n".join(b) for b in blocks) + "\n"


def load(path: Union[str, Path]) -> Document:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump_json(report) -> str:
    """Stable JSON: sorted keys, fractions as ``p/q`` strings."""

    def default(o):
        if isinstance(o, Fraction):
            return str(o)
        if hasattr(o, "as_dict"):
            return o.as_dict()
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        raise TypeError(f"cannot serialise {type(o).__name__}")

    return json.dumps(report, default=default, sort_keys=True, indent=2) + "\n"


def check_degrees(F: BipolarFuzzySoftSet) -> list:
    return [(e,) + w for e, b in F.sets.items() for w in validate_bfs(b).failures]
