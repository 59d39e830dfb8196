"""Workspace documents: named sets, maps and bases over one universe, as JSON.

Document shape::

    {
      "universe": ["a", "b", "c"],
      "sets":  {"A": {"a": ["0.5", "0.3", "0.2"], ...}, ...},
      "maps":  {"f": {"target": ["x", "y"], "assign": {"a": "x", ...}}},
      "bases": {"F": ["A", "B"]}
    }

Grades are decimal or fraction strings (JSON numbers are also read exactly).
A set lives over the workspace universe, or over the target universe of a
map when its labels are exactly that target's labels. Base members name sets.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .core import Family, SVNSet, Universe, to_grade
from .errors import DuplicateName, GradeOutOfRange, ParseError, UnknownElement, UnknownName
from .maps import UniverseMap
from .tables import set_rows

__all__ = ["Workspace", "load_workspace", "loads_workspace", "serialize", "dump_workspace"]

TOP_KEYS = ("universe", "sets", "maps", "bases")


@dataclass
class Workspace:
    universe: Universe
    sets: dict[str, SVNSet] = field(default_factory=dict)
    maps: dict[str, UniverseMap] = field(default_factory=dict)
    base_refs: dict[str, tuple[str, ...]] = field(default_factory=dict)

    @property
    def bases(self) -> dict[str, Family]:
        return {name: self.base(name) for name in self.base_refs}

    def base(self, name: str) -> Family:
        try:
            refs = self.base_refs[name]
        except KeyError:
            raise UnknownName(f"no base named {name!r}") from None
        return Family(self.set(r) for r in refs)

    def set(self, name: str) -> SVNSet:
        try:
            return self.sets[name]
        except KeyError:
            raise UnknownName(f"no set named {name!r}") from None

    def map(self, name: str) -> UniverseMap:
        try:
            return self.maps[name]
        except KeyError:
            raise UnknownName(f"no map named {name!r}") from None

    def universes(self) -> list[Universe]:
        """The workspace universe followed by each distinct map target."""
        out = [self.universe]
        for f in self.maps.values():
            if f.target not in out:
                out.append(f.target)
        return out


class _Locator:
    """Maps a JSON string token back to a 1-based (line, column) in the source text."""

    def __init__(self, text: str):
        self.text = text

    def find(self, *tokens: str):
        pos = 0
        for tok in tokens:
            m = re.compile(re.escape(json.dumps(tok, ensure_ascii=False))).search(self.text, pos)
            if m is None:
                m = re.compile(re.escape(json.dumps(tok))).search(self.text, pos)
            if m is None:
                return None, None
            pos = m.start()
        line = self.text.count("\n", 0, pos) + 1
        column = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, column

    def where(self, *tokens: str) -> str:
        line, column = self.find(*tokens)
        return "" if line is None else f" (line {line}, column {column})"


def _pairs_hook(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise DuplicateName(f"name {key!r} defined twice")
        seen[key] = value
    return seen


def _exact_float(text: str) -> Fraction:
    return Fraction(text)


def loads_workspace(text: str) -> Workspace:
    """Parse a workspace document held in a string."""
    try:
        doc = json.loads(text, object_pairs_hook=_pairs_hook, parse_float=_exact_float)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    loc = _Locator(text)
    if not isinstance(doc, dict):
        raise ParseError("workspace document must be a JSON object", 1, 1)
    unknown = [k for k in doc if k not in TOP_KEYS]
    if unknown:
        line, col = loc.find(unknown[0])
        raise ParseError(f"unknown top-level key {unknown[0]!r}", line, col)
    if "universe" not in doc:
        raise ParseError("missing 'universe'", 1, 1)
    labels = doc["universe"]
    if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
        line, col = loc.find("universe")
        raise ParseError("'universe' must be a nonempty list of labels", line, col)
    if len(set(labels)) != len(labels):
        dup = next(x for x in labels if labels.count(x) > 1)
        raise DuplicateName(f"label {dup!r} appears twice in the universe{loc.where('universe', dup)}")
    universe = Universe(labels)
    ws = Workspace(universe)

    for name, spec in _section(doc, "maps", loc).items():
        ws.maps[name] = _parse_map(name, spec, universe, loc)
    for name, rows in _section(doc, "sets", loc).items():
        ws.sets[name] = _parse_set(name, rows, ws, loc)
    for name, refs in _section(doc, "bases", loc).items():
        if not isinstance(refs, list) or not refs or not all(isinstance(r, str) for r in refs):
            line, col = loc.find("bases", name)
            raise ParseError(f"base {name!r} must be a nonempty list of set names", line, col)
        for r in refs:
            if r not in ws.sets:
                raise UnknownName(f"base {name!r} names unknown set {r!r}{loc.where('bases', name, r)}")
        ws.base_refs[name] = tuple(refs)
        ws.base(name)
    return ws


def _section(doc, key, loc) -> dict:
    value = doc.get(key, {})
    if not isinstance(value, dict):
        line, col = loc.find(key)
        raise ParseError(f"'{key}' must be an object", line, col)
    return value


def _parse_map(name, spec, universe, loc) -> UniverseMap:
    if not isinstance(spec, dict) or set(spec) != {"target", "assign"}:
        line, col = loc.find("maps", name)
        raise ParseError(f"map {name!r} needs exactly 'target' and 'assign'", line, col)
    target = spec["target"]
    if not isinstance(target, list) or not target or len(set(target)) != len(target):
        line, col = loc.find("maps", name, "target")
        raise ParseError(f"map {name!r} needs a list of distinct target labels", line, col)
    assign = spec["assign"]
    if not isinstance(assign, dict):
        line, col = loc.find("maps", name, "assign")
        raise ParseError(f"map {name!r}: 'assign' must be an object", line, col)
    for u, v in assign.items():
        if u not in universe:
            raise UnknownElement(f"map {name!r} assigns unknown element {u!r}{loc.where('maps', name, u)}")
        if v not in target:
            raise UnknownElement(f"map {name!r} sends {u!r} to {v!r}, not a target label{loc.where('maps', name, u)}")
    missing = [u for u in universe if u not in assign]
    if missing:
        line, col = loc.find("maps", name, "assign")
        raise ParseError(f"map {name!r} has no image for {missing}", line, col)
    return UniverseMap(universe, Universe(target), assign)


def _parse_set(name, rows, ws, loc) -> SVNSet:
    if not isinstance(rows, dict) or not rows:
        line, col = loc.find("sets", name)
        raise ParseError(f"set {name!r} must map element labels to grade triples", line, col)
    labels = set(rows)
    universe = next((u for u in ws.universes() if set(u) == labels), None)
    if universe is None:
        known = set().union(*(set(u) for u in ws.universes()))
        stray = sorted(labels - known)
        if stray:
            raise UnknownElement(f"set {name!r} uses unknown element {stray[0]!r}{loc.where('sets', name, stray[0])}")
        missing = sorted(set(ws.universe) - labels)
        line, col = loc.find("sets", name)
        raise ParseError(f"set {name!r} does not cover a universe; missing {missing}", line, col)
    grades = {}
    for label in universe:
        triple = rows[label]
        if not isinstance(triple, list) or len(triple) != 3:
            line, col = loc.find("sets", name, label)
            raise ParseError(f"set {name!r}, element {label!r}: expected [mu, sigma, nu]", line, col)
        parsed = []
        for g in triple:
            try:
                parsed.append(to_grade(g))
            except GradeOutOfRange as exc:
                raise GradeOutOfRange(f"set {name!r}, element {label!r}: {exc}{loc.where('sets', name, label)}") from None
            except TypeError:
                line, col = loc.find("sets", name, label)
                raise ParseError(f"set {name!r}, element {label!r}: grade {g!r} is not a number", line, col) from None
        grades[label] = tuple(parsed)
    return SVNSet(universe, grades)


def load_workspace(path) -> Workspace:
    text = Path(path).read_text(encoding="utf-8")
    return loads_workspace(text)


def serialize(ws: Workspace) -> str:
    """The canonical JSON document for a workspace; grades as exact strings."""
    doc = {
        "universe": list(ws.universe),
        "sets": {name: set_rows(a) for name, a in ws.sets.items()},
    }
    if ws.maps:
        doc["maps"] = {name: {"target": list(f.target), "assign": dict(f.assignment)} for name, f in ws.maps.items()}
    if ws.base_refs:
        doc["bases"] = {name: list(refs) for name, refs in ws.base_refs.items()}
    return _pretty(doc) + "\n"


def _pretty(obj, depth: int = 0) -> str:
    """JSON with one row per line: lists of scalars stay inline."""
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_pretty(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        return "[\n" + ",\n".join(inner + _pretty(x, depth + 1) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dump_workspace(ws: Workspace, path) -> None:
    Path(path).write_text(serialize(ws), encoding="utf-8")
