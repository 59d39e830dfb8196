"""JSON encoding of claim instances, so witnesses can be stored and replayed."""

from __future__ import annotations

from ..core import Family, SVNSet, Universe
from ..lattice import ExplicitFamily, GradeLattice, explicit_family
from ..maps import UniverseMap
from ..tables import set_rows


def encode(value):
    if isinstance(value, SVNSet):
        return {"type": "set", "universe": list(value.universe), "rows": set_rows(value)}
    if isinstance(value, Family):
        return {"type": "family", "members": [encode(m) for m in value]}
    if isinstance(value, UniverseMap):
        return {"type": "map", "source": list(value.source), "target": list(value.target),
                "assign": dict(value.assignment)}
    if isinstance(value, ExplicitFamily):
        return {"type": "explicit", "k": value.lattice.k, "universe": list(value.universe),
                "members": [set_rows(m) for m in value]}
    raise TypeError(f"cannot encode {type(value).__name__}")


def decode(obj):
    kind = obj["type"]
    if kind == "set":
        return SVNSet(Universe(obj["universe"]), obj["rows"])
    if kind == "family":
        return Family(decode(m) for m in obj["members"])
    if kind == "map":
        return UniverseMap(Universe(obj["source"]), Universe(obj["target"]), obj["assign"])
    if kind == "explicit":
        universe = Universe(obj["universe"])
        members = [SVNSet(universe, rows) for rows in obj["members"]]
        return explicit_family(members, universe, GradeLattice(obj["k"]))
    raise ValueError(f"unknown witness value type {kind!r}")


def encode_instance(instance: dict) -> dict:
    return {name: encode(v) for name, v in instance.items()}


def decode_instance(obj: dict) -> dict:
    return {name: decode(v) for name, v in obj.items()}
