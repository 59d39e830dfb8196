"""Reference tables used by the tests, the verifier and the shipped workspaces.

Each function returns freshly built objects with grades exactly as tabulated.
Where a table was derived by hand from other tables (the ``*_stated`` entries)
it is reproduced as published, not recomputed.
"""

from __future__ import annotations

from .core import SVNSet, Universe, absolute
from .maps import UniverseMap

ABC = Universe(["a", "b", "c"])


def _set(universe, rows):
    return SVNSet(universe, {u: tuple(r.split()) for u, r in rows.items()})


def incomparable_pair():
    """Two sets over {a, b, c}, each with a row exceeding the other."""
    a = _set(ABC, {"a": "0.5 0.3 0.2", "b": "0.6 0.2 0.3", "c": "0.4 0.2 0.7"})
    b = _set(ABC, {"a": "0.2 0.2 0.2", "b": "0.4 0.1 0.6", "c": "0.8 0.3 0.1"})
    return a, b


def complement_example():
    """A set whose intersection/union with its complement is not empty/absolute."""
    ab = Universe(["a", "b"])
    a = _set(ab, {"a": "0.2 0.6 0.8", "b": "1 0.5 0"})
    meet_stated = _set(ab, {"a": "0.2 0.4 0.8", "b": "0 0.5 1"})
    join_stated = _set(ab, {"a": "0.8 0.6 0.2", "b": "1 0.5 0"})
    return a, meet_stated, join_stated


def image_example():
    """A map {a, b, c} -> {alpha, beta, gamma, delta}, a source set, a target set, and their tables."""
    target = Universe(["alpha", "beta", "gamma", "delta"])
    f = UniverseMap(ABC, target, {"a": "beta", "b": "alpha", "c": "beta"})
    a, _ = incomparable_pair()
    b = _set(target, {"alpha": "0.1 0.7 0.9", "beta": "0.5 0.3 0.1", "gamma": "0.8 0.4 0.2", "delta": "0.4 0.6 0.8"})
    image_stated = _set(target, {"alpha": "0.6 0.2 0.3", "beta": "0.4 0.2 0.7", "gamma": "0 0 1", "delta": "0 0 1"})
    preimage_stated = _set(ABC, {"a": "0.5 0.3 0.1", "b": "0.1 0.7 0.9", "c": "0.5 0.3 0.1"})
    return f, a, b, image_stated, preimage_stated


def filter_base_example():
    """Sets F, G, H plus the absolute set, and the tabulated W offered as F ⊓ G."""
    f = _set(ABC, {"a": "0.4 0.3 0.2", "b": "0.8 0.2 0.1", "c": "0.6 0.5 0.4"})
    g = _set(ABC, {"a": "0.7 0.1 0.3", "b": "0.9 0.2 0.2", "c": "0.2 0.6 0.5"})
    h = _set(ABC, {"a": "0 0.4 0.8", "b": "0.5 0.3 0.6", "c": "0.1 0.8 0.5"})
    w_stated = _set(ABC, {"a": "0.4 0.3 0.3", "b": "0.8 0.2 0.2", "c": "0.2 0.6 0.5"})
    return f, g, h, absolute(ABC), w_stated


def principal_example():
    """Generator A, two of its supersets B and C, and a probe set Z."""
    a = _set(ABC, {"a": "0.8 0.4 0", "b": "0 0.1 0.9", "c": "0 0 1"})
    b = _set(ABC, {"a": "0.9 0.5 0", "b": "0.8 0.6 0.1", "c": "0 0.2 0.3"})
    c = _set(ABC, {"a": "1 0.5 0", "b": "0 0.2 0.8", "c": "0.7 0.6 0.5"})
    z = _set(ABC, {"a": "0 0 1", "b": "0.7 0.3 0.5", "c": "0.8 0.4 0.6"})
    return a, b, c, z
