"""Images and inverse images of SVNSets under maps between finite universes."""

from __future__ import annotations

import enum
from typing import Mapping

from .core import SVNSet, Universe
from .errors import UniverseMismatch

__all__ = ["ImageConvention", "UniverseMap", "image", "inverse_image"]


class ImageConvention(enum.Enum):
    """How grades are aggregated over a fiber when taking an image.

    ``PAPER_INF`` takes (inf mu, inf sigma, sup nu) over each fiber;
    ``STANDARD_SUP`` takes the usual extension-principle (sup mu, sup sigma,
    inf nu). Empty fibers map to (0, 0, 1) under both.
    """

    PAPER_INF = "paper-inf"
    STANDARD_SUP = "standard-sup"

    @classmethod
    def parse(cls, value) -> "ImageConvention":
        if isinstance(value, cls):
            return value
        aliases = {"inf": cls.PAPER_INF, "sup": cls.STANDARD_SUP}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise ValueError(f"unknown image convention {value!r}") from None


class UniverseMap:
    """A total function from ``source`` labels to ``target`` labels."""

    __slots__ = ("source", "target", "assignment", "fibers", "_target_of", "_fiber_idx")

    def __init__(self, source: Universe, target: Universe, assignment: Mapping[str, str]):
        if not isinstance(source, Universe):
            source = Universe(source)
        if not isinstance(target, Universe):
            target = Universe(target)
        missing = [u for u in source if u not in assignment]
        if missing:
            raise UniverseMismatch(f"map is not total: no image for {missing}")
        extra = [u for u in assignment if u not in source]
        if extra:
            raise UniverseMismatch(f"map assigns labels outside the source: {extra}")
        bad = [v for v in assignment.values() if v not in target]
        if bad:
            raise UniverseMismatch(f"map sends labels outside the target: {bad}")
        self.source = source
        self.target = target
        self.assignment = {u: assignment[u] for u in source}
        self.fibers = {v: tuple(u for u in source if self.assignment[u] == v) for v in target}
        self._target_of = tuple(target.index(self.assignment[u]) for u in source)
        self._fiber_idx = tuple(tuple(source.index(u) for u in self.fibers[v]) for v in target)

    def __call__(self, label: str) -> str:
        return self.assignment[label]

    @property
    def is_injective(self) -> bool:
        return all(len(f) <= 1 for f in self.fibers.values())

    @property
    def is_surjective(self) -> bool:
        return all(self.fibers.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniverseMap):
            return NotImplemented
        return (self.source, self.target, self.assignment) == (other.source, other.target, other.assignment)

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(self.assignment.items())))

    def __repr__(self) -> str:
        return f"UniverseMap({self.assignment!r} -> {list(self.target)!r})"


def image(f: UniverseMap, a: SVNSet, conv=ImageConvention.PAPER_INF) -> SVNSet:
    """The neutrosophic image of ``a`` under ``f``, aggregated per ``conv``."""
    conv = ImageConvention.parse(conv)
    if a.universe != f.source:
        raise UniverseMismatch("set does not live over the map's source")
    # with nu stored as 1 - nu, "inf mu, inf sigma, sup nu" is a plain componentwise min
    pick = min if conv is ImageConvention.PAPER_INF else max
    v = a._vec
    out = []
    for fiber in f._fiber_idx:
        if fiber:
            out += (pick(v[3 * i + c] for i in fiber) for c in range(3))
        else:
            out += (0, 0, 0)
    return SVNSet._from_vec(f.target, a._den, out)


def inverse_image(f: UniverseMap, b: SVNSet) -> SVNSet:
    """The neutrosophic inverse image: each source element takes the row of its image."""
    if b.universe != f.target:
        raise UniverseMismatch("set does not live over the map's target")
    v = b._vec
    out = []
    for j in f._target_of:
        out += v[3 * j:3 * j + 3]
    return SVNSet._from_vec(f.source, b._den, out)
