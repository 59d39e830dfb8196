"""Instance spaces for claims: exhaustive pools over small lattices and random draws.

A claim declares slots, each with a kind. For every kind this module knows
how to count the exhaustive pool of a context, iterate it lazily in canonical
order, and draw one random value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import comb

from ..core import Family, SVNSet, Universe, intersection
from ..filters import has_fip, is_filter_base, star_closure
from ..lattice import ExplicitFamily, GradeLattice, _cached_space, lattice_filters
from ..maps import UniverseMap
from ..worked_examples import ABC

MAX_DENOMINATOR = 100
EXHAUSTIVE_FAMILY_SIZE = 2
# a two-member base always contains its own intersection, so bases need three
EXHAUSTIVE_BASE_SIZE = 3
RANDOM_FAMILY_SIZE = 4
RANDOM_SUBBASE_SIZE = 3


def universe_of(n: int, prefix: str = "u") -> Universe:
    return Universe(f"{prefix}{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class Context:
    """One exhaustive search space: source size ``n``, target size ``m``, granularity ``k``."""

    n: int
    k: int
    m: int | None = None

    def label(self) -> str:
        parts = [f"n={self.n}"] + ([f"m={self.m}"] if self.m else []) + [f"k={self.k}"]
        return " ".join(parts)


class _Pools:
    """Lazily materialised pools shared by every claim searching one context."""

    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.universe = universe_of(ctx.n)
        self.target = universe_of(ctx.m, "v") if ctx.m else None
        self.lattice = GradeLattice(ctx.k)

    @cached_property
    def space(self):
        return _cached_space(self.universe, self.lattice)

    @cached_property
    def points(self) -> list[SVNSet]:
        return [self.space.to_set(i) for i in range(self.space.size)]

    @cached_property
    def tpoints(self) -> list[SVNSet]:
        space = _cached_space(self.target, self.lattice)
        return [space.to_set(i) for i in range(space.size)]

    @cached_property
    def example_points(self) -> list[SVNSet]:
        space = _cached_space(ABC, self.lattice)
        return [space.to_set(i) for i in range(space.size)]

    @cached_property
    def maps(self) -> list[UniverseMap]:
        src, tgt = list(self.universe), list(self.target)
        return [UniverseMap(self.universe, self.target, dict(zip(src, out)))
                for out in product(tgt, repeat=len(src))]

    @cached_property
    def le_pairs(self) -> list[tuple[SVNSet, SVNSet]]:
        return _le_pairs(self.points)

    @cached_property
    def tle_pairs(self) -> list[tuple[SVNSet, SVNSet]]:
        return _le_pairs(self.tpoints)

    @cached_property
    def lattice_filters(self) -> list[ExplicitFamily]:
        return list(lattice_filters(self.universe, self.lattice))


def _le_pairs(points):
    return [(a, b) for a in points for b in points if a <= b]


@lru_cache(maxsize=64)
def pools(ctx: Context) -> _Pools:
    return _Pools(ctx)


def _families(points, max_size=EXHAUSTIVE_FAMILY_SIZE):
    for r in range(1, max_size + 1):
        for combo in combinations(points, r):
            yield Family(combo)


def _family_count(n, max_size=EXHAUSTIVE_FAMILY_SIZE):
    return sum(comb(n, r) for r in range(1, max_size + 1))


def random_grade(rng: random.Random) -> Fraction:
    # a fifth of the draws sit on the endpoints, where degenerate witnesses live
    if rng.random() < 0.2:
        return Fraction(rng.randint(0, 1))
    d = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(0, d), d)


def random_set(rng: random.Random, universe: Universe) -> SVNSet:
    return SVNSet(universe, [(random_grade(rng), random_grade(rng), random_grade(rng)) for _ in universe])


def random_family(rng, universe, max_size=RANDOM_FAMILY_SIZE) -> Family:
    return Family(random_set(rng, universe) for _ in range(rng.randint(1, max_size)))


def random_subbase(rng, universe) -> Family:
    while True:
        fam = random_family(rng, universe, RANDOM_SUBBASE_SIZE)
        if has_fip(fam):
            return fam


def random_base(rng, universe) -> Family:
    """A random filter base, built either as a star closure or around a least member."""
    if rng.random() < 0.5:
        return star_closure(random_subbase(rng, universe))
    while True:
        least = random_set(rng, universe)
        if not least.is_empty():
            break
    others = [least | random_set(rng, universe) for _ in range(rng.randint(0, RANDOM_FAMILY_SIZE - 1))]
    members = others + [least]
    rng.shuffle(members)
    return Family(members)


def random_map(rng, source: Universe, target: Universe) -> UniverseMap:
    tgt = list(target)
    return UniverseMap(source, target, {u: rng.choice(tgt) for u in source})


def random_lattice_family(rng, p: _Pools) -> ExplicitFamily:
    """Random explicit families biased toward (near-)filters."""
    space = p.space
    strategy = rng.randrange(3)
    if strategy == 0:
        density = rng.random()
        members = frozenset(i for i in range(space.size) if rng.random() < density)
    elif strategy == 1:
        members = space.upward(rng.randrange(space.size) for _ in range(rng.randint(1, 3)))
    else:
        members = set(space.upward([rng.randrange(space.size)]))
        members.symmetric_difference_update({rng.randrange(space.size)})
        members = frozenset(members)
    return ExplicitFamily(p.lattice, p.universe, members)


def random_lattice_filter(rng, p: _Pools) -> ExplicitFamily:
    space = p.space
    while True:
        i = rng.randrange(space.size)
        if i != space.bottom:
            return ExplicitFamily(p.lattice, p.universe, space.upward([i]))


class Kind:
    """How one slot kind is enumerated, counted and sampled."""

    def __init__(self, name, count, iterate, draw, *, needs_map=False, lattice=False, fixed_universe=False):
        self.name = name
        self.count = count
        self.iterate = iterate
        self.draw = draw
        self.needs_map = needs_map
        self.lattice = lattice
        self.fixed_universe = fixed_universe


def _subsets(p: _Pools):
    space = p.space
    for bits in product((False, True), repeat=space.size):
        yield ExplicitFamily(p.lattice, p.universe, frozenset(i for i, b in enumerate(bits) if b))


def _bases(points):
    return (f for f in _families(points, EXHAUSTIVE_BASE_SIZE) if is_filter_base(f))


def _subbases(points):
    return (f for f in _families(points, EXHAUSTIVE_BASE_SIZE) if not intersection(f).is_empty())


def _base_count(p):
    return _family_count(len(p.points), EXHAUSTIVE_BASE_SIZE)


def _covered_subbases(points):
    """Pairs (S, H): a base H and a subbase S inside the completion of H."""
    for h in _bases(points):
        for s in _subbases(points):
            if all(any(m <= x for m in h) for x in s):
                yield s, h


def _covered_draw(rng, universe):
    h = random_base(rng, universe)
    members = h.members
    s = Family(rng.choice(members) | random_set(rng, universe) for _ in range(rng.randint(1, 3)))
    return s, h


def _lpoint_draw(rng, p):
    return p.space.to_set(rng.randrange(p.space.size))


KINDS: dict[str, Kind] = {
    "set": Kind("set", lambda p: len(p.points), lambda p: p.points,
                lambda rng, p: random_set(rng, p.universe)),
    "tset": Kind("tset", lambda p: len(p.tpoints), lambda p: p.tpoints,
                 lambda rng, p: random_set(rng, p.target), needs_map=True),
    "le_pair": Kind("le_pair", lambda p: len(p.le_pairs), lambda p: p.le_pairs,
                    lambda rng, p: _le_draw(rng, p.universe)),
    "tle_pair": Kind("tle_pair", lambda p: len(p.tle_pairs), lambda p: p.tle_pairs,
                     lambda rng, p: _le_draw(rng, p.target), needs_map=True),
    "family": Kind("family", lambda p: _family_count(len(p.points)), lambda p: _families(p.points),
                   lambda rng, p: random_family(rng, p.universe)),
    "tfamily": Kind("tfamily", lambda p: _family_count(len(p.tpoints)), lambda p: _families(p.tpoints),
                    lambda rng, p: random_family(rng, p.target), needs_map=True),
    "subbase": Kind("subbase", _base_count, lambda p: _subbases(p.points),
                    lambda rng, p: random_subbase(rng, p.universe)),
    "base": Kind("base", _base_count, lambda p: _bases(p.points),
                 lambda rng, p: random_base(rng, p.universe)),
    "covered_subbase": Kind("covered_subbase", lambda p: _base_count(p) ** 2,
                            lambda p: _covered_subbases(p.points), lambda rng, p: _covered_draw(rng, p.universe)),
    "map": Kind("map", lambda p: p.ctx.m ** p.ctx.n, lambda p: p.maps,
                lambda rng, p: random_map(rng, p.universe, p.target), needs_map=True),
    "lpoint": Kind("lpoint", lambda p: len(p.points), lambda p: p.points, _lpoint_draw, lattice=True),
    "lfilter": Kind("lfilter", lambda p: len(p.points) - 1, lambda p: p.lattice_filters,
                    random_lattice_filter, lattice=True),
    "lfamily": Kind("lfamily", lambda p: 2 ** len(p.points), _subsets, random_lattice_family, lattice=True),
    "example_set": Kind("example_set", lambda p: len(p.example_points), lambda p: p.example_points,
                        lambda rng, p: random_set(rng, ABC), fixed_universe=True),
}


def _le_draw(rng, universe):
    a = random_set(rng, universe)
    return a, a | random_set(rng, universe)
