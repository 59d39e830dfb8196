"""Finite semantics: SVNSets whose grades lie in {0, 1/k, ..., 1}.

Inside such a grade lattice every family of SVNSets is finite, so upward
closures can be materialised and ultrafilter maximality becomes decidable.
Points are numbered in canonical mixed-radix order: digits run over
(mu, sigma, nu) of each universe element in turn, the last digit fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .core import SVNSet, Universe
from .errors import BudgetExceeded, GradeOutsideLattice, NotAFilter, UniverseMismatch

__all__ = [
    "DEFAULT_BUDGET",
    "GradeLattice",
    "ExplicitFamily",
    "point_count",
    "enumerate_points",
    "explicit_family",
    "upward_closure",
    "lattice_filters",
    "is_filter_in_lattice",
    "is_ultrafilter_in_lattice",
    "extend_to_ultrafilter",
    "dichotomy_holds",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class GradeLattice:
    """The grade chain {0, 1/k, ..., 1}; closed under x -> 1 - x."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"granularity must be a positive integer, got {self.k!r}")

    @property
    def grade_values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(i, self.k) for i in range(self.k + 1))

    def level(self, grade: Fraction) -> int:
        scaled = grade * self.k
        if scaled.denominator != 1:
            raise GradeOutsideLattice(f"grade {grade} is not a multiple of 1/{self.k}")
        return int(scaled)

    def admits(self, a: SVNSet) -> bool:
        return self.k % a.denominator == 0


def point_count(universe: Universe, lattice: GradeLattice) -> int:
    return (lattice.k + 1) ** (3 * len(universe))


def _check_budget(universe, lattice, budget):
    n = point_count(universe, lattice)
    if n > budget:
        raise BudgetExceeded(f"{n} lattice points exceed the budget of {budget}")
    return n


def enumerate_points(universe: Universe, lattice: GradeLattice, budget: int = DEFAULT_BUDGET) -> Iterator[SVNSet]:
    """Every SVNSet with grades in the lattice, once each, in canonical order."""
    _check_budget(universe, lattice, budget)
    return _stream(universe, lattice)


def _stream(universe, lattice):
    k = lattice.k
    for digits in product(range(k + 1), repeat=3 * len(universe)):
        vec = list(digits)
        vec[2::3] = [k - d for d in digits[2::3]]
        yield SVNSet._from_vec(universe, k, vec)


class _Space:
    """Materialised lattice points with nu stored flipped (k - nu).

    With that flip the neutrosophic order is componentwise <=, intersection is
    componentwise min and the empty set is the all-zero vector.
    """

    def __init__(self, universe: Universe, lattice: GradeLattice):
        self.universe = universe
        self.lattice = lattice
        k = self.k = lattice.k
        self.vecs: list[tuple[int, ...]] = []
        for digits in product(range(k + 1), repeat=3 * len(universe)):
            vec = list(digits)
            vec[2::3] = [k - d for d in digits[2::3]]
            self.vecs.append(tuple(vec))
        self.index = {v: i for i, v in enumerate(self.vecs)}
        self.size = len(self.vecs)
        self.bottom = self.index[(0,) * len(self.vecs[0])]
        self.top = self.index[(k,) * len(self.vecs[0])]
        self._sets: dict[int, SVNSet] = {}

    def to_set(self, i: int) -> SVNSet:
        s = self._sets.get(i)
        if s is None:
            s = SVNSet._from_vec(self.universe, self.k, self.vecs[i])
            self._sets[i] = s
        return s

    def index_of(self, a: SVNSet) -> int:
        if a.universe != self.universe:
            raise UniverseMismatch("set does not live over the lattice's universe")
        if not self.lattice.admits(a):
            raise GradeOutsideLattice(f"{a!r} has grades outside the lattice with k={self.k}")
        f = self.k // a.denominator
        return self.index[tuple(x * f for x in a._vec)]

    def meet(self, i: int, j: int) -> int:
        return self.index[tuple(map(min, self.vecs[i], self.vecs[j]))]

    def join(self, i: int, j: int) -> int:
        return self.index[tuple(map(max, self.vecs[i], self.vecs[j]))]

    def complement(self, i: int) -> int:
        k, v = self.k, self.vecs[i]
        out = []
        for c in range(0, len(v), 3):
            mu, sigma, nu_flip = v[c], v[c + 1], v[c + 2]
            out += (k - nu_flip, k - sigma, k - mu)
        return self.index[tuple(out)]

    def leq(self, i: int, j: int) -> bool:
        return all(map(int.__le__, self.vecs[i], self.vecs[j]))

    def covers(self, i: int) -> Iterator[int]:
        v = self.vecs[i]
        for c, x in enumerate(v):
            if x < self.k:
                yield self.index[v[:c] + (x + 1,) + v[c + 1:]]

    def upward(self, seeds: Iterable[int]) -> frozenset[int]:
        seen = set(seeds)
        stack = list(seen)
        while stack:
            for j in self.covers(stack.pop()):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return frozenset(seen)


@lru_cache(maxsize=16)
def _cached_space(universe: Universe, lattice: GradeLattice) -> _Space:
    return _Space(universe, lattice)


def _space(universe: Universe, lattice: GradeLattice, budget: int = DEFAULT_BUDGET) -> _Space:
    _check_budget(universe, lattice, budget)
    return _cached_space(universe, lattice)


@dataclass(frozen=True)
class ExplicitFamily:
    """A materialised family of lattice points, stored as canonical point indices."""

    lattice: GradeLattice
    universe: Universe
    members: frozenset

    @property
    def space(self) -> _Space:
        return _cached_space(self.universe, self.lattice)

    @property
    def indicator(self) -> tuple[bool, ...]:
        return tuple(i in self.members for i in range(self.space.size))

    def __contains__(self, a) -> bool:
        if isinstance(a, SVNSet):
            a = self.space.index_of(a)
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SVNSet]:
        return (self.space.to_set(i) for i in sorted(self.members))

    def issubset(self, other: "ExplicitFamily") -> bool:
        return self.members <= other.members

    def _with(self, members) -> "ExplicitFamily":
        return ExplicitFamily(self.lattice, self.universe, frozenset(members))


def explicit_family(sets: Iterable[SVNSet], universe: Universe, lattice: GradeLattice,
                    budget: int = DEFAULT_BUDGET) -> ExplicitFamily:
    space = _space(universe, lattice, budget)
    return ExplicitFamily(lattice, universe, frozenset(space.index_of(a) for a in sets))


def upward_closure(generators: Iterable[SVNSet], universe: Universe, lattice: GradeLattice,
                   budget: int = DEFAULT_BUDGET) -> ExplicitFamily:
    """All lattice points lying above some generator."""
    space = _space(universe, lattice, budget)
    seeds = [space.index_of(g) for g in generators]
    return ExplicitFamily(lattice, universe, space.upward(seeds))


def lattice_filters(universe: Universe, lattice: GradeLattice, budget: int = DEFAULT_BUDGET) -> Iterator[ExplicitFamily]:
    """The principal filter of every nonempty point, in canonical order.

    In a finite lattice these are all the filters, because a filter contains
    the intersection of all its members.
    """
    space = _space(universe, lattice, budget)
    for i in range(space.size):
        if i != space.bottom:
            yield ExplicitFamily(lattice, universe, space.upward([i]))


def is_filter_in_lattice(fam: ExplicitFamily) -> bool:
    """Nonempty, free of the empty set, closed under pairwise intersection and upward closed."""
    space = fam.space
    members = fam.members
    if not members or space.bottom in members:
        return False
    for i in members:
        for j in space.covers(i):
            if j not in members:
                return False
    ordered = sorted(members)
    for n, i in enumerate(ordered):
        for j in ordered[n + 1:]:
            if space.meet(i, j) not in members:
                return False
    return True


def _require_filter(fam: ExplicitFamily):
    if not is_filter_in_lattice(fam):
        raise NotAFilter("family is not a filter in its lattice")


def _extension(space: _Space, members: frozenset, a: int):
    """The filter generated by a filter plus one more point, or None if that has no FIP.

    Finite intersections drawn from a meet-closed family plus ``a`` are the
    members themselves and their intersections with ``a``.
    """
    cut = [space.meet(f, a) for f in members]
    if space.bottom in cut or a == space.bottom:
        return None
    return space.upward(list(members) + cut + [a])


def _maximal_direct(fam: ExplicitFamily) -> bool:
    space, members = fam.space, fam.members
    for a in range(space.size):
        if a in members:
            continue
        ext = _extension(space, members, a)
        if ext is not None and ext != members:
            return False
    return True


def _maximal_by_meeting(fam: ExplicitFamily) -> bool:
    space, members = fam.space, fam.members
    bottom = space.bottom
    for a in range(space.size):
        if a not in members and all(space.meet(f, a) != bottom for f in members):
            return False
    return True


def is_ultrafilter_in_lattice(fam: ExplicitFamily, method: str = "both") -> bool:
    """Maximality among the filters of the lattice.

    ``method`` is ``"direct"`` (no point can be adjoined while keeping the
    finite intersection property), ``"meeting"`` (every point meeting all
    members is already a member) or ``"both"``, which runs the two and raises
    ``AssertionError`` if they disagree.
    """
    _require_filter(fam)
    if method == "direct":
        return _maximal_direct(fam)
    if method == "meeting":
        return _maximal_by_meeting(fam)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    direct, meeting = _maximal_direct(fam), _maximal_by_meeting(fam)
    if direct != meeting:
        raise AssertionError("ultrafilter decision procedures disagree")
    return direct


def extend_to_ultrafilter(fam: ExplicitFamily) -> ExplicitFamily:
    """Greedy canonical-order extension of a filter to a maximal one."""
    _require_filter(fam)
    space = fam.space
    current = fam.members
    changed = True
    while changed:
        changed = False
        for a in range(space.size):
            if a in current:
                continue
            ext = _extension(space, current, a)
            if ext is not None:
                current = ext
                changed = True
    return fam._with(current)


def dichotomy_holds(fam: ExplicitFamily) -> bool:
    """True iff every lattice point or its complement belongs to the filter."""
    _require_filter(fam)
    space, members = fam.space, fam.members
    return all(a in members or space.complement(a) in members for a in range(space.size))
