"""Filter subbases, filter bases and generated filters on SVNSets.

A filter is never materialised: :class:`GeneratedFilter` stores a finite base
and decides membership of its completion (all supersets of base members) as a
predicate. Comparison of completions reduces to refinement between bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Family, SVNSet, _as_family, absolute, intersection, meets
from .errors import (
    EmptySet,
    FamilyTooLarge,
    NotAFilterBase,
    NotASubbase,
    NotMeeting,
    UniverseMismatch,
)
from .maps import ImageConvention, UniverseMap, image

__all__ = [
    "MAX_SUBSET_MEMBERS",
    "GeneratedFilter",
    "has_fip",
    "star_closure",
    "is_filter_base",
    "mk_filter",
    "contains",
    "filter_leq",
    "equivalent",
    "generated_filter",
    "principal",
    "principal_generator",
    "meet",
    "join",
    "adjoin",
    "image_base",
]

MAX_SUBSET_MEMBERS = 16


def has_fip(family, *, exhaustive: bool = False, max_members: int = MAX_SUBSET_MEMBERS) -> bool:
    """Finite intersection property of a finite family.

    For a finite family the whole family is one of its finite subfamilies and
    every other subfamily intersection contains the full intersection, so the
    default path tests the full intersection only. ``exhaustive=True`` checks
    all ``2**n - 1`` subfamilies instead and refuses families larger than
    ``max_members``.
    """
    family = _as_family(family)
    if not exhaustive:
        return not intersection(family).is_empty()
    if len(family) > max_members:
        raise FamilyTooLarge(f"{len(family)} members exceeds the subset-enumeration cap {max_members}")
    members = family.members
    for r in range(1, len(members) + 1):
        for sub in combinations(members, r):
            if intersection(sub).is_empty():
                return False
    return True


def star_closure(family, *, max_members: int = MAX_SUBSET_MEMBERS) -> Family:
    """All finite intersections of a subbase, deduplicated in first-occurrence order."""
    family = _as_family(family)
    if len(family) > max_members:
        raise FamilyTooLarge(f"{len(family)} members exceeds the star-closure cap {max_members}")
    if not has_fip(family):
        raise NotASubbase("family lacks the finite intersection property")
    closure: dict[SVNSet, None] = {}
    for s in family:
        new = [s] + [c & s for c in closure]
        closure.update(dict.fromkeys(new))
    return Family(closure)


def is_filter_base(family) -> bool:
    family = _as_family(family)
    known = family._facts.get("base")
    if known is None:
        known = family._facts["base"] = _is_filter_base(family)
    return known


def _is_filter_base(family: Family) -> bool:
    members = family.members
    if any(m.is_empty() for m in members):
        return False
    # a member below every other member dominates each pairwise meet from below
    if intersection(members) in family._frozen:
        return True
    for i, f in enumerate(members):
        for g in members[i + 1:]:
            fg = f & g
            if not any(h <= fg for h in members):
                return False
    return True


@dataclass(frozen=True)
class GeneratedFilter:
    """The completion of a validated filter base, held intensionally."""

    base: Family

    @property
    def universe(self):
        return self.base.universe

    def __contains__(self, a: SVNSet) -> bool:
        return contains(self, a)


def _check_base(family) -> Family:
    family = _as_family(family)
    if not is_filter_base(family):
        raise NotAFilterBase("family is not a filter base")
    return family


def mk_filter(base) -> GeneratedFilter:
    return GeneratedFilter(_check_base(base))


def contains(filt: GeneratedFilter, a: SVNSet) -> bool:
    """Membership in the completion: some base member lies below ``a``."""
    if a.universe != filt.universe:
        raise UniverseMismatch("set does not live over the filter's universe")
    return any(f <= a for f in filt.base)


def filter_leq(f: GeneratedFilter, g: GeneratedFilter) -> bool:
    """True iff the completion of ``f`` is included in that of ``g`` (``g`` is finer)."""
    if f.universe != g.universe:
        raise UniverseMismatch("filters live over different universes")
    return all(contains(g, m) for m in f.base)


def equivalent(f, g) -> bool:
    """True iff two filter bases have the same completion."""
    ff, gg = mk_filter(f), mk_filter(g)
    return filter_leq(ff, gg) and filter_leq(gg, ff)


def generated_filter(subbase) -> GeneratedFilter:
    """The coarsest filter containing ``subbase``."""
    return GeneratedFilter(star_closure(subbase))


def principal(a: SVNSet) -> GeneratedFilter:
    if a.is_empty():
        raise EmptySet("the empty set generates no filter")
    return GeneratedFilter(Family([a]))


def principal_generator(filt: GeneratedFilter) -> SVNSet:
    """The single generator of the principal filter equal to a finitely based filter."""
    return intersection(filt.base)


def _check_pair(f, g) -> tuple[Family, Family]:
    f, g = _check_base(f), _check_base(g)
    if f.universe != g.universe:
        raise UniverseMismatch("bases live over different universes")
    return f, g


def meet(f, g) -> Family:
    """Pairwise unions of members: a base for a filter coarser than both."""
    f, g = _check_pair(f, g)
    return Family(a | b for a in f for b in g)


def join(f, g) -> Family:
    """Pairwise intersections of members: a base for a filter finer than both."""
    f, g = _check_pair(f, g)
    out = []
    for a in f:
        for b in g:
            ab = a & b
            if ab.is_empty():
                raise NotMeeting("the bases do not meet")
            out.append(ab)
    return Family(out)


def adjoin(f, a: SVNSet) -> Family:
    """Intersections of ``a`` with every member of the base ``f``."""
    f = _check_base(f)
    if a.universe != f.universe:
        raise UniverseMismatch("set does not live over the base's universe")
    out = []
    for m in f:
        ma = m & a
        if ma.is_empty():
            raise NotMeeting("set does not meet every member of the base")
        out.append(ma)
    return Family(out)


def image_base(f: UniverseMap, base, conv=ImageConvention.PAPER_INF) -> Family:
    """Images of the members of a filter base; re-validated as a base over the target."""
    base = _check_base(base)
    if base.universe != f.source:
        raise UniverseMismatch("base does not live over the map's source")
    images = Family(image(f, m, conv) for m in base)
    if not is_filter_base(images):
        raise NotAFilterBase(f"image family under {ImageConvention.parse(conv).value} is not a filter base")
    return images


def top_filter(universe) -> GeneratedFilter:
    """The coarsest filter, generated by the absolute set."""
    return GeneratedFilter(Family([absolute(universe)]))


def meets_all(a: SVNSet, family) -> bool:
    return all(meets(a, m) for m in _as_family(family))
