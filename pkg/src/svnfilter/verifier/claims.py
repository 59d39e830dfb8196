"""Every registered claim, one predicate each.

Predicates return ``True`` when their preconditions fail. Slot kinds are
described in :mod:`pools`; ``F``/``G`` name filter bases or lattice filters,
``S`` a subbase, ``f`` a map, ``A``..``D`` sets.
"""

from __future__ import annotations

from itertools import combinations

from ..core import (
    Family,
    SVNSet,
    absolute,
    complement,
    empty,
    family_meets,
    intersection,
    meets,
    union,
)
from ..errors import NotAFilterBase
from ..filters import (
    adjoin,
    contains,
    equivalent,
    filter_leq,
    generated_filter,
    has_fip,
    image_base,
    is_filter_base,
    join,
    meet,
    mk_filter,
    principal,
    principal_generator,
    star_closure,
)
from ..lattice import (
    ExplicitFamily,
    dichotomy_holds,
    explicit_family,
    extend_to_ultrafilter,
    is_filter_in_lattice,
    is_ultrafilter_in_lattice,
    upward_closure,
)
from ..maps import ImageConvention, image, inverse_image
from .. import worked_examples as ex
from .registry import REFUTES, register

SUP = ImageConvention.STANDARD_SUP.value
INF = ImageConvention.PAPER_INF.value


def implies(p: bool, q) -> bool:
    return (not p) or bool(q() if callable(q) else q)


# ---------------------------------------------------------------- set algebra

@register("subset-partial-order", "set-algebra", "⊑ is reflexive, antisymmetric and transitive; = is mutual ⊑",
          [("A", "set"), ("B", "set"), ("C", "set")])
def _(A, B, C):
    return (A <= A
            and (A == B) == (A <= B and B <= A)
            and implies(A <= B and B <= C, lambda: A <= C))


@register("subset-total-order", "set-algebra", "any two sets are ⊑-comparable",
          [("A", "set"), ("B", "set")], stance=REFUTES, expected="falsified")
def _(A, B):
    return A <= B or B <= A


@register("empty-absolute-bounds", "set-algebra", "∅̃ ⊑ A ⊑ 1̃", [("A", "set")])
def _(A):
    return empty(A.universe) <= A <= absolute(A.universe)


@register("complement-involution", "set-algebra", "(Aᶜ)ᶜ = A, 1̃ᶜ = ∅̃, ∅̃ᶜ = 1̃", [("A", "set")])
def _(A):
    u = A.universe
    return complement(complement(A)) == A and complement(absolute(u)) == empty(u) and complement(empty(u)) == absolute(u)


def _remark_set():
    return [{"A": ex.complement_example()[0]}]


@register("intersection-with-complement-empty", "set-algebra", "A ⊓ Aᶜ = ∅̃",
          [("A", "set")], stance=REFUTES, fixed=_remark_set, expected="falsified")
def _(A):
    return A & ~A == empty(A.universe)


@register("union-with-complement-absolute", "set-algebra", "A ⊔ Aᶜ = 1̃",
          [("A", "set")], stance=REFUTES, fixed=_remark_set, expected="falsified")
def _(A):
    return A | ~A == absolute(A.universe)


@register("complement-antitone", "set-algebra", "A ⊑ B iff Bᶜ ⊑ Aᶜ", [("A", "set"), ("B", "set")])
def _(A, B):
    return (A <= B) == (~B <= ~A)


@register("union-identity-laws", "set-algebra", "A ⊔ A = A, A ⊔ ∅̃ = A, A ⊔ 1̃ = 1̃", [("A", "set")])
def _(A):
    u = A.universe
    return A | A == A and A | empty(u) == A and A | absolute(u) == absolute(u)


@register("intersection-identity-laws", "set-algebra", "A ⊓ A = A, A ⊓ ∅̃ = ∅̃, A ⊓ 1̃ = A", [("A", "set")])
def _(A):
    u = A.universe
    return A & A == A and A & empty(u) == empty(u) and A & absolute(u) == A


@register("commutativity", "set-algebra", "A ⊓ B = B ⊓ A and A ⊔ B = B ⊔ A", [("A", "set"), ("B", "set")])
def _(A, B):
    return A & B == B & A and A | B == B | A


@register("associativity", "set-algebra", "⊓ and ⊔ are associative", [("A", "set"), ("B", "set"), ("C", "set")])
def _(A, B, C):
    return (A & B) & C == A & (B & C) and (A | B) | C == A | (B | C)


@register("subset-characterization", "set-algebra", "A ⊑ B iff A ⊓ B = A iff A ⊔ B = B",
          [("A", "set"), ("B", "set")])
def _(A, B):
    le = A <= B
    return le == (A & B == A) == (A | B == B)


@register("absorption", "set-algebra", "A ⊔ (A ⊓ B) = A and A ⊓ (A ⊔ B) = A", [("A", "set"), ("B", "set")])
def _(A, B):
    return A | (A & B) == A and A & (A | B) == A


@register("monotonicity", "set-algebra", "A ⊑ B and C ⊑ D give A ⊔ C ⊑ B ⊔ D and A ⊓ C ⊑ B ⊓ D",
          [("A,B", "le_pair"), ("C,D", "le_pair")])
def _(A, B, C, D):
    return implies(A <= B and C <= D, lambda: A | C <= B | D and A & C <= B & D)


@register("generalized-inclusion", "set-algebra", "⊓Aᵢ ⊑ Aⱼ ⊑ ⊔Aᵢ for every member", [("S", "family")])
def _(S):
    lo, hi = intersection(S), union(S)
    return all(lo <= a <= hi for a in S)


@register("distributive-generalized", "set-algebra", "A ⊓ (⊔Aᵢ) = ⊔(A ⊓ Aᵢ) and A ⊔ (⊓Aᵢ) = ⊓(A ⊔ Aᵢ)",
          [("A", "set"), ("S", "family")])
def _(A, S):
    return (A & union(S) == union(A & b for b in S)
            and A | intersection(S) == intersection(A | b for b in S))


@register("demorgan-generalized", "set-algebra", "(⊔Aᵢ)ᶜ = ⊓Aᵢᶜ and (⊓Aᵢ)ᶜ = ⊔Aᵢᶜ", [("S", "family")])
def _(S):
    comps = [~b for b in S]
    return ~union(S) == intersection(comps) and ~intersection(S) == union(comps)


def _incomparable():
    a, b = ex.incomparable_pair()
    return [{"A": a, "B": b}]


@register("example-incomparable-sets", "set-algebra", "the tabulated A and B are ⊑-incomparable",
          fixed=_incomparable)
def _(A, B):
    return not A <= B and not B <= A


def _complement_tables():
    a, m, j = ex.complement_example()
    return [{"A": a, "M": m, "J": j}]


@register("example-complement-tables", "set-algebra",
          "the tabulated A ⊓ Aᶜ and A ⊔ Aᶜ are exact and differ from ∅̃ and 1̃", fixed=_complement_tables)
def _(A, M, J):
    return A & ~A == M and A | ~A == J and M != empty(A.universe) and J != absolute(A.universe)


# ---------------------------------------------------------------- induced maps

@register("image-empty", "induced-maps", "f(∅̃) = ∅̃", [("f", "map")], image=True)
def _(f, conv):
    return image(f, empty(f.source), conv) == empty(f.target)


@register("inverse-image-empty", "induced-maps", "f⁻¹(∅̃) = ∅̃", [("f", "map")])
def _(f):
    return inverse_image(f, empty(f.target)) == empty(f.source)


@register("inverse-image-absolute", "induced-maps", "f⁻¹(1̃) = 1̃", [("f", "map")])
def _(f):
    return inverse_image(f, absolute(f.target)) == absolute(f.source)


@register("subset-of-preimage-of-image", "induced-maps", "A ⊑ f⁻¹(f(A)), with equality for injective f",
          [("f", "map"), ("A", "set")], image=True, expected={SUP: "verified"})
def _(f, A, conv):
    back = inverse_image(f, image(f, A, conv))
    return A <= back and implies(f.is_injective, back == A)


@register("image-of-preimage-subset", "induced-maps", "f(f⁻¹(B)) ⊑ B, with equality for surjective f",
          [("f", "map"), ("B", "tset")], image=True)
def _(f, B, conv):
    there = image(f, inverse_image(f, B), conv)
    return there <= B and implies(f.is_surjective, there == B)


@register("inverse-image-commutes-complement", "induced-maps", "f⁻¹(Bᶜ) = (f⁻¹(B))ᶜ",
          [("f", "map"), ("B", "tset")])
def _(f, B):
    return inverse_image(f, ~B) == ~inverse_image(f, B)


@register("image-monotone", "induced-maps", "A ⊑ B gives f(A) ⊑ f(B)",
          [("f", "map"), ("A,B", "le_pair")], image=True)
def _(f, A, B, conv):
    return implies(A <= B, lambda: image(f, A, conv) <= image(f, B, conv))


@register("inverse-image-monotone", "induced-maps", "A ⊑ B gives f⁻¹(A) ⊑ f⁻¹(B)",
          [("f", "map"), ("A,B", "tle_pair")])
def _(f, A, B):
    return implies(A <= B, lambda: inverse_image(f, A) <= inverse_image(f, B))


@register("image-union-commutes", "induced-maps", "f(⊔Aᵢ) = ⊔f(Aᵢ)",
          [("f", "map"), ("S", "family")], image=True, expected={SUP: "verified"})
def _(f, S, conv):
    return image(f, union(S), conv) == union(image(f, a, conv) for a in S)


@register("image-intersection-subset", "induced-maps", "f(⊓Aᵢ) ⊑ ⊓f(Aᵢ), with equality for injective f",
          [("f", "map"), ("S", "family")], image=True)
def _(f, S, conv):
    lhs = image(f, intersection(S), conv)
    rhs = intersection(image(f, a, conv) for a in S)
    return lhs <= rhs and implies(f.is_injective, lhs == rhs)


@register("inverse-image-union-commutes", "induced-maps", "f⁻¹(⊔Bᵢ) = ⊔f⁻¹(Bᵢ)",
          [("f", "map"), ("S", "tfamily")])
def _(f, S):
    return inverse_image(f, union(S)) == union(inverse_image(f, b) for b in S)


@register("inverse-image-intersection-commutes", "induced-maps", "f⁻¹(⊓Bᵢ) = ⊓f⁻¹(Bᵢ)",
          [("f", "map"), ("S", "tfamily")])
def _(f, S):
    return inverse_image(f, intersection(S)) == intersection(inverse_image(f, b) for b in S)


def _image_tables():
    f, a, b, img, pre = ex.image_example()
    return [{"f": f, "A": a, "B": b, "I": img, "P": pre}]


@register("example-image-tables", "induced-maps", "the tabulated f(A) (fiber infima) and f⁻¹(B) are exact",
          fixed=_image_tables)
def _(f, A, B, I, P):
    return image(f, A, ImageConvention.PAPER_INF) == I and inverse_image(f, B) == P


# ---------------------------------------------------------------- filters

def _members(F: ExplicitFamily) -> list[SVNSet]:
    return list(F)


def _upward_closed(F: ExplicitFamily) -> bool:
    return upward_closure(_members(F), F.universe, F.lattice).members == F.members


def _finite_intersections(sets):
    closure: dict[SVNSet, None] = {}
    for s in sets:
        closure.update(dict.fromkeys([s] + [c & s for c in closure]))
    return closure


@register("filter-characterization", "filters",
          "a family is an upward-closed filter base iff it omits ∅̃, is ⊓-closed and is upward closed",
          [("F", "lfamily")])
def _(F):
    by_definition = len(F) > 0 and is_filter_base(Family(_members(F))) and _upward_closed(F)
    return by_definition == is_filter_in_lattice(F)


@register("filter-characterization-finite", "filters",
          "a family is a filter iff it omits ∅̃, contains every finite intersection of members and is upward closed",
          [("F", "lfamily")], lattice_points_cap=27)
def _(F):
    members = _members(F)
    if not members:
        return not is_filter_in_lattice(F)
    bottom = empty(F.universe)
    by_closure = (bottom not in F and all(s in F for s in _finite_intersections(members)) and _upward_closed(F))
    return by_closure == is_filter_in_lattice(F)


@register("filter-remark-hierarchy", "filters",
          "every filter is a filter base containing 1̃, and every filter base is a subbase",
          [("F", "lfamily")])
def _(F):
    if not len(F):
        return True
    fam = Family(_members(F))
    return (implies(is_filter_in_lattice(F), lambda: is_filter_base(fam) and absolute(F.universe) in F)
            and implies(is_filter_base(fam), lambda: has_fip(fam)))


@register("star-closure-is-base", "filters", "S* is a filter base containing S whenever S has the FIP",
          [("S", "subbase")])
def _(S):
    if not has_fip(S):
        return True
    star = star_closure(S)
    return is_filter_base(star) and S.issubset(star) and has_fip(S, exhaustive=True)


@register("star-equals-base-remark", "filters", "S* = S for every filter base S",
          [("S", "base")], expected=None)
def _(S):
    return implies(is_filter_base(S), lambda: star_closure(S) == S)


@register("filter-star-completion-remark", "filters", "a filter is closed under ⊓ and equals its own completion",
          [("F", "lfilter")])
def _(F):
    members = _members(F)
    return all((a & b) in F for a, b in combinations(members, 2)) and _upward_closed(F)


@register("completion-is-filter", "filters",
          "↑F omits ∅̃, contains F, is ⊓-closed and upward closed, for every filter base F",
          [("F", "base"), ("X", "set"), ("Y", "set")])
def _(F, X, Y):
    if not is_filter_base(F):
        return True
    filt = mk_filter(F)
    if contains(filt, empty(F.universe)) or not all(contains(filt, m) for m in F):
        return False
    probes_a = [X] + [m | X for m in F]
    probes_b = [Y] + [m | Y for m in F]
    for a in probes_a:
        if not contains(filt, a):
            continue
        for b in probes_b:
            if contains(filt, b) and not contains(filt, a & b):
                return False
            if a <= b and not contains(filt, b):
                return False
    return True


@register("monotone-completion", "filters", "F ⊆ G as bases gives ↑F ⊆ ↑G", [("G", "base")])
def _(G):
    if not is_filter_base(G):
        return True
    fg = mk_filter(G)
    members = G.members
    for r in range(1, len(members) + 1):
        for sub in combinations(members, r):
            if is_filter_base(sub) and not filter_leq(mk_filter(sub), fg):
                return False
    return True


@register("generated-filter-coarsest", "filters",
          "↑S* contains S and lies inside every filter containing S",
          [("S,H", "covered_subbase")])
def _(S, H):
    if not has_fip(S) or not is_filter_base(H):
        return True
    gen = generated_filter(S)
    if not all(contains(gen, s) for s in S):
        return False
    target = mk_filter(H)
    return implies(all(contains(target, s) for s in S), lambda: filter_leq(gen, target))


@register("finite-base-principal", "filters", "a filter with a finite base is principal, generated by ⊓F",
          [("F", "base")])
def _(F):
    if not is_filter_base(F):
        return True
    g = principal_generator(mk_filter(F))
    return not g.is_empty() and equivalent(F, Family([g])) and filter_leq(principal(g), mk_filter(F))


@register("meet-is-base", "filters", "F ∧ G is a filter base with ↑(F ∧ G) ⊆ ↑F and ⊆ ↑G",
          [("F", "base"), ("G", "base")])
def _(F, G):
    if not (is_filter_base(F) and is_filter_base(G)):
        return True
    m = meet(F, G)
    fm = mk_filter(m)
    return is_filter_base(m) and filter_leq(fm, mk_filter(F)) and filter_leq(fm, mk_filter(G))


def _pairwise(F, G, op):
    return explicit_family((op(a, b) for a in F for b in G), F.universe, F.lattice)


@register("meet-of-filters-is-filter", "filters", "{A ⊔ B : A ∈ F, B ∈ G} is a filter inside F and G",
          [("F", "lfilter"), ("G", "lfilter")], lattice_points_cap=27)
def _(F, G):
    m = _pairwise(F, G, SVNSet.__or__)
    return is_filter_in_lattice(m) and m.issubset(F) and m.issubset(G)


@register("join-is-base", "filters", "for meeting bases, F ∨ G is a filter base with ↑F, ↑G ⊆ ↑(F ∨ G)",
          [("F", "base"), ("G", "base")])
def _(F, G):
    if not (is_filter_base(F) and is_filter_base(G) and family_meets(F, G)):
        return True
    j = join(F, G)
    fj = mk_filter(j)
    return is_filter_base(j) and filter_leq(mk_filter(F), fj) and filter_leq(mk_filter(G), fj)


@register("join-of-filters-is-filter", "filters",
          "for meeting filters, {A ⊓ B : A ∈ F, B ∈ G} is a filter containing F and G",
          [("F", "lfilter"), ("G", "lfilter")], lattice_points_cap=27)
def _(F, G):
    if not family_meets(Family(_members(F)), Family(_members(G))):
        return True
    j = _pairwise(F, G, SVNSet.__and__)
    return is_filter_in_lattice(j) and F.issubset(j) and G.issubset(j)


@register("adjoin-is-base", "filters", "if A meets every member of a base F, F ∨ A is a base with ↑F ⊆ ↑(F ∨ A)",
          [("F", "base"), ("A", "set")])
def _(F, A):
    if not is_filter_base(F) or not all(meets(A, m) for m in F):
        return True
    j = adjoin(F, A)
    return is_filter_base(j) and filter_leq(mk_filter(F), mk_filter(j)) and contains(mk_filter(j), A)


@register("adjoin-of-filter-is-filter", "filters",
          "if A meets every member of a filter F, {B ⊓ A : B ∈ F} is a filter containing F",
          [("F", "lfilter"), ("A", "lpoint")], expected=None)
def _(F, A):
    members = _members(F)
    if not all(meets(A, m) for m in members):
        return True
    j = explicit_family((m & A for m in members), F.universe, F.lattice)
    return is_filter_in_lattice(j) and F.issubset(j)


@register("image-of-base-is-base", "filters", "the images of a filter base form a filter base",
          [("f", "map"), ("F", "base")], image=True, expected={SUP: "verified"})
def _(f, F, conv):
    if not is_filter_base(F):
        return True
    try:
        image_base(f, F, conv)
    except NotAFilterBase:
        return False
    return True


@register("filter-order-not-total", "filters", "any two filters are comparable under finer-than",
          [("F", "base"), ("G", "base")], stance=REFUTES, expected="falsified")
def _(F, G):
    if not (is_filter_base(F) and is_filter_base(G)):
        return True
    ff, gg = mk_filter(F), mk_filter(G)
    return filter_leq(ff, gg) or filter_leq(gg, ff)


def _filter_base_example():
    f, g, h, top, w = ex.filter_base_example()
    return [{"F": f, "G": g, "H": h, "T": top, "W": w}]


@register("example-filter-base-w-table", "filters", "the tabulated W equals F ⊓ G",
          fixed=_filter_base_example, expected=None)
def _(F, G, H, T, W):
    return F & G == W


@register("example-filter-base-not-filter", "filters",
          "{F, G, H, 1̃} is a filter base but not a filter, since F ⊓ G is missing",
          fixed=_filter_base_example, expected=None)
def _(F, G, H, T, W):
    fam = Family([F, G, H, T])
    return is_filter_base(fam) and (F & G) not in fam


# ---------------------------------------------------------------- ultrafilters

@register("ultrafilter-existence", "ultrafilters", "every filter lies inside some ultrafilter",
          [("F", "lfilter")])
def _(F):
    u = extend_to_ultrafilter(F)
    return F.issubset(u) and is_ultrafilter_in_lattice(u, method="both")


@register("ultrafilter-characterization", "ultrafilters",
          "a filter is maximal iff it contains every set meeting all of its members", [("F", "lfilter")])
def _(F):
    return is_ultrafilter_in_lattice(F, method="direct") == _absorbs_meeting(F, _members(F))


def _absorbs_meeting(F, members):
    space = F.space
    for i in range(space.size):
        p = space.to_set(i)
        if i not in F.members and all(meets(p, m) for m in members):
            return False
    return True


@register("ultrafilter-dichotomy", "ultrafilters", "an ultrafilter contains every A or its complement",
          [("F", "lfilter")], expected=None)
def _(F):
    return implies(is_ultrafilter_in_lattice(F), lambda: dichotomy_holds(F))


@register("ultrafilter-dichotomy-converse", "ultrafilters",
          "a filter containing every A or its complement is an ultrafilter",
          [("F", "lfilter")], stance=REFUTES, expected=None)
def _(F):
    return implies(dichotomy_holds(F), lambda: is_ultrafilter_in_lattice(F))


def _principal_example():
    a, b, c, z = ex.principal_example()
    return {"A": a, "B": b, "C": c, "Z": z}


@register("principal-ultrafilter-example", "ultrafilters",
          "↑A for the tabulated A is maximal: every X meeting A lies in ↑A",
          [("X", "example_set")], expected=None)
def _(X):
    a = _principal_example()["A"]
    return implies(meets(a, X), lambda: contains(principal(a), X))


@register("example-principal-members", "ultrafilters", "the tabulated B and C lie in ↑A",
          fixed=lambda: [_principal_example()])
def _(A, B, C, Z):
    return A <= B and A <= C and contains(principal(A), B) and contains(principal(A), C)


@register("example-z-outside-principal", "ultrafilters", "neither Z nor Zᶜ lies in ↑A",
          fixed=lambda: [_principal_example()], expected=None)
def _(A, B, C, Z):
    p = principal(A)
    return not contains(p, Z) and not contains(p, ~Z)
