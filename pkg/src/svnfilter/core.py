"""Single valued neutrosophic sets over finite universes.

Grades are exact rationals in [0, 1]. Internally an :class:`SVNSet` keeps all
of its grades as integer numerators over one shared denominator, which keeps
the pointwise min/max algebra exact and fast.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from operator import le
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import EmptyFamily, GradeOutOfRange, UniverseMismatch

GradeLike = Union[Fraction, int, str, Tuple[int, int]]
Triple = Tuple[Fraction, Fraction, Fraction]

__all__ = [
    "Universe",
    "SVNSet",
    "Family",
    "to_grade",
    "mk_constant",
    "empty",
    "absolute",
    "is_subset",
    "equals",
    "complement",
    "intersection",
    "union",
    "meets",
    "family_meets",
]


def to_grade(value: GradeLike) -> Fraction:
    """Parse ``value`` into an exact grade in [0, 1].

    Accepts ``Fraction``/rational numbers, ints, decimal or fraction strings
    (``"0.3"``, ``"3/10"``) and ``(numerator, denominator)`` pairs. Floats are
    refused because they cannot represent most decimal grades exactly.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not grades")
    if isinstance(value, float):
        raise TypeError(f"float grade {value!r} refused; pass a string such as {str(value)!r}")
    if isinstance(value, tuple):
        num, den = value
        grade = Fraction(num, den)
    elif isinstance(value, str):
        try:
            grade = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GradeOutOfRange(f"cannot parse grade {value!r}") from exc
    elif isinstance(value, Rational):
        grade = Fraction(value)
    else:
        raise TypeError(f"unsupported grade type {type(value).__name__}")
    if not 0 <= grade <= 1:
        raise GradeOutOfRange(f"grade {grade} outside [0, 1]")
    return grade


class Universe:
    """A nonempty, ordered collection of distinct element labels."""

    __slots__ = ("elements", "_index", "_hash")

    def __init__(self, elements: Iterable[str]):
        elements = tuple(str(e) for e in elements)
        if not elements:
            raise ValueError("a universe must have at least one element")
        if len(set(elements)) != len(elements):
            raise ValueError(f"duplicate labels in universe {elements}")
        self.elements = elements
        self._index = {e: i for i, e in enumerate(elements)}
        self._hash = hash(elements)

    def index(self, label: str) -> int:
        return self._index[label]

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Universe) and self.elements == other.elements

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Universe({list(self.elements)!r})"


class SVNSet:
    """A single valued neutrosophic set: one (mu, sigma, nu) triple per element.

    Build one from a mapping ``{label: (mu, sigma, nu)}`` or from a sequence of
    triples in universe order. Operators: ``<=`` is the neutrosophic subset
    relation, ``&`` intersection, ``|`` union, ``~`` complement, and ``==``
    neutrosophic equality.
    """

    # _vec interleaves (mu, sigma, den - nu) per element as integers over _den,
    # so that the subset order is componentwise <= and the empty set is all zeros
    __slots__ = ("universe", "_den", "_vec", "_hash")

    def __init__(self, universe: Universe, rows: Union[Mapping[str, Sequence], Sequence[Sequence]]):
        if not isinstance(universe, Universe):
            universe = Universe(universe)
        if isinstance(rows, Mapping):
            missing = [u for u in universe if u not in rows]
            extra = [u for u in rows if u not in universe]
            if missing or extra:
                raise UniverseMismatch(f"rows do not match universe: missing {missing}, unknown {extra}")
            triples = [rows[u] for u in universe]
        else:
            triples = list(rows)
            if len(triples) != len(universe):
                raise UniverseMismatch(f"expected {len(universe)} rows, got {len(triples)}")
        grades = []
        for triple in triples:
            if len(triple) != 3:
                raise ValueError(f"grade triple must have three entries, got {triple!r}")
            mu, sigma, nu = (to_grade(g) for g in triple)
            grades += (mu, sigma, 1 - nu)
        den = math.lcm(*(g.denominator for g in grades))
        self._set(universe, den, tuple(g.numerator * (den // g.denominator) for g in grades))

    def _set(self, universe, den, vec):
        self.universe = universe
        self._den = den
        self._vec = vec
        self._hash = None

    @classmethod
    def _from_vec(cls, universe: Universe, den: int, vec) -> "SVNSet":
        """Build from an interleaved integer vector over ``den``, normalising the denominator."""
        g = math.gcd(den, *vec)
        if g > 1:
            den //= g
            vec = tuple(v // g for v in vec)
        obj = cls.__new__(cls)
        obj._set(universe, den, tuple(vec))
        return obj

    @classmethod
    def _raw(cls, universe: Universe, den: int, mu, sigma, nu) -> "SVNSet":
        """Build from separate integer numerators of mu, sigma and nu over ``den``."""
        vec = []
        for m, s, n in zip(mu, sigma, nu):
            vec += (m, s, den - n)
        return cls._from_vec(universe, den, vec)

    @property
    def _mu(self) -> Tuple[int, ...]:
        return self._vec[0::3]

    @property
    def _sigma(self) -> Tuple[int, ...]:
        return self._vec[1::3]

    @property
    def _nu(self) -> Tuple[int, ...]:
        d = self._den
        return tuple(d - x for x in self._vec[2::3])

    # -- grade access -------------------------------------------------------

    def triple(self, label: str) -> Triple:
        i = 3 * self.universe.index(label)
        d, v = self._den, self._vec
        return Fraction(v[i], d), Fraction(v[i + 1], d), Fraction(d - v[i + 2], d)

    def mu(self, label: str) -> Fraction:
        return self.triple(label)[0]

    def sigma(self, label: str) -> Fraction:
        return self.triple(label)[1]

    def nu(self, label: str) -> Fraction:
        return self.triple(label)[2]

    def rows(self) -> list[tuple[str, Triple]]:
        """``(label, (mu, sigma, nu))`` pairs in universe order."""
        return [(u, self.triple(u)) for u in self.universe]

    def as_dict(self) -> dict[str, Triple]:
        return dict(self.rows())

    @property
    def denominator(self) -> int:
        return self._den

    def is_empty(self) -> bool:
        """True iff this is the neutrosophic empty set (all rows (0, 0, 1))."""
        return not any(self._vec)

    def is_absolute(self) -> bool:
        d = self._den
        return all(x == d for x in self._vec)

    # -- algebra ------------------------------------------------------------

    def _aligned(self, other: "SVNSet"):
        if self.universe is not other.universe and self.universe != other.universe:
            raise UniverseMismatch("operands live over different universes")
        a, b = self._den, other._den
        if a == b:
            return a, self._vec, other._vec
        den = math.lcm(a, b)
        fa, fb = den // a, den // b
        return den, tuple(v * fa for v in self._vec), tuple(v * fb for v in other._vec)

    def __le__(self, other: "SVNSet") -> bool:
        if self._den == other._den and self.universe is other.universe:
            return all(map(le, self._vec, other._vec))
        _, a, b = self._aligned(other)
        return all(map(le, a, b))

    def __ge__(self, other: "SVNSet") -> bool:
        return other.__le__(self)

    def __and__(self, other: "SVNSet") -> "SVNSet":
        if self._den == other._den and self.universe is other.universe:
            return SVNSet._from_vec(self.universe, self._den, tuple(map(min, self._vec, other._vec)))
        den, a, b = self._aligned(other)
        return SVNSet._from_vec(self.universe, den, tuple(map(min, a, b)))

    def __or__(self, other: "SVNSet") -> "SVNSet":
        if self._den == other._den and self.universe is other.universe:
            return SVNSet._from_vec(self.universe, self._den, tuple(map(max, self._vec, other._vec)))
        den, a, b = self._aligned(other)
        return SVNSet._from_vec(self.universe, den, tuple(map(max, a, b)))

    def __invert__(self) -> "SVNSet":
        # (mu, sigma, nu) -> (nu, 1 - sigma, mu) is d minus the reversed stored triple;
        # gcd(d, x) == gcd(d, d - x), so the result is already normalised
        d, v = self._den, self._vec
        out = []
        for i in range(0, len(v), 3):
            out += (d - v[i + 2], d - v[i + 1], d - v[i])
        obj = SVNSet.__new__(SVNSet)
        obj._set(self.universe, d, tuple(out))
        return obj

    def complement(self) -> "SVNSet":
        return ~self

    def __eq__(self, other) -> bool:
        if not isinstance(other, SVNSet):
            return NotImplemented
        return self._den == other._den and self._vec == other._vec and self.universe == other.universe

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.universe, self._den, self._vec))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{u}=({m}, {s}, {n})" for u, (m, s, n) in self.rows())
        return f"SVNSet({body})"


class Family:
    """A nonempty finite family of SVNSets over one universe.

    Members are deduplicated on construction, keeping first occurrences in
    order. Two families compare equal when they have the same members,
    regardless of order.
    """

    # _facts memoises derived properties (such as being a filter base); families are immutable
    __slots__ = ("members", "_frozen", "_facts")

    def __init__(self, members: Iterable[SVNSet]):
        members = tuple(dict.fromkeys(members))
        if not members:
            raise EmptyFamily("a family needs at least one member")
        universe = members[0].universe
        for m in members[1:]:
            if m.universe is not universe and m.universe != universe:
                raise UniverseMismatch("family members live over different universes")
        self.members = members
        self._frozen = frozenset(members)
        self._facts = {}

    @property
    def universe(self) -> Universe:
        return self.members[0].universe

    def __iter__(self) -> Iterator[SVNSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return item in self._frozen

    def __getitem__(self, i):
        return self.members[i]

    def issubset(self, other: "Family") -> bool:
        return self._frozen <= other._frozen

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self._frozen == other._frozen

    def __hash__(self) -> int:
        return hash(self._frozen)

    def __repr__(self) -> str:
        return f"Family({list(self.members)!r})"


def _as_family(family) -> Family:
    return family if isinstance(family, Family) else Family(family)


def mk_constant(universe: Universe, r_mu: GradeLike, r_sigma: GradeLike, r_nu: GradeLike) -> SVNSet:
    """The SVNSet assigning the same triple to every element."""
    triple = (to_grade(r_mu), to_grade(r_sigma), to_grade(r_nu))
    return SVNSet(universe, [triple] * len(universe))


def empty(universe: Universe) -> SVNSet:
    """The neutrosophic empty set, constant (0, 0, 1)."""
    return SVNSet._raw(universe, 1, (0,) * len(universe), (0,) * len(universe), (1,) * len(universe))


def absolute(universe: Universe) -> SVNSet:
    """The neutrosophic absolute set, constant (1, 1, 0)."""
    return SVNSet._raw(universe, 1, (1,) * len(universe), (1,) * len(universe), (0,) * len(universe))


def is_subset(a: SVNSet, b: SVNSet) -> bool:
    return a <= b


def equals(a: SVNSet, b: SVNSet) -> bool:
    if a.universe != b.universe:
        raise UniverseMismatch("operands live over different universes")
    return a == b


def complement(a: SVNSet) -> SVNSet:
    return ~a


def intersection(family) -> SVNSet:
    """Pointwise (min mu, min sigma, max nu) over a nonempty family."""
    members = _as_family(family).members
    result = members[0]
    for m in members[1:]:
        result = result & m
    return result


def union(family) -> SVNSet:
    """Pointwise (max mu, max sigma, min nu) over a nonempty family."""
    members = _as_family(family).members
    result = members[0]
    for m in members[1:]:
        result = result | m
    return result


def meets(a: SVNSet, b: SVNSet) -> bool:
    """True iff the intersection of ``a`` and ``b`` is not the empty set."""
    return not (a & b).is_empty()


def family_meets(fa, fb) -> bool:
    """True iff every member of ``fa`` meets every member of ``fb``."""
    fa, fb = _as_family(fa), _as_family(fb)
    if fa.universe != fb.universe:
        raise UniverseMismatch("families live over different universes")
    return all(meets(a, b) for a in fa for b in fb)
