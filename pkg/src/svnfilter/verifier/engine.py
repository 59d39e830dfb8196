"""Exhaustive-then-random search for counterexamples, shrinking and replay."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from ..core import Family, SVNSet, Universe
from ..errors import BudgetExceeded, SVNError
from ..lattice import GradeLattice, point_count
from ..maps import ImageConvention
from .pools import KINDS, Context, pools, universe_of
from .registry import Claim, get_claim
from .tables import kernel_for, run_kernel, table_size
from .witness import decode_instance, encode_instance

VERIFIED, FALSIFIED, BUDGET_EXCEEDED = "verified", "falsified", "budget-exceeded"
STATUS_LABELS = {
    VERIFIED: "no counterexample within budget",
    FALSIFIED: "falsified",
    BUDGET_EXCEEDED: "budget exceeded",
}
BOTH = "both"
COARSENING = (1, 2, 3, 4, 5, 10)


@dataclass(frozen=True)
class SearchConfig:
    """Search budget. ``convention`` is an image convention value or ``"both"``.

    Exhaustive contexts whose instance count exceeds ``exhaustive_cap`` are
    skipped (and reported). Claims with an operation-table kernel are instead
    searched through tables whenever ``tabulate`` is set and the lattice has at
    most ``table_points_cap`` points; they are capped at ``tabulated_cap``
    instances. Lattice-materialising claims only search lattices with at most
    ``lattice_points_cap`` points and draw ``lattice_samples`` random instances
    instead of ``random_samples``.
    """

    universe_sizes: tuple[int, ...] = (1, 2)
    granularities: tuple[int, ...] = (1, 2)
    random_samples: int = 10_000
    seed: int = 0
    convention: str = BOTH
    exhaustive_cap: int = 300_000
    tabulate: bool = True
    table_points_cap: int = 729
    tabulated_cap: int = 3_000_000_000
    lattice_points_cap: int = 64
    lattice_samples: int = 200
    shrink_steps: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "universe_sizes", tuple(sorted(set(self.universe_sizes))))
        object.__setattr__(self, "granularities", tuple(sorted(set(self.granularities))))
        if not self.universe_sizes or min(self.universe_sizes) < 1:
            raise ValueError("universe sizes must be positive")
        if not self.granularities or min(self.granularities) < 1:
            raise ValueError("granularities must be positive")
        if self.convention != BOTH:
            object.__setattr__(self, "convention", ImageConvention.parse(self.convention).value)

    @property
    def conventions(self) -> list[ImageConvention]:
        if self.convention == BOTH:
            return list(ImageConvention)
        return [ImageConvention(self.convention)]


@dataclass(frozen=True)
class Verdict:
    tag: str
    group: str
    stance: str
    status: str
    budget: int
    convention: str | None = None
    witness: dict | None = None
    coverage: tuple[str, ...] = field(default_factory=tuple)

    @property
    def label(self) -> str:
        return STATUS_LABELS[self.status]

    def to_record(self) -> dict:
        return {
            "tag": self.tag,
            "group": self.group,
            "stance": self.stance,
            "status": self.status,
            "budget": self.budget,
            "convention": self.convention,
            "witness": self.witness,
            "coverage": list(self.coverage),
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Verdict":
        return cls(rec["tag"], rec["group"], rec["stance"], rec["status"], rec["budget"],
                   rec.get("convention"), rec.get("witness"), tuple(rec.get("coverage", ())))


def _kinds(claim: Claim):
    return [KINDS[kind] for _, kind in claim.slots]


def _is_lattice(claim: Claim) -> bool:
    return any(k.lattice for k in _kinds(claim))


def _contexts(claim: Claim, cfg: SearchConfig) -> list[Context]:
    kinds = _kinds(claim)
    if not kinds:
        return []
    if all(k.fixed_universe for k in kinds):
        return [Context(3, k) for k in cfg.granularities]
    sizes, grans = cfg.universe_sizes, cfg.granularities
    if any(k.needs_map for k in kinds):
        return [Context(n, k, m) for n in sizes for m in sizes for k in grans]
    return [Context(n, k) for n in sizes for k in grans]


def _lattice_ok(claim, cfg, ctx) -> bool:
    cap = claim.lattice_points_cap or cfg.lattice_points_cap
    cap = min(cap, cfg.lattice_points_cap)
    return point_count(universe_of(ctx.n), GradeLattice(ctx.k)) <= cap


def _instances(slots, p):
    def rec(i, acc):
        if i == len(slots):
            yield dict(acc)
            return
        names, kind = slots[i]
        keys = names.split(",")
        for value in KINDS[kind].iterate(p):
            if len(keys) > 1:
                acc.update(zip(keys, value))
            else:
                acc[names] = value
            yield from rec(i + 1, acc)

    return rec(0, {})


def _draw(slots, rng, p) -> dict:
    out = {}
    for names, kind in slots:
        value = KINDS[kind].draw(rng, p)
        keys = names.split(",")
        if len(keys) > 1:
            out.update(zip(keys, value))
        else:
            out[names] = value
    return out


def _call(claim: Claim, instance: dict, conv) -> bool:
    if claim.image_dependent:
        return claim.holds(**instance, conv=conv)
    return claim.holds(**instance)


def _violates(claim, instance, conv) -> bool:
    try:
        return not _call(claim, instance, conv)
    except (SVNError, ValueError, KeyError):
        return False


# ---------------------------------------------------------------- shrinking

def _map_sets(value, fn):
    if isinstance(value, SVNSet):
        return fn(value)
    if isinstance(value, Family):
        return Family(fn(m) for m in value)
    return value


def _restrictable(instance) -> bool:
    return all(isinstance(v, (SVNSet, Family)) for v in instance.values())


def _restrict(a: SVNSet, universe: Universe) -> SVNSet:
    return SVNSet(universe, {u: a.triple(u) for u in universe})


def _coarsen(a: SVNSet, k: int) -> SVNSet:
    return SVNSet(a.universe, [tuple(Fraction(round(g * k), k) for g in a.triple(u)) for u in a.universe])


def _with_grade(a: SVNSet, label: str, coord: int, grade) -> SVNSet:
    rows = a.as_dict()
    triple = list(rows[label])
    triple[coord] = Fraction(grade)
    rows[label] = tuple(triple)
    return SVNSet(a.universe, rows)


def _sites(instance):
    """(slot, member index or None) for every set occurring in the instance."""
    for name, v in instance.items():
        if isinstance(v, SVNSet):
            yield name, None
        elif isinstance(v, Family):
            for i in range(len(v)):
                yield name, i


def _replace(instance, name, idx, new):
    out = dict(instance)
    v = instance[name]
    if idx is None:
        out[name] = new
    else:
        members = list(v.members)
        members[idx] = new
        out[name] = Family(members)
    return out


def _get(instance, name, idx):
    v = instance[name]
    return v if idx is None else v.members[idx]


def _candidates(instance):
    """Simpler variants of ``instance``, most aggressive first."""
    if _restrictable(instance):
        universes = {v.universe for v in instance.values()}
        if len(universes) == 1:
            (u,) = universes
            if len(u) > 1:
                for drop in u:
                    smaller = Universe(x for x in u if x != drop)
                    yield {n: _map_sets(v, lambda a: _restrict(a, smaller)) for n, v in instance.items()}
    for name, v in instance.items():
        if isinstance(v, Family) and len(v) > 1:
            for i in range(len(v)):
                yield {**instance, name: Family(m for j, m in enumerate(v.members) if j != i)}
    for k in COARSENING:
        coarse = {n: _map_sets(v, lambda a: _coarsen(a, k)) for n, v in instance.items()}
        if coarse != instance:
            yield coarse
    for name, idx in list(_sites(instance)):
        a = _get(instance, name, idx)
        for label in a.universe:
            for coord, g in enumerate(a.triple(label)):
                for target in (0, 1):
                    if g != target:
                        yield _replace(instance, name, idx, _with_grade(a, label, coord, target))


def shrink(claim: Claim, instance: dict, conv=None, max_steps: int = 1000) -> dict:
    """Greedy deterministic shrinking: universe, family size, granularity, then single grades."""
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for cand in _candidates(instance):
            steps += 1
            if _violates(claim, cand, conv):
                instance = cand
                improved = True
                break
            if steps >= max_steps:
                break
    return instance


# ---------------------------------------------------------------- search

def _resolve(prop) -> Claim:
    return prop if isinstance(prop, Claim) else get_claim(prop)


def check(prop, cfg: SearchConfig = SearchConfig(), convention=None) -> Verdict:
    """Search for a counterexample to one claim under one image convention.

    ``convention`` defaults to the first convention of ``cfg``; it is ignored
    for claims that do not involve images.
    """
    claim = _resolve(prop)
    if claim.image_dependent:
        conv = ImageConvention.parse(convention) if convention is not None else cfg.conventions[0]
    else:
        conv = None
    conv_name = conv.value if conv else None
    coverage: list[str] = []
    budget = 0

    def falsified(instance, where):
        small = shrink(claim, instance, conv, cfg.shrink_steps) if where != "fixed" else instance
        witness = {"found_in": where, "instance": encode_instance(small)}
        return Verdict(claim.tag, claim.group, claim.stance, FALSIFIED, budget, conv_name, witness, tuple(coverage))

    if claim.fixed is not None:
        for instance in claim.fixed():
            budget += 1
            if not _call(claim, instance, conv):
                coverage.append(f"fixed: {budget}")
                return falsified(instance, "fixed")
        coverage.append(f"fixed: {budget}")

    searchable = []
    for ctx in _contexts(claim, cfg):
        if _is_lattice(claim) and not _lattice_ok(claim, cfg, ctx):
            coverage.append(f"skipped {ctx.label()}: lattice too large")
            continue
        searchable.append(ctx)
        p = pools(ctx)
        count = prod(KINDS[kind].count(p) for _, kind in claim.slots)
        kern = kernel_for(claim.tag) if cfg.tabulate else None
        if kern is not None and table_size(ctx) <= cfg.table_points_cap:
            if count > cfg.tabulated_cap:
                coverage.append(f"skipped {ctx.label()}: {count} instances over cap")
                continue
            hit = run_kernel(kern, ctx, conv)
            if hit is None:
                budget += count
                coverage.append(f"exhaustive {ctx.label()}: {count}")
                continue
            seen, instance = hit
            budget += seen
            if _call(claim, instance, conv):
                raise AssertionError(f"table kernel for {claim.tag!r} disagrees with its predicate")
            coverage.append(f"exhaustive {ctx.label()}: {seen}")
            return falsified(instance, f"exhaustive {ctx.label()}")
        if count > cfg.exhaustive_cap:
            coverage.append(f"skipped {ctx.label()}: {count} instances over cap")
            continue
        seen = 0
        for instance in _instances(claim.slots, p):
            seen += 1
            budget += 1
            if not _call(claim, instance, conv):
                coverage.append(f"exhaustive {ctx.label()}: {seen}")
                return falsified(instance, f"exhaustive {ctx.label()}")
        coverage.append(f"exhaustive {ctx.label()}: {seen}")

    samples = cfg.lattice_samples if _is_lattice(claim) else cfg.random_samples
    if claim.slots and searchable and samples > 0:
        rng = random.Random(f"{cfg.seed}:{claim.tag}:{conv_name}")
        if _is_lattice(claim) or all(k.fixed_universe for k in _kinds(claim)):
            random_ctxs = searchable
        else:
            random_ctxs = sorted({Context(c.n, cfg.granularities[0], c.m) for c in searchable},
                                 key=lambda c: (c.n, c.m or 0))
        for i in range(1, samples + 1):
            p = pools(rng.choice(random_ctxs))
            instance = _draw(claim.slots, rng, p)
            budget += 1
            if not _call(claim, instance, conv):
                coverage.append(f"random: {i}")
                return falsified(instance, "random")
        coverage.append(f"random: {samples}")

    if budget == 0:
        raise BudgetExceeded(f"no configured search space fits the budget for {claim.tag!r}")
    return Verdict(claim.tag, claim.group, claim.stance, VERIFIED, budget, conv_name, None, tuple(coverage))


def check_all(prop, cfg: SearchConfig = SearchConfig()) -> list[Verdict]:
    """One verdict per configured convention for image claims, a single verdict otherwise."""
    claim = _resolve(prop)
    if not claim.image_dependent:
        return [check(claim, cfg)]
    return [check(claim, cfg, c) for c in cfg.conventions]


def replay(verdict) -> bool:
    """True iff the verdict's witness still violates its claim through the public operations."""
    if isinstance(verdict, dict):
        verdict = Verdict.from_record(verdict)
    if verdict.witness is None:
        return False
    claim = get_claim(verdict.tag)
    instance = decode_instance(verdict.witness["instance"])
    conv = ImageConvention(verdict.convention) if verdict.convention else None
    return not _call(claim, instance, conv)
