"""Acceptance criteria, one group per criterion; the summary prints one line per criterion."""

import json
import random
import subprocess
import sys
import time
from dataclasses import replace
from fractions import Fraction as Fr
from itertools import combinations

import numpy as np
import pytest
from conftest import WORKSPACES

from svnfilter import (
    Family,
    GradeLattice,
    NotMeeting,
    SVNSet,
    Universe,
    adjoin,
    complement,
    contains,
    empty,
    enumerate_points,
    equivalent,
    extend_to_ultrafilter,
    dichotomy_holds,
    filter_leq,
    generated_filter,
    has_fip,
    image,
    inverse_image,
    is_filter_base,
    is_ultrafilter_in_lattice,
    join,
    load_workspace,
    meet,
    mk_filter,
    principal,
    principal_generator,
    serialize,
    star_closure,
    upward_closure,
    ImageConvention,
)
from svnfilter import worked_examples as ex
from svnfilter.cli import FAILED, INPUT_ERROR, OK, main
from svnfilter.verifier import FALSIFIED, VERIFIED, SearchConfig, all_claims, load_expectations, replay, run_suite
from svnfilter.verifier.pools import random_base, random_set, random_subbase

c1, c2, c3, c4, c5, c6, c7 = (pytest.mark.criterion(n) for n in range(1, 8))


def rows(universe, table):
    return SVNSet(universe, {u: tuple(Fr(g) for g in t.split()) for u, t in table.items()})


# ---------------------------------------------------------------- 1: tables

AB = Universe(["a", "b"])
ABC = ex.ABC
GREEK = Universe(["alpha", "beta", "gamma", "delta"])
W_TABLE = rows(ABC, {"a": "0.4 0.3 0.3", "b": "0.8 0.2 0.2", "c": "0.2 0.6 0.5"})


@c1
def test_c1_incomparable_pair():
    a, b = ex.incomparable_pair()
    assert (a <= b, b <= a) == (False, False)


@c1
def test_c1_intersection_with_complement_table():
    a, *_ = ex.complement_example()
    assert a & complement(a) == rows(AB, {"a": "0.2 0.4 0.8", "b": "0 0.5 1"})


@c1
def test_c1_union_with_complement_table():
    a, *_ = ex.complement_example()
    assert a | complement(a) == rows(AB, {"a": "0.8 0.6 0.2", "b": "1 0.5 0"})


@c1
def test_c1_image_table_under_fiber_infima():
    f, a, *_ = ex.image_example()
    want = rows(GREEK, {"alpha": "0.6 0.2 0.3", "beta": "0.4 0.2 0.7", "gamma": "0 0 1", "delta": "0 0 1"})
    assert image(f, a, ImageConvention.PAPER_INF) == want


@c1
def test_c1_inverse_image_table():
    f, _, b, *_ = ex.image_example()
    assert inverse_image(f, b) == rows(ABC, {"a": "0.5 0.3 0.1", "b": "0.1 0.7 0.9", "c": "0.5 0.3 0.1"})


@c1
def test_c1_w_is_the_intersection_of_f_and_g():
    f, g, *_ = ex.filter_base_example()
    assert f & g == W_TABLE


@c1
def test_c1_family_is_a_filter_base():
    f, g, h, top, _ = ex.filter_base_example()
    assert is_filter_base([f, g, h, top]) is True


@c1
def test_c1_w_is_not_a_member_of_the_family():
    f, g, h, top, _ = ex.filter_base_example()
    assert W_TABLE not in Family([f, g, h, top]).members


@c1
def test_c1_principal_example_subsets():
    a, b, c, _ = ex.principal_example()
    assert a <= b and a <= c


@c1
def test_c1_z_outside_principal_filter():
    a, *_, z = ex.principal_example()
    assert not contains(principal(a), z)


@c1
def test_c1_z_complement_outside_principal_filter():
    a, *_, z = ex.principal_example()
    assert not contains(principal(a), complement(z))


@c1
def test_c1_runtime():
    start = time.perf_counter()
    for fn in (test_c1_incomparable_pair, test_c1_intersection_with_complement_table,
               test_c1_union_with_complement_table, test_c1_image_table_under_fiber_infima,
               test_c1_inverse_image_table, test_c1_w_is_not_a_member_of_the_family,
               test_c1_principal_example_subsets, test_c1_z_outside_principal_filter):
        fn()
    assert time.perf_counter() - start < 1.0


# ---------------------------------------------------------------- 2: lattice laws

LATTICE_LAWS = [
    "union-identity-laws", "intersection-identity-laws", "empty-absolute-bounds", "complement-involution",
    "commutativity", "associativity", "subset-partial-order", "subset-characterization", "absorption",
    "monotonicity", "generalized-inclusion", "distributive-generalized", "demorgan-generalized",
    "complement-antitone", "inverse-image-empty", "inverse-image-absolute", "inverse-image-commutes-complement",
    "inverse-image-monotone", "inverse-image-union-commutes", "inverse-image-intersection-commutes",
]


def _contexts_of(verdict):
    return [c.split(":")[0] for c in verdict.coverage]


@c2
@pytest.mark.parametrize("tag", LATTICE_LAWS)
def test_c2_law_verified_exhaustively_and_at_random(default_report, tag):
    (v,) = default_report.by_tag()[tag]
    assert v.status == VERIFIED, v.witness
    ctxs = _contexts_of(v)
    assert not [c for c in v.coverage if c.startswith("skipped")], v.coverage
    sizes = {(part.split()[1], part.split()[-1]) for part in ctxs if part.startswith("exhaustive")}
    assert {("n=1", "k=1"), ("n=1", "k=2"), ("n=2", "k=1"), ("n=2", "k=2")} <= sizes
    assert "random: 10000" in v.coverage


@c2
def test_c2_runtime(default_report):
    assert sum(default_report.seconds[t] for t in LATTICE_LAWS) < 300


# ---------------------------------------------------------------- 3: filter construction

U1 = Universe(["u1"])
G2 = GradeLattice(2)


class Small:
    """Every family of at most three generators from the |U|=1, k=2 lattice, with memoised lookups."""

    def __init__(self):
        self.points = list(enumerate_points(U1, G2))
        self.index = {p: i for i, p in enumerate(self.points)}
        fams = [Family(c) for r in (1, 2, 3) for c in combinations(self.points, r)]
        self.bases = [f for f in fams if is_filter_base(f)]
        self.subbases = [f for f in fams if has_fip(f)]
        self.filters = [mk_filter(b) for b in self.bases]
        self.member = np.array([[contains(f, p) for p in self.points] for f in self.filters])


@pytest.fixture(scope="module")
def small():
    return Small()


def _completion_ok(filt, probes):
    if contains(filt, empty(filt.universe)):
        return False
    inside = [p for p in probes if contains(filt, p)]
    return (all(contains(filt, x & y) for x in inside for y in inside)
            and all(contains(filt, y) for x in inside for y in probes if x <= y))


def _random_bases(n=1000, seed=0):
    rng = random.Random(seed)
    universes = [Universe(["a"]), Universe(["a", "b"]), ABC]
    return [(u := rng.choice(universes), random_base(rng, u), rng) for _ in range(n)]


@c3
def test_c3_subbase_chain(small):
    for s in small.subbases:
        star = star_closure(s)
        assert is_filter_base(star) and s.issubset(star), s
    rng = random.Random(1)
    for _ in range(1000):
        s = random_subbase(rng, rng.choice([U1, AB, ABC]))
        star = star_closure(s)
        assert is_filter_base(star) and s.issubset(star)


@c3
def test_c3_completion_characterization(small):
    pts = small.points
    for filt in small.filters:
        assert _completion_ok(filt, pts), filt.base
    for u, base, rng in _random_bases():
        filt = mk_filter(base)
        probes = list(base) + [m | random_set(rng, u) for m in base] + [random_set(rng, u) for _ in range(8)]
        assert _completion_ok(filt, probes), base


@c3
def test_c3_base_inclusion(small):
    for filt in small.filters:
        assert all(contains(filt, m) for m in filt.base)
    for _, base, _ in _random_bases():
        assert all(contains(mk_filter(base), m) for m in base)


@c3
def test_c3_monotone_completion(small):
    for big in small.bases:
        for r in range(1, len(big) + 1):
            for sub in combinations(big.members, r):
                if is_filter_base(sub):
                    assert filter_leq(mk_filter(sub), mk_filter(big)), (sub, big)
    for _, base, _ in _random_bases():
        for m in base:
            sub = [x for x in base if x != m] or [m]
            if is_filter_base(sub):
                assert filter_leq(mk_filter(sub), mk_filter(base))


@c3
def test_c3_coarsest_generated_filter(small):
    index = small.index
    checked = 0
    for s in small.subbases:
        gen = generated_filter(s)
        cols = [index[m] for m in s]
        for h in np.flatnonzero(small.member[:, cols].all(axis=1)):
            assert filter_leq(gen, small.filters[h]), (s, small.bases[h])
            checked += 1
    assert checked > 0
    for u, base, rng in _random_bases():
        s = Family(rng.choice(base.members) | random_set(rng, u) for _ in range(rng.randint(1, 3)))
        assert filter_leq(generated_filter(s), mk_filter(base))


@c3
def test_c3_finite_base_principal(small):
    for b in small.bases:
        assert equivalent(b, [principal_generator(mk_filter(b))])
    for _, base, _ in _random_bases():
        assert equivalent(base, [principal_generator(mk_filter(base))])


def _meet_join_ok(fa, fb):
    ff, gg = mk_filter(fa), mk_filter(fb)
    m = mk_filter(meet(fa, fb))
    if not (filter_leq(m, ff) and filter_leq(m, gg)):
        return False
    try:
        j = mk_filter(join(fa, fb))
    except NotMeeting:
        return True
    return filter_leq(ff, j) and filter_leq(gg, j)


@c3
def test_c3_meet_and_join_bounds(small):
    bases = small.bases
    for fa in bases:
        for fb in bases:
            assert _meet_join_ok(fa, fb), (fa, fb)
    pool = _random_bases()
    for (ua, fa, _), (ub, fb, _) in zip(pool, pool[1:]):
        if ua == ub:
            assert _meet_join_ok(fa, fb)


@c3
def test_c3_adjoin_bound(small):
    for b, filt in zip(small.bases, small.filters):
        for a in small.points:
            try:
                adj = mk_filter(adjoin(b, a))
            except NotMeeting:
                continue
            assert filter_leq(filt, adj), (b, a)
    for u, base, rng in _random_bases():
        a = base.members[0] | random_set(rng, u)
        try:
            adj = mk_filter(adjoin(base, a))
        except NotMeeting:
            continue
        assert filter_leq(mk_filter(base), adj)


# ---------------------------------------------------------------- 4: intensional vs extensional

def _small_bases(universe, k):
    points = list(enumerate_points(universe, GradeLattice(k)))
    bases = [Family(c) for r in (1, 2) for c in combinations(points, r) if is_filter_base(c)]
    return points, bases


@c4
@pytest.mark.parametrize("n,k", [(2, 1), (1, 2)])
def test_c4_membership_and_order_agree_with_closures(n, k):
    start = time.perf_counter()
    universe = Universe([f"u{i}" for i in range(1, n + 1)])
    points, bases = _small_bases(universe, k)
    lattice = GradeLattice(k)
    closures = [frozenset(upward_closure(b, universe, lattice)) for b in bases]
    filters = [mk_filter(b) for b in bases]
    disagreements = 0
    for filt, closure in zip(filters, closures):
        disagreements += sum(contains(filt, p) != (p in closure) for p in points)
    for fa, ca in zip(filters, closures):
        for fb, cb in zip(filters, closures):
            disagreements += filter_leq(fa, fb) != (ca <= cb)
    assert disagreements == 0
    assert time.perf_counter() - start < 60


# ---------------------------------------------------------------- 5: ultrafilters

@c5
def test_c5_extension_and_decision_procedures():
    start = time.perf_counter()
    dichotomy = []
    for k in (1, 2):
        lattice = GradeLattice(k)
        for p in enumerate_points(U1, lattice):
            if p.is_empty():
                continue
            filt = upward_closure([p], U1, lattice)
            ultra = extend_to_ultrafilter(filt)
            assert filt.issubset(ultra)
            for fam in (filt, ultra):
                assert is_ultrafilter_in_lattice(fam, "direct") == is_ultrafilter_in_lattice(fam, "meeting")
            assert is_ultrafilter_in_lattice(ultra)
            dichotomy.append(dichotomy_holds(ultra))
    recorded = load_expectations()["ultrafilter-dichotomy"]
    assert recorded == (VERIFIED if all(dichotomy) else FALSIFIED)
    assert time.perf_counter() - start < 120


# ---------------------------------------------------------------- 6: claims under test

def _under_test():
    keys = {}
    for c in all_claims():
        convs = [v.value for v in ImageConvention] if c.image_dependent else [None]
        for conv in convs:
            if conv not in c.expected:
                keys[f"{c.tag}@{conv}" if conv else c.tag] = c.tag
    return keys


@c6
def test_c6_default_statuses_match_expectations(default_report):
    expected = load_expectations()
    got = default_report.statuses()
    assert {k: got[k] for k in _under_test()} == {k: expected[k] for k in _under_test()}


@c6
@pytest.mark.parametrize("seed", [1, 2])
def test_c6_statuses_stable_across_seeds(seed):
    keys = _under_test()
    report = run_suite(replace(SearchConfig(), seed=seed), sorted(set(keys.values())))
    expected = load_expectations()
    statuses = report.statuses()
    assert {k: statuses[k] for k in keys} == {k: expected[k] for k in keys}
    for v in report.verdicts:
        if v.status == FALSIFIED:
            assert replay(v), v.tag


@c6
def test_c6_every_default_witness_replays(default_report):
    for v in default_report.verdicts:
        if v.status == FALSIFIED:
            assert replay(v), v.tag


# ---------------------------------------------------------------- 7: CLI

SHIPPED = sorted(WORKSPACES.glob("*.json"))


@c7
@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.name)
def test_c7_workspace_round_trip(path):
    assert serialize(load_workspace(path)) == path.read_text(encoding="utf-8")


@c7
@pytest.mark.parametrize("argv,code", [
    (["eval", "incomparable.json", "A <= B"], OK),
    (["check-base", "filter_base.json", "BF"], OK),
    (["check-base", "filter_base.json", "Family"], FAILED),
    (["verify", "intersection-with-complement-empty", "--samples", "10"], FAILED),
    (["eval", "filter_base.json", "F & G | H"], INPUT_ERROR),
    (["render", "missing.json"], INPUT_ERROR),
    (["verify", "no-such-claim"], INPUT_ERROR),
])
def test_c7_exit_codes(capsys, argv, code):
    argv = [str(WORKSPACES / a) if a.endswith(".json") else a for a in argv]
    assert main(argv) == code
    capsys.readouterr()


@c7
def test_c7_verify_reports_are_byte_identical(tmp_path):
    argv = ["verify", "image-union-commutes", "star-equals-base-remark", "ultrafilter-dichotomy",
            "--samples", "200", "--seed", "11", "--kmax", "1", "--format", "jsonl"]
    outputs = []
    for name in ("one", "two"):
        target = tmp_path / f"{name}.jsonl"
        proc = subprocess.run([sys.executable, "-m", "svnfilter", *argv, "--output", str(target)],
                              capture_output=True, text=True)
        assert proc.returncode == FAILED, proc.stderr
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]
    assert all(json.loads(line)["tag"] for line in outputs[0].decode().splitlines())
