"""Operation tables for a finite context and claim kernels evaluated on them.

A table stores the result of a public operation (``&``, ``|``, ``~``, ``<=``,
images and inverse images) for every point of a grade lattice, addressed by
point index. A kernel evaluates one claim on every instance of a context at
once by reading these tables, so large exhaustive pools become affordable.
Kernels visit instances in exactly the order of the plain enumeration and
report the rank of the first violation. A tabulated search therefore
returns the same verdict, budget and witness as a plain one.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Callable, Iterator

import numpy as np

from ..core import Family, SVNSet
from ..maps import ImageConvention, image, inverse_image
from ..lattice import GradeLattice, _cached_space
from .pools import Context, pools, universe_of

KERNELS: dict[str, Callable] = {}


def kernel(tag: str):
    def deco(fn):
        KERNELS[tag] = fn
        return fn

    return deco


def kernel_for(tag: str):
    return KERNELS.get(tag)


class SetTables:
    """Meet, join, complement and order of one list of points."""

    def __init__(self, points: list[SVNSet]):
        self.points = points
        self.size = n = len(points)
        index = {a: i for i, a in enumerate(points)}
        self.index = index
        self.meet = np.array([[index[a & b] for b in points] for a in points], dtype=np.int32).reshape(n, n)
        self.join = np.array([[index[a | b] for b in points] for a in points], dtype=np.int32).reshape(n, n)
        self.le = np.array([[a <= b for b in points] for a in points], dtype=bool).reshape(n, n)
        self.comp = np.array([index[~a] for a in points], dtype=np.int32)
        self.ids = np.arange(n, dtype=np.int32)

    @cached_property
    def pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """Ordered pairs a <= b, in the order of the ``le_pair`` pool."""
        lo, hi = np.nonzero(self.le)
        return lo.astype(np.int32), hi.astype(np.int32)

    @cached_property
    def families(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Families of one or two points as (first, second, is_single), in pool order."""
        i, j = np.triu_indices(self.size, 1)
        first = np.concatenate([self.ids, i.astype(np.int32)])
        second = np.concatenate([self.ids, j.astype(np.int32)])
        single = np.zeros(len(first), dtype=bool)
        single[: self.size] = True
        return first, second, single

    def union(self, x, y, single):
        """Index of the union of a one- or two-member family with member indices x, y."""
        return np.where(single, x, self.join[x, y])

    def intersection(self, x, y, single):
        return np.where(single, x, self.meet[x, y])

    def family(self, r: int) -> Family:
        first, second, single = self.families
        pts = self.points
        if single[r]:
            return Family([pts[first[r]]])
        return Family([pts[first[r]], pts[second[r]]])


@lru_cache(maxsize=16)
def _set_tables(n: int, k: int, prefix: str) -> SetTables:
    space = _cached_space(universe_of(n, prefix), GradeLattice(k))
    return SetTables([space.to_set(i) for i in range(space.size)])


class Tables:
    """Everything a kernel may read for one context."""

    def __init__(self, ctx: Context):
        self.ctx = ctx
        self.p = pools(ctx)

    @cached_property
    def src(self) -> SetTables:
        return _set_tables(self.ctx.n, self.ctx.k, "u")

    @cached_property
    def tgt(self) -> SetTables:
        return _set_tables(self.ctx.m, self.ctx.k, "v")

    @cached_property
    def maps(self):
        return self.p.maps

    @cached_property
    def pre(self) -> np.ndarray:
        """pre[f, b]: index of the inverse image of target point b under map f."""
        src, tgt = self.src, self.tgt
        return np.array([[src.index[inverse_image(f, b)] for b in tgt.points] for f in self.maps], dtype=np.int32)

    @lru_cache(maxsize=2)
    def img(self, conv: ImageConvention) -> np.ndarray:
        src, tgt = self.src, self.tgt
        return np.array([[tgt.index[image(f, a, conv)] for a in src.points] for f in self.maps], dtype=np.int32)

    @cached_property
    def injective(self) -> np.ndarray:
        return np.array([f.is_injective for f in self.maps])

    @cached_property
    def surjective(self) -> np.ndarray:
        return np.array([f.is_surjective for f in self.maps])


@lru_cache(maxsize=16)
def tables(ctx: Context) -> Tables:
    return Tables(ctx)


def table_size(ctx: Context) -> int:
    p = pools(ctx)
    return max(p.space.size, (ctx.k + 1) ** (3 * ctx.m) if ctx.m else 0)


def first_violation(blocks: Iterator) -> tuple[int, dict] | None:
    """(1-based rank, instance) of the first violating instance, or None.

    A block is either ``(bad, decode)``, a boolean array over consecutive
    instances and a function from position to instance, or
    ``(size, hit)`` with ``hit`` None or a (position, instance) pair.
    """
    offset = 0
    for head, tail in blocks:
        if isinstance(head, np.ndarray):
            flat = head.ravel()
            size = flat.size
            hit = (int(np.argmax(flat)), None) if flat.any() else None
            if hit:
                hit = (hit[0], tail(hit[0]))
        else:
            size, hit = head, tail
        if hit is not None:
            return offset + hit[0] + 1, hit[1]
        offset += size
    return None


def run_kernel(fn, ctx: Context, conv) -> tuple[int, dict] | None:
    return first_violation(fn(tables(ctx), conv))


# ---------------------------------------------------------------- set algebra

@kernel("subset-partial-order")
def _(t: Tables, conv):
    s = t.src
    n, le = s.size, s.le
    for a in range(n):
        same = s.ids == a
        anti = same == (le[a] & le[:, a])
        trans = ~(le[a][:, None] & le) | le[a][None, :]
        ok = le[a, a] & anti[:, None] & trans
        yield ~ok, lambda r, a=a: {"A": s.points[a], "B": s.points[r // n], "C": s.points[r % n]}


def _pairwise(s: SetTables, ok: np.ndarray):
    n = s.size
    yield ~ok, lambda r: {"A": s.points[r // n], "B": s.points[r % n]}


@kernel("complement-antitone")
def _(t: Tables, conv):
    s = t.src
    flipped = s.le[np.ix_(s.comp, s.comp)].T
    yield from _pairwise(s, s.le == flipped)


@kernel("commutativity")
def _(t: Tables, conv):
    s = t.src
    yield from _pairwise(s, (s.meet == s.meet.T) & (s.join == s.join.T))


@kernel("subset-characterization")
def _(t: Tables, conv):
    s = t.src
    by_meet = s.meet == s.ids[:, None]
    by_join = s.join == s.ids[None, :]
    yield from _pairwise(s, (s.le == by_meet) & (by_meet == by_join))


@kernel("absorption")
def _(t: Tables, conv):
    s = t.src
    rows = s.ids[:, None]
    ok = (s.join[rows, s.meet] == rows) & (s.meet[rows, s.join] == rows)
    yield from _pairwise(s, ok)


@kernel("associativity")
def _(t: Tables, conv):
    s = t.src
    n, m, j = s.size, s.meet, s.join
    for a in range(n):
        ok = (m[m[a]] == m[a][m]) & (j[j[a]] == j[a][j])
        yield ~ok, lambda r, a=a: {"A": s.points[a], "B": s.points[r // n], "C": s.points[r % n]}


def _violation_bits(s: SetTables, op: np.ndarray) -> np.ndarray:
    """bits[b, y] packs, over d, whether op(b, d) fails to lie above y."""
    return np.stack([np.packbits(~s.le[:, op[b]], axis=1) for b in range(s.size)])


@kernel("monotonicity")
def _(t: Tables, conv):
    # slots (A,B) and (C,D) run over ordered pairs; for fixed A, B, C every
    # candidate D is tested at once, bitwise: D ⊒ C while A op C ⋢ B op D
    s = t.src
    n, le = s.size, s.le
    up = np.packbits(le, axis=1)
    bad_join = _violation_bits(s, s.join)
    bad_meet = _violation_bits(s, s.meet)
    lo, hi = s.pairs
    n_pairs = len(lo)
    pair_rank = {(int(a), int(b)): r for r, (a, b) in enumerate(zip(lo, hi))}
    for a in range(n):
        bs = np.flatnonzero(le[a])
        hits = (bad_join[bs[:, None], s.join[a][None, :]] | bad_meet[bs[:, None], s.meet[a][None, :]]) & up[None]
        bad = hits.any(axis=2)
        size = len(bs) * n_pairs
        if not bad.any():
            yield size, None
            continue
        bi, c = np.unravel_index(int(np.argmax(bad)), bad.shape)
        d = int(np.flatnonzero(np.unpackbits(hits[bi, c])[:n])[0])
        b, c = int(bs[bi]), int(c)
        rank = int(bi) * n_pairs + pair_rank[(c, d)]
        yield size, (rank, {"A": s.points[a], "B": s.points[b], "C": s.points[c], "D": s.points[d]})


@kernel("generalized-inclusion")
def _(t: Tables, conv):
    s = t.src
    x, y, single = s.families
    lo, hi = s.intersection(x, y, single), s.union(x, y, single)
    ok = s.le[lo, x] & s.le[x, hi] & s.le[lo, y] & s.le[y, hi]
    yield ~ok, lambda r: {"S": s.family(r)}


@kernel("distributive-generalized")
def _(t: Tables, conv):
    s = t.src
    x, y, single = s.families
    u, i = s.union(x, y, single), s.intersection(x, y, single)
    for a in range(s.size):
        ma, ja = s.meet[a], s.join[a]
        ok = (ma[u] == s.union(ma[x], ma[y], single)) & (ja[i] == s.intersection(ja[x], ja[y], single))
        yield ~ok, lambda r, a=a: {"A": s.points[a], "S": s.family(r)}


@kernel("demorgan-generalized")
def _(t: Tables, conv):
    s = t.src
    x, y, single = s.families
    c = s.comp
    ok = ((c[s.union(x, y, single)] == s.intersection(c[x], c[y], single))
          & (c[s.intersection(x, y, single)] == s.union(c[x], c[y], single)))
    yield ~ok, lambda r: {"S": s.family(r)}


# ---------------------------------------------------------------- induced maps

def _per_map(t: Tables, bad_of, decode_rest):
    for fi, f in enumerate(t.maps):
        yield bad_of(fi), lambda r, f=f: {"f": f, **decode_rest(r)}


@kernel("inverse-image-commutes-complement")
def _(t: Tables, conv):
    src, tgt, pre = t.src, t.tgt, t.pre
    yield from _per_map(t, lambda f: pre[f, tgt.comp] != src.comp[pre[f]], lambda r: {"B": tgt.points[r]})


@kernel("inverse-image-monotone")
def _(t: Tables, conv):
    src, tgt, pre = t.src, t.tgt, t.pre
    lo, hi = tgt.pairs
    yield from _per_map(t, lambda f: ~src.le[pre[f, lo], pre[f, hi]],
                        lambda r: {"A": tgt.points[lo[r]], "B": tgt.points[hi[r]]})


@kernel("inverse-image-union-commutes")
def _(t: Tables, conv):
    src, tgt, pre = t.src, t.tgt, t.pre
    x, y, single = tgt.families
    u = tgt.union(x, y, single)
    yield from _per_map(t, lambda f: pre[f, u] != src.union(pre[f, x], pre[f, y], single),
                        lambda r: {"S": tgt.family(r)})


@kernel("inverse-image-intersection-commutes")
def _(t: Tables, conv):
    src, tgt, pre = t.src, t.tgt, t.pre
    x, y, single = tgt.families
    i = tgt.intersection(x, y, single)
    yield from _per_map(t, lambda f: pre[f, i] != src.intersection(pre[f, x], pre[f, y], single),
                        lambda r: {"S": tgt.family(r)})


@kernel("subset-of-preimage-of-image")
def _(t: Tables, conv):
    src, pre, img = t.src, t.pre, t.img(conv)

    def bad(f):
        back = pre[f, img[f]]
        return ~(src.le[src.ids, back] & (~t.injective[f] | (back == src.ids)))

    yield from _per_map(t, bad, lambda r: {"A": src.points[r]})


@kernel("image-of-preimage-subset")
def _(t: Tables, conv):
    tgt, pre, img = t.tgt, t.pre, t.img(conv)

    def bad(f):
        there = img[f, pre[f]]
        return ~(tgt.le[there, tgt.ids] & (~t.surjective[f] | (there == tgt.ids)))

    yield from _per_map(t, bad, lambda r: {"B": tgt.points[r]})


@kernel("image-monotone")
def _(t: Tables, conv):
    src, tgt, img = t.src, t.tgt, t.img(conv)
    lo, hi = src.pairs
    yield from _per_map(t, lambda f: ~tgt.le[img[f, lo], img[f, hi]],
                        lambda r: {"A": src.points[lo[r]], "B": src.points[hi[r]]})


@kernel("image-union-commutes")
def _(t: Tables, conv):
    src, tgt, img = t.src, t.tgt, t.img(conv)
    x, y, single = src.families
    u = src.union(x, y, single)
    yield from _per_map(t, lambda f: img[f, u] != tgt.union(img[f, x], img[f, y], single),
                        lambda r: {"S": src.family(r)})


@kernel("image-intersection-subset")
def _(t: Tables, conv):
    src, tgt, img = t.src, t.tgt, t.img(conv)
    x, y, single = src.families
    i = src.intersection(x, y, single)

    def bad(f):
        lhs = img[f, i]
        rhs = tgt.intersection(img[f, x], img[f, y], single)
        return ~(tgt.le[lhs, rhs] & (~t.injective[f] | (lhs == rhs)))

    yield from _per_map(t, bad, lambda r: {"S": src.family(r)})
