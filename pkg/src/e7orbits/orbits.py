"""Explicit orbit decomposition of P^(m,n).

Configurations are ranked in lexicographic order: the line subset is ranked
as a lex-ordered k-combination of 0..27 and the conic multiset, after the
usual shift ``c_i + i``, as a lex-ordered combination of 0..n+61.  The two
ranks combine as ``subset_rank * C(n+62, 62) + multiset_rank``, so rank order
is lexicographic order on ``(lines, conics)`` and the smallest rank in an
orbit is its lexicographically minimal member.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np
from numba import njit

from .burnside import d_of
from .errors import ResourceLimitError
from .weyl import NF, NL, GROUP_ORDER, GroupElement

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 50_000_000
DEFAULT_ORBIT_BUDGET = GROUP_ORDER
_CHUNK = 1 << 20


@dataclass(frozen=True, order=True)
class Configuration:
    lines: tuple[int, ...] = ()
    conics: tuple[int, ...] = ()

    def __post_init__(self):
        lines, conics = tuple(self.lines), tuple(self.conics)
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "conics", conics)
        if any(b <= a for a, b in zip(lines, lines[1:])) or any(not 0 <= i < NL for i in lines):
            raise ValueError(f"lines must be strictly increasing indices in 0..{NL - 1}: {lines}")
        if any(b < a for a, b in zip(conics, conics[1:])) or any(not 0 <= i < NF for i in conics):
            raise ValueError(f"conics must be weakly increasing indices in 0..{NF - 1}: {conics}")

    @classmethod
    def of(cls, lines: Iterable[int] = (), conics: Iterable[int] = ()) -> "Configuration":
        return cls(tuple(sorted(lines)), tuple(sorted(conics)))

    @property
    def m(self) -> int:
        return len(self.lines)

    @property
    def n(self) -> int:
        return len(self.conics)

    def to_json(self) -> dict:
        return {"lines": list(self.lines), "conics": list(self.conics)}


# -- ranking -----------------------------------------------------------------

def _comb_rank(c: Sequence[int], N: int) -> int:
    k = len(c)
    r, prev = 0, -1
    for i, v in enumerate(c):
        r += comb(N - prev - 1, k - i) - comb(N - v, k - i)
        prev = v
    return r


def _comb_unrank(r: int, k: int, N: int) -> tuple[int, ...]:
    out = []
    v = 0
    for i in range(k):
        while True:
            block = comb(N - 1 - v, k - 1 - i)
            if r < block:
                break
            r -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def rank(x: Configuration) -> int:
    n = x.n
    shifted = [c + i for i, c in enumerate(x.conics)]
    return _comb_rank(x.lines, NL) * comb(n + NF - 1, NF - 1) + _comb_rank(shifted, n + NF - 1)


def unrank(r: int, m: int, n: int) -> Configuration:
    d = d_of(m, n)
    if not 0 <= r < d:
        raise ValueError(f"rank {r} out of range [0, {d}) for (m,n)=({m},{n})")
    ms = comb(n + NF - 1, NF - 1)
    sub, mul = divmod(r, ms)
    lines = _comb_unrank(sub, m, NL)
    shifted = _comb_unrank(mul, n, n + NF - 1)
    return Configuration(lines, tuple(c - i for i, c in enumerate(shifted)))


# -- group action --------------------------------------------------------------

def apply(g: GroupElement, x: Configuration) -> Configuration:
    pl, pf = g.perm_L, g.perm_F
    return Configuration(
        tuple(sorted(int(pl[i]) for i in x.lines)),
        tuple(sorted(int(pf[i]) for i in x.conics)),
    )


def complement(x: Configuration) -> Configuration:
    if x.n:
        raise ValueError("complement is only defined for configurations without conics")
    chosen = set(x.lines)
    return Configuration(tuple(i for i in range(NL) if i not in chosen), ())


def orbit_of(x: Configuration, gens: Sequence[GroupElement], budget: int = DEFAULT_ORBIT_BUDGET) -> set[Configuration]:
    orbit = {x}
    todo = [x]
    while todo:
        y = todo.pop()
        for g in gens:
            z = apply(g, y)
            if z not in orbit:
                orbit.add(z)
                if len(orbit) > budget:
                    raise ResourceLimitError(f"orbit exceeds the budget of {budget} configurations")
                todo.append(z)
    return orbit


# -- numba kernels -------------------------------------------------------------

def _binom_table(size: int) -> np.ndarray:
    cap = 1 << 62
    t = np.zeros((size + 1, size + 1), dtype=np.int64)
    for a in range(size + 1):
        for b in range(a + 1):
            t[a, b] = min(comb(a, b), cap)
    return t


@njit(cache=True, nogil=True)
def _nb_rank(c, k, N, binom):
    r = 0
    prev = -1
    for i in range(k):
        r += binom[N - prev - 1, k - i] - binom[N - c[i], k - i]
        prev = c[i]
    return r


@njit(cache=True, nogil=True)
def _nb_unrank(r, k, N, binom, out):
    v = 0
    for i in range(k):
        while True:
            block = binom[N - 1 - v, k - 1 - i]
            if r < block:
                break
            r -= block
            v += 1
        out[i] = v
        v += 1


@njit(cache=True, nogil=True)
def _nb_sort(a, k):
    for i in range(1, k):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x


def _line_tables(gL: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Lookup tables over 7-bit chunks of a 28-bit line mask.

    ``mask_t[s, j, b]`` is the image under generator s of the bits ``b`` in
    chunk j.  ``rank_t[j, b, c]`` is the contribution of the bits ``b`` in
    chunk j to the lex rank, given c set bits in lower chunks; the rank of a
    mask is C(28, m) plus the sum of the four chunk contributions (0 if m = 0).
    """
    ngen = gL.shape[0]
    mask_t = np.zeros((ngen, 4, 128), dtype=np.int64)
    rank_t = np.zeros((4, 128, NL + 1), dtype=np.int64)
    for j in range(4):
        for b in range(128):
            bits = [7 * j + t for t in range(7) if b >> t & 1]
            for s in range(ngen):
                mask_t[s, j, b] = sum(1 << int(gL[s, v]) for v in bits)
            for c in range(NL + 1):
                total = 0
                for t, v in enumerate(bits):
                    i = c + t
                    if i >= m:
                        break
                    if i <= m - 2:
                        total += comb(NL - v - 1, m - i - 1)
                    total -= comb(NL - v, m - i)
                rank_t[j, b, c] = total
    return mask_t, rank_t


@njit(cache=True, nogil=True)
def _nb_next_comb(c, k, N):
    """Advance c to the next k-combination of 0..N-1 in lex order; False on wrap-around."""
    i = k - 1
    while i >= 0 and c[i] == N - k + i:
        i -= 1
    if i < 0:
        for j in range(k):
            c[j] = j
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


@njit(cache=True, nogil=True)
def _nb_images(start, stop, m, n, mask_t, rank_t, popc, gF, binom, out):
    """out[r - start, s] = rank of generator s applied to the configuration of rank r."""
    NFm = n + 62
    ms = binom[NFm, n]
    base = binom[28, m] if m > 0 else 0
    lines = np.empty(max(m, 1), dtype=np.int64)
    shifted = np.empty(max(n, 1), dtype=np.int64)
    ic = np.empty(max(n, 1), dtype=np.int64)
    ngen = mask_t.shape[0]
    sub = start // ms
    _nb_unrank(sub, m, 28, binom, lines)
    _nb_unrank(start - sub * ms, n, NFm, binom, shifted)
    for r in range(start, stop):
        mask = 0
        for i in range(m):
            mask |= 1 << lines[i]
        for s in range(ngen):
            img = 0
            for j in range(4):
                img |= mask_t[s, j, (mask >> (7 * j)) & 127]
            lr = base
            cnt = 0
            for j in range(4):
                b = (img >> (7 * j)) & 127
                lr += rank_t[j, b, cnt]
                cnt += popc[b]
            for i in range(n):
                ic[i] = gF[s, shifted[i] - i]
            _nb_sort(ic, n)
            for i in range(n):
                ic[i] += i
            out[r - start, s] = lr * ms + _nb_rank(ic, n, NFm, binom)
        if not _nb_next_comb(shifted, n, NFm):
            _nb_next_comb(lines, m, 28)


@njit(cache=True, nogil=True)
def _nb_find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _nb_union_block(parent, size, start, images):
    for i in range(images.shape[0]):
        a = _nb_find(parent, start + i)
        for s in range(images.shape[1]):
            b = _nb_find(parent, images[i, s])
            if a == b:
                continue
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]


@njit(cache=True)
def _nb_collect(parent, label):
    """Relabel roots 0..N-1 in order of first appearance; returns (reps, sizes)."""
    d = parent.shape[0]
    label[:] = -1
    reps = np.empty(d, dtype=np.int64)
    sizes = np.zeros(d, dtype=np.int64)
    count = 0
    for r in range(d):
        root = _nb_find(parent, r)
        if label[root] < 0:
            label[root] = count
            reps[count] = r
            count += 1
        sizes[label[root]] += 1
    return reps[:count], sizes[:count]


# -- decomposition -------------------------------------------------------------

@dataclass
class OrbitDecomposition:
    m: int
    n: int
    d: int
    orbits: list[tuple[int, Configuration]] = field(default_factory=list)

    @property
    def orbit_sizes(self) -> list[int]:
        return [s for s, _ in self.orbits]

    @property
    def representatives(self) -> list[Configuration]:
        return [x for _, x in self.orbits]

    @property
    def total(self) -> int:
        return sum(self.orbit_sizes)

    def __len__(self) -> int:
        return len(self.orbits)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "d": self.d,
            "orbit_sizes": self.orbit_sizes,
            "representatives": [x.to_json() for x in self.representatives],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def decompose(m: int, n: int, gens: Sequence[GroupElement], limit: int = DEFAULT_LIMIT, threads: int = 1) -> OrbitDecomposition:
    """Split P^(m,n) into orbits with a union-find over all ranks.

    Generator images are computed in independent chunks (optionally on
    ``threads`` worker threads); unions are applied serially in chunk order.
    The resulting partition does not depend on the order of unions, and
    representatives are the minimal ranks, so the output is deterministic.
    Orbits are listed by (size, representative).
    """
    d = d_of(m, n)
    if d > limit:
        raise ResourceLimitError(f"d^({m},{n}) = {d} exceeds the explicit-orbit limit {limit}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    gL = np.array([g.perm_L for g in gens], dtype=np.int64)
    gF = np.array([g.perm_F for g in gens], dtype=np.int64)
    binom = _binom_table(NL + NF + n + 2)
    mask_t, rank_t = _line_tables(gL, m)
    popc = np.array([bin(b).count("1") for b in range(128)], dtype=np.int64)

    parent = np.arange(d, dtype=np.int64 if d >= 2**31 else np.int32)
    size = np.ones(d, dtype=parent.dtype)

    def images(start: int) -> np.ndarray:
        stop = min(start + _CHUNK, d)
        out = np.empty((stop - start, len(gens)), dtype=np.int64)
        _nb_images(start, stop, m, n, mask_t, rank_t, popc, gF, binom, out)
        return out

    starts = range(0, d, _CHUNK)
    if threads == 1:
        for start in starts:
            _nb_union_block(parent, size, start, images(start))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # bounded look-ahead keeps at most 2*threads image chunks in memory
            pending = []
            it = iter(starts)
            for start in it:
                pending.append((start, pool.submit(images, start)))
                if len(pending) >= 2 * threads:
                    s0, fut = pending.pop(0)
                    _nb_union_block(parent, size, s0, fut.result())
            for s0, fut in pending:
                _nb_union_block(parent, size, s0, fut.result())

    reps, sizes = _nb_collect(parent, size)
    del parent, size
    orbits = sorted((int(s), int(r)) for s, r in zip(sizes, reps))
    return OrbitDecomposition(m, n, d, [(s, unrank(r, m, n)) for s, r in orbits])
