"""W(E7)/{+-1} as a permutation group on the 28 + 63 classes.

Points 0..27 are the bitangent classes (Lbar) and points 28..90 the conic
family classes (Fbar), both in canonical order.  A group element is stored
as a uint8 array ``p`` of length 91 with ``p[i]`` the image of point i.
"""
from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from math import lcm
from typing import Iterator, Sequence

import numpy as np
from numba import njit

from .errors import InternalCheckError, ResourceLimitError
from .lattice import PicardData, Vector

log = logging.getLogger(__name__)

NL = 28
NF = 63
NPOINTS = NL + NF
GROUP_ORDER = 1451520
DEFAULT_MEMORY_BUDGET = 2 * 1024**3


@dataclass(frozen=True)
class Reflection:
    root: Vector

    def apply(self, data: PicardData, x: Sequence[int]) -> Vector:
        k = data.lattice.pair(x, self.root)
        return tuple(a + k * r for a, r in zip(x, self.root))


class GroupElement:
    """A permutation of the 91 points, acting componentwise on Lbar and Fbar."""

    __slots__ = ("perm",)

    def __init__(self, perm):
        perm = np.asarray(perm, dtype=np.uint8)
        if perm.shape != (NPOINTS,):
            raise ValueError(f"expected {NPOINTS} images, got shape {perm.shape}")
        self.perm = perm

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(np.arange(NPOINTS, dtype=np.uint8))

    @property
    def perm_L(self) -> np.ndarray:
        return self.perm[:NL]

    @property
    def perm_F(self) -> np.ndarray:
        return self.perm[NL:] - NL

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (g * h)(i) = g(h(i))
        return GroupElement(self.perm[other.perm])

    def inverse(self) -> "GroupElement":
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(NPOINTS, dtype=np.uint8)
        return GroupElement(inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and bool(np.array_equal(self.perm, other.perm))

    def __hash__(self) -> int:
        return hash(self.perm.tobytes())

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.perm, np.arange(NPOINTS)))

    def order(self) -> int:
        lam_L, lam_F = cycle_type(self.perm)
        return lcm(*lam_L, *lam_F)

    def __repr__(self) -> str:
        return f"GroupElement(L={self.perm_L.tolist()}, F={self.perm_F.tolist()})"


def simple_reflections(data: PicardData) -> list[Reflection]:
    """Seven simple roots of E7 inside h-perp: e_i - e_{i+1} (i=1..6) and e0 - e1 - e2 - e3."""
    roots = []
    for i in range(1, 7):
        r = [0] * 8
        r[i], r[i + 1] = 1, -1
        roots.append(tuple(r))
    roots.append((1, -1, -1, -1, 0, 0, 0, 0))
    lat = data.lattice
    for r in roots:
        if lat.norm(r) != -2 or lat.pair(r, lat.h) != 0:
            raise InternalCheckError(f"{r} is not a root orthogonal to h")
    return [Reflection(r) for r in roots]


def to_group_element(refl: Reflection, data: PicardData) -> GroupElement:
    perm = np.empty(NPOINTS, dtype=np.uint8)
    for offset, reps, kind in ((0, data.Lbar, "L"), (NL, data.Fbar, "F")):
        for i, v in enumerate(reps):
            k, j = data.class_of(refl.apply(data, v))
            if k != kind:
                raise InternalCheckError(f"reflection maps a {kind}-class outside {kind}")
            perm[offset + i] = offset + j
    if sorted(perm.tolist()) != list(range(NPOINTS)):
        raise InternalCheckError("reflection does not induce a permutation")
    return GroupElement(perm)


def generators(data: PicardData) -> list[GroupElement]:
    return [to_group_element(r, data) for r in simple_reflections(data)]


def generator_fingerprint(gens: Sequence[GroupElement]) -> str:
    h = hashlib.sha256()
    for g in gens:
        h.update(g.perm.tobytes())
    return h.hexdigest()


class GroupTable:
    """All elements of the group as rows of a (order, 91) uint8 array, BFS order."""

    def __init__(self, perms: np.ndarray):
        self.perms = perms

    @property
    def order(self) -> int:
        return len(self.perms)

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self) -> Iterator[GroupElement]:
        for row in self.perms:
            yield GroupElement(row)

    def __getitem__(self, i: int) -> GroupElement:
        return GroupElement(self.perms[i])

    def random_element(self, rng: np.random.Generator) -> GroupElement:
        return GroupElement(self.perms[rng.integers(len(self.perms))])


def _row_hashes(rows: np.ndarray, weights: np.ndarray) -> np.ndarray:
    # wrapping uint64 arithmetic; collisions are caught by the exact check at the end
    return (rows.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def enumerate_group(gens: Sequence[GroupElement], memory_budget: int = DEFAULT_MEMORY_BUDGET) -> GroupTable:
    """Breadth-first closure of the identity under right multiplication by ``gens``.

    Deduplication is by a 64-bit hash of the 91-byte image; a final exact
    uniqueness check on the stored rows guards against hash collisions.
    """
    rng = np.random.default_rng(0x5EED)
    weights = rng.integers(1, 2**63, size=NPOINTS, dtype=np.uint64) | np.uint64(1)
    gen_perms = [g.perm for g in gens]

    frontier = np.arange(NPOINTS, dtype=np.uint8)[None, :]
    layers = [frontier]
    seen = np.sort(_row_hashes(frontier, weights))
    total = 1
    while len(frontier):
        cand = np.concatenate([f[:, s] for f in (frontier,) for s in gen_perms])
        hs = _row_hashes(cand, weights)
        hs, first = np.unique(hs, return_index=True)
        pos = np.searchsorted(seen, hs)
        pos[pos == len(seen)] = 0
        fresh = seen[pos] != hs
        frontier = cand[first[fresh]]
        if not len(frontier):
            break
        layers.append(frontier)
        seen = np.sort(np.concatenate([seen, hs[fresh]]))
        total += len(frontier)
        if total * (NPOINTS + 16) > memory_budget:
            raise ResourceLimitError(
                f"group enumeration exceeded memory budget of {memory_budget} bytes at {total} elements"
            )
    perms = np.concatenate(layers)
    if len(np.unique(perms.view(np.dtype((np.void, NPOINTS))))) != len(perms):
        raise InternalCheckError("hash collision produced duplicate group elements")
    log.info("enumerated %d group elements in %d BFS layers", len(perms), len(layers))
    return GroupTable(perms)


def cycle_type(perm: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Cycle types (descending) of a 91-point permutation on Lbar and on Fbar."""
    p = list(perm)
    out = []
    for lo, hi in ((0, NL), (NL, NPOINTS)):
        seen = [False] * NPOINTS
        lengths = []
        for i in range(lo, hi):
            if seen[i]:
                continue
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            lengths.append(n)
        out.append(tuple(sorted(lengths, reverse=True)))
    return out[0], out[1]


@njit(cache=True)
def _cycle_counts(perms: np.ndarray) -> np.ndarray:
    """Row r gets counts[r, k] = number of k-cycles on Lbar and counts[r, 29 + k] on Fbar."""
    n = perms.shape[0]
    counts = np.zeros((n, NL + 1 + NF + 1), dtype=np.int32)
    seen = np.zeros(NPOINTS, dtype=np.bool_)
    for r in range(n):
        seen[:] = False
        for i in range(NPOINTS):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perms[r, j]
                length += 1
            if i < NL:
                counts[r, length] += 1
            else:
                counts[r, NL + 1 + length] += 1
    return counts


@dataclass
class CycleCensus:
    entries: list[tuple[tuple[int, ...], tuple[int, ...], int]]
    group_order: int

    def check(self) -> None:
        if sum(c for _, _, c in self.entries) != self.group_order:
            raise InternalCheckError("census multiplicities do not sum to the group order")
        ident = ((1,) * NL, (1,) * NF)
        if {(a, b): c for a, b, c in self.entries}.get(ident) != 1:
            raise InternalCheckError("identity entry missing or not unique")


def _partition(counts: np.ndarray) -> tuple[int, ...]:
    out = []
    for k in range(len(counts) - 1, 0, -1):
        out.extend([k] * int(counts[k]))
    return tuple(out)


def cycle_census(table: GroupTable, chunk: int = 200_000) -> CycleCensus:
    """Multiplicities of (cycle type on Lbar, cycle type on Fbar) over the whole group."""
    weights = np.random.default_rng(7).integers(1, 2**63, size=NL + NF + 2, dtype=np.uint64)
    tally: dict[bytes, int] = {}
    keys: dict[bytes, tuple] = {}
    for start in range(0, len(table.perms), chunk):
        block = table.perms[start:start + chunk]
        both = _cycle_counts(block)
        hs = _row_hashes(both, weights)
        uniq, first, inv, cnt = np.unique(hs, return_index=True, return_inverse=True, return_counts=True)
        if not np.array_equal(both, both[first][inv.ravel()]):
            raise InternalCheckError("cycle-type hash collision")
        for row, c in zip(both[first], cnt):
            key = row.tobytes()
            if key not in keys:
                keys[key] = (_partition(row[:NL + 1]), _partition(row[NL + 1:]))
            tally[key] = tally.get(key, 0) + int(c)
    entries = sorted((keys[k][0], keys[k][1], c) for k, c in tally.items())
    for lam_L, lam_F, _ in entries:
        if sum(lam_L) != NL or sum(lam_F) != NF:
            raise InternalCheckError("cycle type does not partition the point set")
    census = CycleCensus(entries, table.order)
    census.check()
    return census


def order_consistency_check(data: PicardData) -> tuple[int, bool]:
    """Count 7-subsets of L with pairwise pairing 0 and compare 7! times that with |W(E7)|."""
    P = data.L.pairing_table
    n = len(data.L)
    adj = [[j for j in range(i + 1, n) if P[i, j] == 0] for i in range(n)]

    def extend(clique_last_nbrs: set, depth: int) -> int:
        if depth == 7:
            return 1
        total = 0
        for j in sorted(clique_last_nbrs):
            total += extend(clique_last_nbrs & set(adj[j]), depth + 1)
        return total

    count = sum(extend(set(adj[i]), 1) for i in range(n))
    return count, count * 5040 == 2 * GROUP_ORDER


def transitive_on(gens: Sequence[GroupElement], points: Sequence[int]) -> bool:
    pts = set(points)
    start = next(iter(pts))
    orbit = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for g in gens:
            y = int(g.perm[x])
            if y not in orbit:
                orbit.add(y)
                todo.append(y)
    return orbit == pts
