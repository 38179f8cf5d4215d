"""Intersection graphs of configurations.

Lines and conics of a configuration become line and conic vertices.  Three
line vertices span a liftable triangle when the classes admit lifts with
all pairwise pairings 1.  Conic pairs get a label in {A, B, C} and
line-conic pairs a label in {alpha, beta}, both read off the pairings of the
two lifts.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from . import canon
from .errors import InternalCheckError, ResourceLimitError
from .lattice import PicardData, default_data
from .orbits import DEFAULT_LIMIT, Configuration, OrbitDecomposition, decompose
from .weyl import NF, NL, GroupElement

# pair codes used inside canonical structures; 0 is line-line / diagonal
CC_A, CC_B, CC_C = 1, 2, 3
LC_ALPHA, LC_BETA = 4, 5
LABEL_NAMES = {CC_A: "A", CC_B: "B", CC_C: "C", LC_ALPHA: "α", LC_BETA: "β"}

DEFAULT_CANON_BOUND = 24

_CC_BY_MULTISET = {(0, 4): CC_A, (2, 2): CC_B, (1, 3): CC_C}
_LC_BY_MULTISET = {(0, 2): LC_ALPHA, (1, 1): LC_BETA}


def cc_label(data: PicardData, c1: int, c2: int) -> int:
    a, _ = data.lift_pair("F", c1)
    b, ib = data.lift_pair("F", c2)
    lat = data.lattice
    key = tuple(sorted((lat.pair(a, b), lat.pair(a, ib))))
    if key not in _CC_BY_MULTISET:
        raise InternalCheckError(f"conic classes {c1},{c2}: unexpected pairing multiset {key}")
    return _CC_BY_MULTISET[key]


def lc_label(data: PicardData, li: int, ci: int) -> int:
    l, _ = data.lift_pair("L", li)
    c, ic = data.lift_pair("F", ci)
    lat = data.lattice
    key = tuple(sorted((lat.pair(l, c), lat.pair(l, ic))))
    if key not in _LC_BY_MULTISET:
        raise InternalCheckError(f"line {li}, conic {ci}: unexpected pairing multiset {key}")
    return _LC_BY_MULTISET[key]


def reducible_pairs(data: PicardData) -> dict[tuple[int, ...], list[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Map each v in F to the pairs {l, l'} in L with <l,l'> = 1 and l + l' = v."""
    out: dict = {v: [] for v in data.F}
    P = data.L.pairing_table
    L = data.L.members
    for i, j in zip(*np.nonzero(np.triu(P == 1, 1))):
        s = tuple(a + b for a, b in zip(L[i], L[j]))
        if s not in out:
            raise InternalCheckError(f"{L[i]} + {L[j]} is not in F")
        out[s].append((L[i], L[j]))
    return out


def triangles_on_Y(data: PicardData) -> tuple[int, set[tuple[int, int, int]]]:
    """Count triangles in L and the liftable class triples they project to.

    Projection is checked against the chosen-lift test: with lifts fixed so
    that <l1,l2> = 1 and <l2,l3> = 1, the triple is liftable iff <l3,l1> = 1.
    """
    P = data.L.pairing_table
    L = data.L.members
    n = len(L)
    adj = [set(np.nonzero(P[i] == 1)[0].tolist()) for i in range(n)]
    count = 0
    projected = set()
    for i in range(n):
        for j in sorted(x for x in adj[i] if x > i):
            for k in sorted(x for x in adj[i] & adj[j] if x > j):
                count += 1
                projected.add(tuple(sorted(data.class_of(L[t])[1] for t in (i, j, k))))
    if count != 2520:
        raise InternalCheckError(f"expected 2520 triangles on Y, found {count}")
    lat = data.lattice
    liftable = set()
    for a, b, c in combinations(range(NL), 3):
        l1 = data.Lbar[a]
        l2 = next(v for v in data.lift_pair("L", b) if lat.pair(l1, v) == 1)
        l3 = next(v for v in data.lift_pair("L", c) if lat.pair(l2, v) == 1)
        if lat.pair(l3, l1) == 1:
            liftable.add((a, b, c))
    if liftable != projected or len(liftable) != 1260:
        raise InternalCheckError(f"liftable triangles: {len(liftable)} by test, {len(projected)} by projection")
    return count, liftable


def quadruples(triangle_set: set[tuple[int, int, int]]) -> set[tuple[int, int, int, int]]:
    quads = {q for q in combinations(range(NL), 4) if all(t in triangle_set for t in combinations(q, 3))}
    covered: dict = {}
    for q in quads:
        for t in combinations(q, 3):
            covered[t] = covered.get(t, 0) + 1
    if set(covered) != triangle_set or any(v != 1 for v in covered.values()):
        raise InternalCheckError("quadruples do not partition the liftable triangles")
    return quads


@dataclass
class EdgeTables:
    cc: np.ndarray           # (63, 63) codes CC_*, diagonal CC_A
    lc: np.ndarray           # (28, 63) codes LC_*
    triangle_set: set
    quadruple_set: set
    y_triangles: int
    tri_lookup: np.ndarray = field(repr=False)   # (28, 28, 28) bool, symmetric

    def is_triangle(self, a: int, b: int, c: int) -> bool:
        return bool(self.tri_lookup[a, b, c])


def build_edge_tables(data: PicardData | None = None) -> EdgeTables:
    data = data or default_data()
    cc = np.zeros((NF, NF), dtype=np.int8)
    for i in range(NF):
        for j in range(i, NF):
            cc[i, j] = cc[j, i] = cc_label(data, i, j)
    if any(cc[i, j] == CC_A for i in range(NF) for j in range(i + 1, NF)):
        raise InternalCheckError("label A on two distinct conic classes")
    lc = np.array([[lc_label(data, i, j) for j in range(NF)] for i in range(NL)], dtype=np.int8)

    # alpha iff the family has a reducible member with a lift of the line as a component
    pairs = reducible_pairs(data)
    for j in range(NF):
        comps = set()
        for v in data.lift_pair("F", j):
            for l, l2 in pairs[v]:
                comps.update((data.class_of(l)[1], data.class_of(l2)[1]))
        alpha = {i for i in range(NL) if lc[i, j] == LC_ALPHA}
        if comps != alpha:
            raise InternalCheckError(f"alpha labels of conic class {j} disagree with its reducible members")

    y_count, tris = triangles_on_Y(data)
    quads = quadruples(tris)
    lookup = np.zeros((NL, NL, NL), dtype=bool)
    for t in tris:
        for a, b, c in ((t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[0], t[2]),
                        (t[1], t[2], t[0]), (t[2], t[0], t[1]), (t[2], t[1], t[0])):
            lookup[a, b, c] = True
    return EdgeTables(cc, lc, tris, quads, y_count, lookup)


_TABLES: EdgeTables | None = None


def default_tables() -> EdgeTables:
    global _TABLES
    if _TABLES is None:
        _TABLES = build_edge_tables()
    return _TABLES


# -- graphs ------------------------------------------------------------------

@dataclass(frozen=True)
class IntersectionGraph:
    m: int
    n: int
    conic_family_of: tuple[int, ...]
    T: tuple[tuple[int, int, int], ...]
    Ecc: tuple[tuple[int, int, int], ...]      # (i, j, code) for i < j
    Elc: tuple[tuple[int, int, int], ...]      # (line i, conic j, code)

    def structure(self) -> canon.Structure:
        nv = self.m + self.n
        pair = [[0] * nv for _ in range(nv)]
        for i, j, c in self.Ecc:
            pair[self.m + i][self.m + j] = pair[self.m + j][self.m + i] = c
        for i, j, c in self.Elc:
            pair[i][self.m + j] = pair[self.m + j][i] = c
        return canon.Structure([0] * self.m + [1] * self.n, pair, self.T)

    def to_json(self, canonical: bool = True) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "families": list(self.conic_family_of),
            "T": [list(t) for t in self.T],
            "Ecc": [[i, j, LABEL_NAMES[c]] for i, j, c in self.Ecc],
            "Elc": [[i, j, LABEL_NAMES[c]] for i, j, c in self.Elc],
        }
        if canonical:
            out["canonical"] = canonical_form(self).hex()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)


def graph_of(x: Configuration, tables: EdgeTables | None = None) -> IntersectionGraph:
    tables = tables or default_tables()
    lines, conics = x.lines, x.conics
    T = tuple(t for t in combinations(range(len(lines)), 3)
              if tables.tri_lookup[lines[t[0]], lines[t[1]], lines[t[2]]])
    Ecc = tuple((i, j, int(tables.cc[conics[i], conics[j]])) for i, j in combinations(range(len(conics)), 2))
    Elc = tuple((i, j, int(tables.lc[a, b])) for i, a in enumerate(lines) for j, b in enumerate(conics))
    relabel: dict[int, int] = {}
    families = tuple(relabel.setdefault(c, len(relabel)) for c in conics)
    return IntersectionGraph(len(lines), len(conics), families, T, Ecc, Elc)


def canonical_form(g: IntersectionGraph, bound: int = DEFAULT_CANON_BOUND) -> bytes:
    if g.m + g.n > bound:
        raise ResourceLimitError(f"canonical form needs m+n <= {bound}, got {g.m + g.n}")
    return canon.encode(canon.canonical_certificate(g.structure()))


def brute_force_form(g: IntersectionGraph, bound: int = 8) -> bytes:
    if g.m + g.n > bound:
        raise ResourceLimitError(f"brute-force canonical form needs m+n <= {bound}, got {g.m + g.n}")
    return canon.encode(canon.brute_force_certificate(g.structure()))


@dataclass
class GraphCount:
    m: int
    n: int
    N: int
    G: int
    forms: dict[bytes, list[int]]   # canonical form -> orbit sizes


def count_graphs(m: int, n: int, gens: Sequence[GroupElement], limit: int = DEFAULT_LIMIT, threads: int = 1,
                 decomposition: OrbitDecomposition | None = None, tables: EdgeTables | None = None) -> GraphCount:
    dec = decomposition or decompose(m, n, gens, limit=limit, threads=threads)
    tables = tables or default_tables()
    forms: dict[bytes, list[int]] = {}
    for size, rep in dec.orbits:
        forms.setdefault(canonical_form(graph_of(rep, tables)), []).append(size)
    return GraphCount(m, n, len(dec.orbits), len(forms), forms)


# -- two-graph statistics (n = 0) ---------------------------------------------

def _triangle_masks(x: Configuration, tables: EdgeTables) -> np.ndarray:
    if x.n:
        raise ValueError("two-graph statistics are defined for n = 0 only")
    T = graph_of(x, tables).T
    return np.array([(1 << a) | (1 << b) | (1 << c) for a, b, c in T], dtype=np.int64)


def two_graph_stats(x: Configuration, tables: EdgeTables | None = None) -> tuple[int, int, int, int]:
    """(|T|, a0, a1, a2) with a_nu the number of triangle pairs meeting in nu vertices."""
    masks = _triangle_masks(x, tables or default_tables())
    a = [0, 0, 0]
    for s, t in combinations(masks.tolist(), 2):
        a[(s & t).bit_count()] += 1
    return (len(masks), a[0], a[1], a[2])


def disjoint_triangle_triples(x: Configuration, tables: EdgeTables | None = None) -> int:
    """Number of 3-sets of liftable triangles that are pairwise vertex-disjoint."""
    masks = _triangle_masks(x, tables or default_tables())
    if len(masks) < 3:
        return 0
    D = ((masks[:, None] & masks[None, :]) == 0).astype(np.int64)
    # trace(D^3) counts each triangle of the disjointness graph 6 times
    total = int(np.einsum("ij,ji->", D @ D, D))
    if total % 6:
        raise InternalCheckError("trace(D^3) not divisible by 6")
    return total // 6


def lc_signature(g: IntersectionGraph) -> tuple[tuple[str, ...], ...]:
    """The line-conic label matrix up to independent row and column permutations."""
    M = [[""] * g.n for _ in range(g.m)]
    for i, j, c in g.Elc:
        M[i][j] = LABEL_NAMES[c]
    return min(tuple(tuple(M[i][j] for j in cols) for i in rows)
               for rows in permutations(range(g.m)) for cols in permutations(range(g.n)))
