"""Canonical labeling of small vertex-colored structures.

A structure has ``nv`` vertices with initial colors, a symmetric matrix of
pair labels and a set of unordered vertex triples.  ``canonical_certificate``
returns a value that is equal for two structures iff they are isomorphic
(by a color-preserving bijection carrying pair labels and triples across).

The search is individualization-refinement: equitable color refinement,
then branching on the first non-singleton cell, keeping the smallest leaf
certificate.  Automorphisms discovered at equal leaves prune sibling
branches that lie in one orbit of the pointwise stabilizer of the current
path.
"""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

Certificate = tuple


class Structure:
    def __init__(self, colors: Sequence[int], pair: Sequence[Sequence[int]], triples: Sequence[Sequence[int]] = ()):
        self.nv = len(colors)
        self.colors = list(colors)
        self.pair = [list(row) for row in pair]
        self.triples = sorted(tuple(sorted(t)) for t in triples)
        self._by_vertex = [[] for _ in range(self.nv)]
        for a, b, c in self.triples:
            self._by_vertex[a].append((b, c))
            self._by_vertex[b].append((a, c))
            self._by_vertex[c].append((a, b))

    def certificate(self, pos: Sequence[int]) -> Certificate:
        """Encoding of the structure relabeled by vertex -> pos[vertex]."""
        order = sorted(range(self.nv), key=pos.__getitem__)
        cols = tuple(self.colors[v] for v in order)
        rows = tuple(tuple(self.pair[v][w] for w in order[i + 1:]) for i, v in enumerate(order))
        tris = tuple(sorted(tuple(sorted((pos[a], pos[b], pos[c]))) for a, b, c in self.triples))
        return (self.nv, cols, rows, tris)

    # -- refinement -----------------------------------------------------------

    def _initial(self) -> list[int]:
        ranks = {c: i for i, c in enumerate(sorted(set(self.colors)))}
        return [ranks[c] for c in self.colors]

    def refine(self, colors: list[int]) -> list[int]:
        ncells = len(set(colors))
        pair = self.pair
        while True:
            sigs = []
            for v in range(self.nv):
                prow = pair[v]
                nb = sorted((prow[w], colors[w]) for w in range(self.nv) if w != v)
                tr = sorted((min(colors[a], colors[b]), max(colors[a], colors[b])) for a, b in self._by_vertex[v])
                sigs.append((colors[v], tuple(nb), tuple(tr)))
            ordered = {s: i for i, s in enumerate(sorted(set(sigs)))}
            colors = [ordered[s] for s in sigs]
            if len(ordered) == ncells:
                return colors
            ncells = len(ordered)


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    return [x if (x < c or w == v) else x + 1 for w, x in enumerate(colors)]


def _orbit_roots(nv: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(nv):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(nv)]


def canonical_certificate(s: Structure) -> Certificate:
    best: list = [None, None]   # certificate, positions
    first: list = [None, None]
    autos: list[list[int]] = []

    def leaf(pos: list[int]) -> None:
        cert = s.certificate(pos)
        for ref in (first, best):
            if ref[0] is not None and cert == ref[0]:
                # automorphism: v -> the vertex the reference leaf put at pos[v]
                inv = [0] * s.nv
                for u, p in enumerate(ref[1]):
                    inv[p] = u
                autos.append([inv[pos[v]] for v in range(s.nv)])
                return
        if first[0] is None:
            first[0], first[1] = cert, pos
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, pos

    def search(colors: list[int], path: list[int]) -> None:
        colors = s.refine(colors)
        if len(set(colors)) == s.nv:
            leaf(colors)
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, k in sizes.items() if k > 1)
        cell = [v for v in range(s.nv) if colors[v] == target]
        done: list[int] = []
        for v in cell:
            if done:
                stab = [g for g in autos if all(g[p] == p for p in path)]
                if stab:
                    roots = _orbit_roots(s.nv, stab)
                    if any(roots[v] == roots[u] for u in done):
                        continue
            search(_individualize(colors, v), path + [v])
            done.append(v)

    search(s._initial(), [])
    return best[0]


def brute_force_certificate(s: Structure) -> Certificate:
    """Minimum certificate over all color-preserving relabelings (small inputs only)."""
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(s.colors):
        groups.setdefault(c, []).append(v)
    blocks = [groups[c] for c in sorted(groups)]
    best = None

    def rec(i: int, pos: list[int], offset: int):
        nonlocal best
        if i == len(blocks):
            cert = s.certificate(pos)
            if best is None or cert < best:
                best = cert
            return
        block = blocks[i]
        for perm in permutations(range(offset, offset + len(block))):
            for v, p in zip(block, perm):
                pos[v] = p
            rec(i + 1, pos, offset + len(block))

    rec(0, [0] * s.nv, 0)
    return best


def encode(cert: Certificate) -> bytes:
    """Compact byte form: nv, vertex colors, upper-triangle pair labels, triples."""
    nv, cols, rows, tris = cert
    flat = [x for row in rows for x in row]
    return bytes([nv, *cols, *flat, *(v for t in tris for v in t)])
