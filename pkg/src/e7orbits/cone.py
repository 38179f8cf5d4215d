"""Face census of the cone cut out by the 56 lifts of bitangents.

Faces are counted combinatorially: a face of dimension 8-k corresponds to a
set of k pairwise disjoint lifts (a k-clique in the disjointness graph) for
k <= 6, and the rays are the 7-cliques (type 7A1) together with the 126
configurations of type 6A1~ coming from the reducible members of fiber
classes.  Pairings on the double cover are twice those on SY, so conditions
stated there translate to SY pairings directly: disjoint means pairing 0,
and a (-2)-curve upstairs is a (-1)-vector here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalCheckError
from .intgraph import reducible_pairs
from .lattice import PicardData, Vector, vectors_with, coordinate_bound, default_data, iota


@dataclass
class DisjointnessGraph:
    vertices: list[Vector]
    adj: np.ndarray     # bool (56, 56), True where the pairing is 0

    @classmethod
    def of(cls, data: PicardData) -> "DisjointnessGraph":
        P = data.L.pairing_table
        adj = P == 0
        np.fill_diagonal(adj, False)
        return cls(list(data.L.members), adj)

    def degrees(self) -> list[int]:
        return self.adj.sum(axis=1).tolist()


def clique_census(max_k: int = 7, data: PicardData | None = None) -> list[int]:
    """counts[k] = number of k-cliques of the disjointness graph, k = 0..max_k."""
    g = DisjointnessGraph.of(data or default_data())
    n = len(g.vertices)
    later = [set(np.nonzero(g.adj[i, i + 1:])[0] + i + 1) for i in range(n)]
    counts = [0] * (max_k + 1)

    def grow(cand: set, k: int) -> None:
        counts[k] += 1
        if k == max_k:
            return
        for j in cand:
            grow(cand & later[j], k + 1)

    grow(set(range(n)), 0)
    return counts


@dataclass
class SixA1Tilde:
    fiber: Vector
    pairs: list[tuple[Vector, Vector]]

    @property
    def lifts(self) -> frozenset:
        return frozenset(v for p in self.pairs for v in p)


def six_A1_tilde_configs(data: PicardData | None = None) -> list[SixA1Tilde]:
    """One configuration per fiber class v in F: the six reducible members l + l' = v.

    Checked: six pairs, twelve distinct lifts, pairing 1 inside a pair and 0
    across pairs, and the twelve-sets are distinct for distinct v.
    """
    data = data or default_data()
    P = data.L.pairing_table
    idx = data.L.index
    out = []
    for v, pairs in sorted(reducible_pairs(data).items()):
        if len(pairs) != 6:
            raise InternalCheckError(f"fiber class {v} has {len(pairs)} reducible members, expected 6")
        lifts = [x for p in pairs for x in p]
        if len(set(lifts)) != 12:
            raise InternalCheckError(f"the 12 components for {v} are not distinct")
        for a, (l1, l2) in enumerate(pairs):
            if P[idx[l1], idx[l2]] != 1:
                raise InternalCheckError("components of a reducible member must meet once")
            for b in range(a + 1, len(pairs)):
                if any(P[idx[x], idx[y]] != 0 for x in (l1, l2) for y in pairs[b]):
                    raise InternalCheckError("components of different members must be disjoint")
        out.append(SixA1Tilde(v, pairs))
    if len(out) != 126 or len({c.lifts for c in out}) != 126:
        raise InternalCheckError("six-A1~ configurations are not in bijection with F")
    return out


def iota_equivariant(configs: list[SixA1Tilde], data: PicardData | None = None) -> bool:
    data = data or default_data()
    lat = data.lattice
    by_fiber = {c.fiber: c for c in configs}
    for c in configs:
        image = {frozenset((iota(lat, a), iota(lat, b))) for a, b in c.pairs}
        if image != {frozenset(p) for p in by_fiber[iota(lat, c.fiber)].pairs}:
            return False
    return True


@dataclass
class RootCheck:
    degree_one: list[Vector]
    degree_two: list[Vector]
    ok: bool


def low_degree_root_check(data: PicardData | None = None) -> RootCheck:
    """All v with <v,v> = -1 and <v,h> in {1, 2}; passes iff they are exactly L."""
    data = data or default_data()
    lat = data.lattice
    strata = [sorted(vectors_with(lat, d, -1, coordinate_bound(lat, d, -1))) for d in (1, 2)]
    ok = strata[0] == sorted(data.L.members) and not strata[1]
    return RootCheck(strata[0], strata[1], ok)


def face_census(data: PicardData | None = None) -> dict:
    """The face-count row: dims 7..2 from k-cliques, dim 1 split into 7A1 and 6A1~."""
    data = data or default_data()
    counts = clique_census(7, data)
    six = len(six_A1_tilde_configs(data))
    faces = {str(8 - k): counts[k] for k in range(1, 7)}
    faces["1"] = counts[7] + six
    return {"faces": faces, "rays": {"7A1": counts[7], "6A1~": six}, "cliques": counts}
