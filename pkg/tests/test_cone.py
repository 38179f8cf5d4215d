from itertools import combinations

import numpy as np

from e7orbits.cone import (
    DisjointnessGraph, clique_census, face_census, iota_equivariant, low_degree_root_check, six_A1_tilde_configs,
)
from e7orbits.lattice import iota


def test_clique_census(data):
    assert clique_census(7, data) == [1, 56, 756, 4032, 10080, 12096, 6048, 576]


def test_small_cliques_by_brute_force(data):
    g = DisjointnessGraph.of(data)
    A = g.adj
    assert sum(1 for a, b in combinations(range(56), 2) if A[a, b]) == 756
    assert sum(1 for a, b, c in combinations(range(56), 3) if A[a, b] and A[b, c] and A[a, c]) == 4032


def test_degree_census(data):
    assert set(DisjointnessGraph.of(data).degrees()) == {27}


def test_graph_is_iota_invariant(data):
    g = DisjointnessGraph.of(data)
    idx = data.L.index
    perm = [idx[iota(data.lattice, v)] for v in data.L]
    assert (g.adj[np.ix_(perm, perm)] == g.adj).all()


def test_graph_is_reflection_invariant(data):
    from e7orbits.weyl import simple_reflections
    g = DisjointnessGraph.of(data)
    idx = data.L.index
    for r in simple_reflections(data):
        perm = [idx[r.apply(data, v)] for v in data.L]
        assert (g.adj[np.ix_(perm, perm)] == g.adj).all()


def test_seven_cliques_match_weyl(data):
    from e7orbits.weyl import order_consistency_check
    assert clique_census(7, data)[7] == order_consistency_check(data)[0]


def test_six_A1_tilde(data):
    configs = six_A1_tilde_configs(data)
    assert len(configs) == 126
    assert all(len(c.pairs) == 6 and len(c.lifts) == 12 for c in configs)
    assert len({c.lifts for c in configs}) == 126
    assert iota_equivariant(configs, data)


def test_six_pairs_sum_to_fiber(data):
    for c in six_A1_tilde_configs(data):
        for a, b in c.pairs:
            assert tuple(x + y for x, y in zip(a, b)) == c.fiber
            assert data.lattice.pair(a, b) == 1


def test_low_degree_root_check(data):
    r = low_degree_root_check(data)
    assert r.ok
    assert sorted(r.degree_one) == sorted(data.L.members)
    assert r.degree_two == []


def test_face_census(data):
    fc = face_census(data)
    assert fc["faces"] == {"7": 56, "6": 756, "5": 4032, "4": 10080, "3": 12096, "2": 6048, "1": 702}
    assert fc["rays"] == {"7A1": 576, "6A1~": 126}
