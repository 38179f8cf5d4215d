from collections import Counter
from itertools import combinations

import numpy as np
import pytest

from e7orbits.errors import ResourceLimitError
from e7orbits.intgraph import (
    CC_A, CC_B, CC_C, LC_ALPHA, LC_BETA, brute_force_form, canonical_form, count_graphs, disjoint_triangle_triples,
    graph_of, lc_signature, reducible_pairs, two_graph_stats,
)
from e7orbits.orbits import Configuration, apply, complement


def _random_config(rng, m, n):
    return Configuration.of(rng.choice(28, size=m, replace=False).tolist(), rng.integers(63, size=n).tolist())


def test_triangles_on_Y_by_brute_force(data, tables):
    P = data.L.pairing_table
    tri = [t for t in combinations(range(56), 3) if P[t[0], t[1]] == P[t[1], t[2]] == P[t[0], t[2]] == 1]
    assert len(tri) == tables.y_triangles == 2520
    projected = {tuple(sorted(data.class_of(data.L[i])[1] for i in t)) for t in tri}
    assert projected == tables.triangle_set and len(projected) == 1260


def test_triangles_closed_under_iota(data):
    from e7orbits.lattice import iota
    lat = data.lattice
    P = data.L.pairing_table
    idx = data.L.index
    for t in combinations(range(56), 3):
        if P[t[0], t[1]] == P[t[1], t[2]] == P[t[0], t[2]] == 1:
            images = [idx[iota(lat, data.L[i])] for i in t]
            assert all(P[a, b] == 1 for a, b in combinations(images, 2))


def test_unliftable_triple_example(data, tables):
    lat = data.lattice
    for a, b, c in combinations(range(28), 3):
        l1 = data.Lbar[a]
        l2 = next(v for v in data.lift_pair("L", b) if lat.pair(l1, v) == 1)
        l3 = next(v for v in data.lift_pair("L", c) if lat.pair(l2, v) == 1)
        if lat.pair(l3, l1) == 0:
            assert (a, b, c) not in tables.triangle_set
            return
    pytest.fail("no unliftable triple found")


def test_quadruples(tables):
    quads = tables.quadruple_set
    assert len(quads) == 315
    covered = Counter(t for q in quads for t in combinations(q, 3))
    assert set(covered) == tables.triangle_set and set(covered.values()) == {1}


def test_cc_labels(tables):
    iu = np.triu_indices(63, 1)
    c = Counter(tables.cc[iu].tolist())
    assert c == {CC_B: 945, CC_C: 1008}
    assert (np.diag(tables.cc) == CC_A).all()
    assert (tables.cc == tables.cc.T).all()


def test_lc_labels(tables):
    assert set(np.unique(tables.lc).tolist()) == {LC_ALPHA, LC_BETA}
    assert ((tables.lc == LC_ALPHA).sum(axis=0) == 12).all()
    for i in range(28):
        assert len(set(tables.lc[i].tolist())) == 2


def test_six_reducible_members_per_fiber(data):
    pairs = reducible_pairs(data)
    assert len(pairs) == 126 and all(len(p) == 6 for p in pairs.values())


def test_alpha_iff_component_of_reducible_member(data, tables):
    pairs = reducible_pairs(data)
    for j in range(63):
        comps = {data.class_of(l)[1] for v in data.lift_pair("F", j) for p in pairs[v] for l in p}
        assert comps == {i for i in range(28) if tables.lc[i, j] == LC_ALPHA}


def test_labels_invariant_under_group(group_table, tables, rng):
    for _ in range(1000):
        g = group_table.random_element(rng)
        pL, pF = g.perm_L, g.perm_F
        a, b = rng.integers(63, size=2)
        assert tables.cc[pF[a], pF[b]] == tables.cc[a, b]
        i = int(rng.integers(28))
        assert tables.lc[pL[i], pF[a]] == tables.lc[i, a]
        t = tuple(sorted(rng.choice(28, size=3, replace=False).tolist()))
        assert (tuple(sorted(int(pL[v]) for v in t)) in tables.triangle_set) == (t in tables.triangle_set)


def test_generators_preserve_all_tables(gens, tables):
    for g in gens:
        pL, pF = g.perm_L, g.perm_F
        assert (tables.cc[np.ix_(pF, pF)] == tables.cc).all()
        assert (tables.lc[np.ix_(pL, pF)] == tables.lc).all()
        assert {tuple(sorted(int(pL[v]) for v in t)) for t in tables.triangle_set} == tables.triangle_set


def test_graph_of_small(tables):
    g = graph_of(Configuration.of([], [5]), tables)
    assert (g.m, g.n, g.T, g.Ecc, g.Elc, g.conic_family_of) == (0, 1, (), (), (), (0,))
    assert two_graph_stats(Configuration(), tables) == (0, 0, 0, 0)


def test_A_is_same_family(tables, rng):
    for _ in range(200):
        x = _random_config(rng, 2, 5)
        g = graph_of(x, tables)
        fam = g.conic_family_of
        for i, j, c in g.Ecc:
            assert (c == CC_A) == (fam[i] == fam[j])
        # labels constant on A-classes
        lab = {(i, j): c for i, j, c in g.Ecc}
        for i, j, k in combinations(range(g.n), 3):
            if fam[i] == fam[j]:
                assert lab[(i, k) if i < k else (k, i)] == lab[(j, k) if j < k else (k, j)]
        elc = {(i, j): c for i, j, c in g.Elc}
        for a in range(g.m):
            for i, j in combinations(range(g.n), 2):
                if fam[i] == fam[j]:
                    assert elc[(a, i)] == elc[(a, j)]


def test_canonical_form_invariant_under_group(group_table, tables, rng):
    for _ in range(1000):
        m = int(rng.integers(0, 9))
        n = int(rng.integers(0, 9 - m))
        x = _random_config(rng, m, n)
        g = group_table.random_element(rng)
        assert canonical_form(graph_of(apply(g, x), tables)) == canonical_form(graph_of(x, tables))


def test_canonical_matches_brute_force_on_representatives(gens, tables, decomposition):
    for mn in [(4, 0), (0, 3), (2, 2), (3, 1), (1, 3), (5, 0)]:
        reps = decomposition(*mn).representatives
        fast = [canonical_form(graph_of(x, tables)) for x in reps]
        slow = [brute_force_form(graph_of(x, tables)) for x in reps]
        for a, b in combinations(range(len(reps)), 2):
            assert (fast[a] == fast[b]) == (slow[a] == slow[b])


def test_canonical_bound(tables):
    g = graph_of(Configuration.of(range(25)), tables)
    with pytest.raises(ResourceLimitError):
        canonical_form(g)
    with pytest.raises(ResourceLimitError):
        brute_force_form(graph_of(Configuration.of(range(9)), tables))


def test_six_line_examples(decomposition, tables):
    dec = decomposition(6, 0)
    by_size = {}
    for s, x in dec.orbits:
        by_size.setdefault(s, []).append(x)
    (x,) = by_size[30240]
    assert len(graph_of(x, tables).T) == 4
    assert two_graph_stats(by_size[22680][0], tables) == (8, 2, 10, 16)
    assert two_graph_stats(by_size[1260][0], tables) == (12, 6, 30, 30)
    o1, o2 = by_size[2016][0], by_size[1008][0]
    assert canonical_form(graph_of(o1, tables)) == canonical_form(graph_of(o2, tables))


def test_three_conic_graphs(gens, decomposition, tables):
    gc = count_graphs(0, 3, gens, decomposition=decomposition(0, 3), tables=tables)
    assert (gc.N, gc.G) == (9, 7)
    merged = sorted(sorted(v) for v in gc.forms.values() if len(v) > 1)
    assert merged == [[315, 3780], [336, 5040]]


def test_acc_row(decomposition, tables):
    (x,) = [x for s, x in decomposition(0, 3).orbits if s == 2016]
    assert sorted(c for _, _, c in graph_of(x, tables).Ecc) == [CC_A, CC_C, CC_C]


def test_count_graphs_examples(gens, decomposition, tables):
    assert count_graphs(6, 0, gens, decomposition=decomposition(6, 0), tables=tables).G == 9
    assert count_graphs(2, 2, gens, decomposition=decomposition(2, 2), tables=tables).G == 17
    assert count_graphs(0, 4, gens, decomposition=decomposition(0, 4), tables=tables).G == 22


def _brute_disjoint(x, tables):
    T = graph_of(x, tables).T
    return sum(1 for a, b, c in combinations(T, 3)
               if not set(a) & set(b) and not set(b) & set(c) and not set(a) & set(c))


def test_disjoint_triples_by_brute_force(tables, rng):
    for _ in range(40):
        x = _random_config(rng, int(rng.integers(0, 14)), 0)
        assert disjoint_triangle_triples(x, tables) == _brute_disjoint(x, tables)
    assert disjoint_triangle_triples(Configuration.of(range(3)), tables) == 0


def test_two_graph_stats_by_brute_force(tables, rng):
    for _ in range(40):
        x = _random_config(rng, int(rng.integers(0, 12)), 0)
        T = [set(t) for t in graph_of(x, tables).T]
        a = Counter(len(s & t) for s, t in combinations(T, 2))
        assert two_graph_stats(x, tables) == (len(T), a[0], a[1], a[2])


def test_stats_need_n_zero(tables):
    with pytest.raises(ValueError):
        two_graph_stats(Configuration.of([1], [2]), tables)


def test_complement_statistic(decomposition, tables):
    dec = decomposition(6, 0)
    got = {}
    for size in (2016, 1008):
        (x,) = [x for s, x in dec.orbits if s == size]
        c = complement(x)
        got[size] = (two_graph_stats(c, tables)[0], disjoint_triangle_triples(c, tables))
    assert got == {2016: (600, 8203640), 1008: (600, 8203760)}


def test_lc_signature_canonical(decomposition, tables):
    sigs = {lc_signature(graph_of(x, tables)) for x in decomposition(2, 2).representatives}
    assert len(sigs) == 7


def test_json_dump(tables):
    import json
    g = graph_of(Configuration.of([0, 1, 2, 3], [0, 0, 5]), tables)
    obj = json.loads(g.dumps())
    assert set(obj) == {"m", "n", "families", "T", "Ecc", "Elc", "canonical"}
    assert obj["families"] == [0, 0, 1]
    assert ["A"] == [lab for i, j, lab in obj["Ecc"] if (i, j) == (0, 1)]
    assert bytes.fromhex(obj["canonical"]) == canonical_form(g)
