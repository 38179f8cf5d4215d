from itertools import combinations, combinations_with_replacement

import pytest

from e7orbits.burnside import (
    burnside_sum, complement_symmetric, count_orbits, count_table, d_of, fixed_configs,
)
from e7orbits.errors import InternalCheckError
from e7orbits.weyl import GROUP_ORDER, CycleCensus, cycle_type


def test_d_of():
    assert d_of(0, 0) == 1
    assert d_of(4, 0) == 20475
    assert d_of(0, 4) == 720720
    assert d_of(2, 2) == 762048
    assert d_of(6, 0) == 376740
    assert d_of(0, 3) == 43680
    with pytest.raises(ValueError):
        d_of(29, 0)
    with pytest.raises(ValueError):
        d_of(0, -1)


def _brute_fixed(perm_L, perm_F, m, n):
    count = 0
    for lines in combinations(range(28), m):
        if sorted(perm_L[i] for i in lines) != list(lines):
            continue
        for conics in combinations_with_replacement(range(63), n):
            if sorted(perm_F[i] for i in conics) == list(conics):
                count += 1
    return count


@pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (1, 1), (2, 1)])
def test_fixed_configs_by_brute_force(group_table, rng, m, n):
    for _ in range(4):
        g = group_table.random_element(rng)
        pL, pF = g.perm_L.tolist(), g.perm_F.tolist()
        lam_L, lam_F = cycle_type(g.perm)
        assert fixed_configs(lam_L, lam_F, m, n) == _brute_fixed(pL, pF, m, n)


def test_fixed_configs_identity():
    one_L, one_F = (1,) * 28, (1,) * 63
    for m, n in [(0, 0), (5, 0), (0, 5), (3, 4)]:
        assert fixed_configs(one_L, one_F, m, n) == d_of(m, n)


def test_small_counts(census):
    assert count_orbits(census, 0, 0).N == 1
    assert count_orbits(census, 1, 0).N == 1
    assert count_orbits(census, 0, 1).N == 1
    assert count_orbits(census, 28, 0).N == 1


def test_divisibility_grid(census):
    for m in range(29):
        for n in range(0, 8 if m < 8 else 2):
            assert burnside_sum(census, m, n) % GROUP_ORDER == 0


def test_complement_symmetry(census):
    assert complement_symmetric(census)


def test_count_table_shape(census):
    t = count_table(census, 3, 2)
    assert len(t) == 4 and all(len(r) == 3 for r in t)
    assert t[0][0] == 1 and t[2][2] == 23


def test_corrupt_census_detected(census):
    # an extra identity adds d^(3,1) = 206388 to the sum, which is not a multiple of the order
    ident = ((1,) * 28, (1,) * 63)
    entries = [(a, b, c + 1 if (a, b) == ident else c) for a, b, c in census.entries]
    bad = CycleCensus(entries, census.group_order)
    with pytest.raises(InternalCheckError):
        count_orbits(bad, 3, 1)


def test_matches_explicit_orbits(census, decomposition):
    for m, n in [(1, 1), (3, 0), (0, 2), (2, 1), (5, 0)]:
        assert count_orbits(census, m, n).N == len(decomposition(m, n))
