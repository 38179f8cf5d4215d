"""Orbit counts on P^(m,n) = (m-subsets of Lbar) x (n-multisets of Fbar) by Burnside's lemma."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InternalCheckError
from .weyl import NF, NL, CycleCensus


@dataclass(frozen=True)
class CountResult:
    m: int
    n: int
    d: int
    N: int


def _check_mn(m: int, n: int) -> None:
    if not (0 <= m <= NL) or n < 0:
        raise ValueError(f"need 0 <= m <= {NL} and n >= 0, got m={m}, n={n}")


def d_of(m: int, n: int) -> int:
    """|P^(m,n)| = C(28, m) * C(n + 62, 62)."""
    _check_mn(m, n)
    return comb(NL, m) * comb(n + NF - 1, NF - 1)


def _subset_coeff(cycles: Sequence[int], m: int) -> int:
    # [x^m] prod (1 + x^l): invariant m-subsets are unions of whole cycles
    poly = [1] + [0] * m
    for length in cycles:
        for deg in range(m, length - 1, -1):
            poly[deg] += poly[deg - length]
    return poly[m]


def _multiset_coeff(cycles: Sequence[int], n: int) -> int:
    # [x^n] prod 1/(1 - x^l): invariant n-multisets take each cycle with some multiplicity
    poly = [1] + [0] * n
    for length in cycles:
        for deg in range(length, n + 1):
            poly[deg] += poly[deg - length]
    return poly[n]


def fixed_configs(lam_L: Sequence[int], lam_F: Sequence[int], m: int, n: int) -> int:
    """Number of configurations in P^(m,n) fixed by an element of the given cycle type."""
    return _subset_coeff(lam_L, m) * _multiset_coeff(lam_F, n)


def burnside_sum(census: CycleCensus, m: int, n: int) -> int:
    _check_mn(m, n)
    return sum(count * fixed_configs(lam_L, lam_F, m, n) for lam_L, lam_F, count in census.entries)


def count_orbits(census: CycleCensus, m: int, n: int) -> CountResult:
    total = burnside_sum(census, m, n)
    N, rem = divmod(total, census.group_order)
    if rem:
        raise InternalCheckError(
            f"Burnside sum for (m,n)=({m},{n}) is not divisible by {census.group_order}; census is corrupt"
        )
    return CountResult(m, n, d_of(m, n), N)


def count_table(census: CycleCensus, m_max: int, n_max: int) -> list[list[int]]:
    """N^(m,n) for 0 <= m <= m_max, 0 <= n <= n_max, indexed [m][n]."""
    return [[count_orbits(census, m, n).N for n in range(n_max + 1)] for m in range(m_max + 1)]


def complement_symmetric(census: CycleCensus) -> bool:
    return all(count_orbits(census, m, 0).N == count_orbits(census, NL - m, 0).N for m in range(NL + 1))
