"""The odd unimodular lattice I_{1,7} with the anticanonical class of a
degree-2 del Pezzo surface.

Vectors are plain tuples of 8 Python ints in the basis e0, e1, ..., e7 with
Gram matrix diag(1, -1, ..., -1).  The anticanonical class is
h = 3 e0 - (e1 + ... + e7), so that <h, h> = 2 and <h, e_i> = 1.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import InternalCheckError

RANK = 8
Vector = tuple[int, ...]


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...]
    h: Vector

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(RANK) for j in range(RANK) if g[i][j])

    def norm(self, v: Sequence[int]) -> int:
        return self.pair(v, v)

    def fingerprint(self) -> dict:
        return {"gram": [list(r) for r in self.gram], "h": list(self.h)}


def build_lattice(h: Vector | None = None) -> Lattice:
    """Return I_{1,7} with the anticanonical class h (overridable for fault injection)."""
    gram = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(RANK)) for i in range(RANK))
    if h is None:
        h = (3,) + (-1,) * 7
    return Lattice(gram=gram, h=tuple(h))


def iota(lattice: Lattice, v: Sequence[int]) -> Vector:
    """Covering involution: fixes h and acts as -1 on its orthogonal complement."""
    k = lattice.pair(v, lattice.h)
    return tuple(k * a - b for a, b in zip(lattice.h, v))


def project_to_sigma(lattice: Lattice, v: Sequence[int]) -> tuple[Fraction, ...]:
    """Orthogonal projection of v onto the complement of h, exactly."""
    c = Fraction(lattice.pair(v, lattice.h), lattice.norm(lattice.h))
    return tuple(Fraction(a) - c * b for a, b in zip(v, lattice.h))


def rational_pair(lattice: Lattice, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    g = lattice.gram
    return sum((u[i] * g[i][i] * v[i] for i in range(RANK)), Fraction(0))


def vectors_with(lattice: Lattice, degree: int, norm: int, bound: int) -> list[Vector]:
    """All v with <v,h> = degree, <v,v> = norm and |v_0| <= bound.

    Needs the diagonal form diag(1, -1, ..., -1): then sum b_i^2 = a^2 - norm
    for v = (a, b), and the degree fixes the linear form sum w_i b_i.
    """
    g = lattice.gram
    if any(g[i][j] for i in range(RANK) for j in range(RANK) if i != j) or g[0][0] != 1 \
            or any(g[i][i] != -1 for i in range(1, RANK)):
        raise ValueError("enumeration assumes the Gram matrix diag(1, -1, ..., -1)")
    weights = [-x for x in lattice.h[1:]]
    out = []
    for a in range(-bound, bound + 1):
        target = a * a - norm
        if target < 0:
            continue
        for tail in _square_sums(weights, target, degree - a * lattice.h[0]):
            out.append((a,) + tail)
    return out


def coordinate_bound(lattice: Lattice, degree: int, norm: int) -> int:
    """Largest |v_0| over integer v with <v,h> = degree and <v,v> = norm.

    With v = (a, b) and h = (h0, h'), Cauchy-Schwarz on the tail gives
    (degree - h0 a)^2 <= |h'|^2 (a^2 - norm); the left side minus the right is
    a quadratic in a with positive leading coefficient, so the set is finite.
    """
    h0, tail = lattice.h[0], lattice.h[1:]
    H = sum(x * x for x in tail)
    if h0 * h0 <= H:
        raise ValueError("h must satisfy h0^2 > |h'|^2 for the bound to exist")

    def ok(a: int) -> bool:
        return a * a >= norm and (degree - h0 * a) ** 2 <= H * (a * a - norm)

    # roots of (h0^2 - H) a^2 - 2 degree h0 a + degree^2 + H norm; scan just past them
    A, B, C = h0 * h0 - H, -2 * degree * h0, degree * degree + H * norm
    disc = max(B * B - 4 * A * C, 0)
    reach = (abs(B) + isqrt(disc) + 1) // (2 * A) + 2
    return max((abs(a) for a in range(-reach, reach + 1) if ok(a)), default=0)


def _square_sums(weights: Sequence[int], target: int, linear: int):
    """Integer tuples b with sum b_i^2 = target and sum w_i b_i = linear."""
    if not weights:
        if target == 0 and linear == 0:
            yield ()
        return
    # Cauchy-Schwarz: linear^2 <= target * |w|^2, otherwise nothing below fits
    if linear * linear > target * sum(w * w for w in weights):
        return
    w, rest = weights[0], weights[1:]
    r = isqrt(target)
    for b in range(-r, r + 1):
        for tail in _square_sums(rest, target - b * b, linear - w * b):
            yield (b,) + tail


def _is_primitive(v: Iterable[int]) -> bool:
    g = 0
    for a in v:
        g = gcd(g, a)
    return g == 1


@dataclass
class PointSet:
    """An ordered set of lattice vectors with its cached pairing table.

    ``kind`` is one of ``"L"``, ``"F"``, ``"Lbar"``, ``"Fbar"``.  For the
    barred kinds the members are class representatives modulo the covering
    involution.
    """

    members: list[Vector]
    kind: str
    lattice: Lattice = field(repr=False)

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.members)}
        if len(self.index) != len(self.members):
            raise InternalCheckError(f"duplicate vectors in point set {self.kind}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Vector:
        return self.members[i]

    @cached_property
    def pairing_table(self) -> np.ndarray:
        a = np.array(self.members, dtype=np.int64)
        g = np.array(self.lattice.gram, dtype=np.int64)
        return a @ g @ a.T


def enumerate_L(lattice: Lattice, bound: int | None = None) -> PointSet:
    """All v with <v,h> = 1 and <v,v> = -1 (the 56 lifts of bitangents)."""
    if bound is None:
        bound = coordinate_bound(lattice, 1, -1)
    vs = sorted(vectors_with(lattice, 1, -1, bound))
    if len(vs) != 56:
        raise InternalCheckError(f"expected 56 vectors in L, found {len(vs)}")
    return PointSet(vs, "L", lattice)


def enumerate_F(lattice: Lattice, bound: int | None = None) -> PointSet:
    """All primitive v with <v,h> = 2 and <v,v> = 0 (the 126 conic pencils)."""
    if bound is None:
        bound = coordinate_bound(lattice, 2, 0)
    vs = sorted(v for v in vectors_with(lattice, 2, 0, bound) if _is_primitive(v))
    if len(vs) != 126:
        raise InternalCheckError(f"expected 126 vectors in F, found {len(vs)}")
    return PointSet(vs, "F", lattice)


def canonical_order(lattice: Lattice, vectors: Iterable[Sequence[int]]) -> tuple[list[Vector], list[Vector]]:
    """Sort ``vectors`` lexicographically and pick one representative per iota-class.

    The representative of {v, iota(v)} is the lexicographically smaller one;
    representatives are returned in lexicographic order, which fixes the class
    indices used everywhere else.
    """
    vs = [tuple(v) for v in vectors]
    if len(set(vs)) != len(vs):
        raise InternalCheckError("duplicate input vector")
    pool = set(vs)
    reps = set()
    for v in vs:
        w = iota(lattice, v)
        if w not in pool:
            raise InternalCheckError(f"input is not closed under iota: {v}")
        if w == v:
            raise InternalCheckError(f"iota fixes {v}")
        reps.add(min(v, w))
    return sorted(vs), sorted(reps)


@dataclass
class PicardData:
    """Everything the rest of the package needs from the lattice."""

    lattice: Lattice
    L: PointSet
    F: PointSet
    Lbar: PointSet
    Fbar: PointSet

    def lift_pair(self, kind: str, i: int) -> tuple[Vector, Vector]:
        rep = (self.Lbar if kind == "L" else self.Fbar)[i]
        return rep, iota(self.lattice, rep)

    def class_of(self, v: Sequence[int]) -> tuple[str, int]:
        """Return (kind, class index) of a vector of L or F."""
        v = tuple(v)
        rep = min(v, iota(self.lattice, v))
        if rep in self.Lbar.index:
            return "L", self.Lbar.index[rep]
        if rep in self.Fbar.index:
            return "F", self.Fbar.index[rep]
        raise InternalCheckError(f"{v} is neither in L nor in F")

    def fingerprint(self) -> str:
        payload = {
            **self.lattice.fingerprint(),
            "Lbar": [list(v) for v in self.Lbar],
            "Fbar": [list(v) for v in self.Fbar],
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()


def build_picard_data(lattice: Lattice | None = None) -> PicardData:
    lattice = lattice or build_lattice()
    L = enumerate_L(lattice)
    F = enumerate_F(lattice)
    _, lreps = canonical_order(lattice, L)
    _, freps = canonical_order(lattice, F)
    return PicardData(
        lattice=lattice,
        L=L,
        F=F,
        Lbar=PointSet(lreps, "Lbar", lattice),
        Fbar=PointSet(freps, "Fbar", lattice),
    )


_DEFAULT: PicardData | None = None


def default_data() -> PicardData:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = build_picard_data()
    return _DEFAULT
