"""Named pass/fail checks against the published values.

Each check is a (group, name, expected, thunk) tuple; ``run`` evaluates the
thunks, turning any package error into a failed row instead of aborting.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from . import reference as ref
from .burnside import complement_symmetric, count_orbits, d_of
from .cone import clique_census, low_degree_root_check, six_A1_tilde_configs
from .errors import E7OrbitsError
from .intgraph import (
    LABEL_NAMES, EdgeTables, build_edge_tables, count_graphs, disjoint_triangle_triples, graph_of,
    lc_signature, two_graph_stats,
)
from .lattice import PicardData, default_data
from .orbits import DEFAULT_LIMIT, OrbitDecomposition, complement, decompose
from .weyl import GROUP_ORDER, NL, CycleCensus, generators, order_consistency_check

log = logging.getLogger(__name__)


@dataclass
class CheckResult:
    group: str
    name: str
    expected: Any
    actual: Any
    ok: bool
    error: str = ""

    def line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        if self.error:
            return f"{self.name}: {status} ({self.error})"
        if self.ok:
            return f"{self.name}: {_short(self.actual)} {status}"
        return f"{self.name}: {status} (expected {_short(self.expected)}, got {_short(self.actual)})"

    def to_json(self) -> dict:
        return {"group": self.group, "name": self.name, "ok": self.ok,
                "expected": _plain(self.expected), "actual": _plain(self.actual), "error": self.error}


def _short(v: Any) -> str:
    s = str(_plain(v))
    return s if len(s) <= 80 else s[:77] + "..."


def _plain(v: Any) -> Any:
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


Check = tuple[str, str, Any, Callable[[], Any]]


@dataclass
class Session:
    """Shared, lazily built state for a batch of checks."""

    data: PicardData = field(default_factory=default_data)
    census_loader: Callable[[], CycleCensus] | None = None
    limit: int = DEFAULT_LIMIT
    threads: int = 1
    _census: CycleCensus | None = None
    _tables: EdgeTables | None = None
    _decs: dict = field(default_factory=dict)

    @property
    def gens(self):
        return generators(self.data)

    @property
    def census(self) -> CycleCensus:
        if self._census is None:
            if self.census_loader is None:
                raise E7OrbitsError("no census available")
            self._census = self.census_loader()
        return self._census

    @property
    def tables(self) -> EdgeTables:
        if self._tables is None:
            self._tables = build_edge_tables(self.data)
        return self._tables

    def decomposition(self, m: int, n: int) -> OrbitDecomposition:
        if (m, n) not in self._decs:
            self._decs[(m, n)] = decompose(m, n, self.gens, limit=self.limit, threads=self.threads)
        return self._decs[(m, n)]

    def graphs(self, m: int, n: int) -> int:
        return count_graphs(m, n, self.gens, decomposition=self.decomposition(m, n), tables=self.tables).G


def run(checks: Iterable[Check]) -> list[CheckResult]:
    out = []
    for group, name, expected, thunk in checks:
        try:
            actual = thunk()
            out.append(CheckResult(group, name, expected, actual, actual == expected))
        except (E7OrbitsError, ValueError) as exc:
            out.append(CheckResult(group, name, expected, None, False, f"{type(exc).__name__}: {exc}"))
        log.info("%s", out[-1].line())
    return out


# -- check groups ------------------------------------------------------------------

def lattice_checks(s: Session) -> list[Check]:
    d = s.data
    return [
        ("cardinalities", "L", 56, lambda: len(d.L)),
        ("cardinalities", "F", 126, lambda: len(d.F)),
        ("cardinalities", "Lbar", 28, lambda: len(d.Lbar)),
        ("cardinalities", "Fbar", 63, lambda: len(d.Fbar)),
        ("cardinalities", "L^{7}", (576, True), lambda: order_consistency_check(d)),
    ]


def edge_checks(s: Session) -> list[Check]:
    def cc_split():
        iu = np.triu_indices(s.tables.cc.shape[0], 1)
        c = Counter(LABEL_NAMES[int(x)] for x in s.tables.cc[iu])
        return {"B": c["B"], "C": c["C"]}

    def alpha_per_conic():
        return sorted(set((s.tables.lc == 4).sum(axis=0).tolist()))

    return [
        ("triangles", "triangles", 2520, lambda: s.tables.y_triangles),
        ("triangles", "liftable triangles", 1260, lambda: len(s.tables.triangle_set)),
        ("triangles", "quadruples", 315, lambda: len(s.tables.quadruple_set)),
        ("labels", "conic pairs B/C", {"B": 945, "C": 1008}, cc_split),
        ("labels", "alpha lines per conic class", [12], alpha_per_conic),
    ]


def cone_checks(s: Session) -> list[Check]:
    cliques = {}

    def clique(k):
        if not cliques:
            cliques.update(enumerate(clique_census(7, s.data)))
        return cliques[k]

    checks: list[Check] = [("cone", f"faces dim {dim}", v, (lambda k=8 - dim: clique(k)))
                           for dim, v in ref.FACES.items()]
    checks += [
        ("cone", "rays 7A1", ref.RAYS_7A1, lambda: clique(7)),
        ("cone", "rays 6A1~", ref.RAYS_6A1_TILDE, lambda: len(six_A1_tilde_configs(s.data))),
        ("cone", "low-degree (-1)-vectors are L", True, lambda: low_degree_root_check(s.data).ok),
    ]
    return checks


def census_checks(s: Session) -> list[Check]:
    def N(m, n):
        return count_orbits(s.census, m, n).N

    return [
        ("cardinalities", "group order", GROUP_ORDER, lambda: s.census.group_order),
        ("burnside", "N(m,0), m=1..14", ref.N_LINES, lambda: {m: N(m, 0) for m in ref.N_LINES}),
        ("burnside", "N(m,0) = N(28-m,0)", True, lambda: complement_symmetric(s.census)),
        ("burnside", "N(0,n), n=1..10", ref.N_CONICS, lambda: {n: N(0, n) for n in ref.N_CONICS}),
        ("burnside", "N(m,n) mixed", ref.N_MIXED, lambda: {k: N(*k) for k in ref.N_MIXED}),
    ]


def decomposition_checks(s: Session) -> list[Check]:
    return [("orbits", f"orbit sizes {mn}", sorted(sizes), (lambda mn=mn: s.decomposition(*mn).orbit_sizes))
            for mn, sizes in ref.ORBIT_SIZES.items()]


def six_line_rows(s: Session) -> list[tuple]:
    dec = s.decomposition(6, 0)
    rows = [(size, *two_graph_stats(x, s.tables)) for size, x in dec.orbits]
    keys = Counter(r[:2] for r in rows)
    if keys[(2016, 0)] != 1 or keys[(1008, 0)] != 1:
        raise E7OrbitsError("the two orbits with empty two-graph are not identified by (size, |T|)")
    return sorted(rows)


def complement_counts(s: Session) -> dict:
    dec = s.decomposition(6, 0)
    out = {}
    for size in ref.COMPLEMENT_DISJOINT_TRIPLES:
        (x,) = [x for sz, x in dec.orbits if sz == size and two_graph_stats(x, s.tables)[0] == 0]
        c = complement(x)
        out[size] = (two_graph_stats(c, s.tables)[0], disjoint_triangle_triples(c, s.tables))
    return out


def three_conic_labels(s: Session) -> dict:
    out: dict = {}
    for size, x in s.decomposition(0, 3).orbits:
        key = "".join(sorted(LABEL_NAMES[c] for _, _, c in graph_of(x, s.tables).Ecc))
        out.setdefault(key, []).append(size)
    return {k: sorted(v) for k, v in out.items()}


def two_two_signatures(s: Session) -> dict:
    out: dict = {}
    for size, x in s.decomposition(2, 2).orbits:
        g = graph_of(x, s.tables)
        ((_, _, cc),) = g.Ecc
        out.setdefault((lc_signature(g), LABEL_NAMES[cc]), []).append(size)
    return {k: sorted(v) for k, v in out.items()}


def graph_checks(s: Session) -> list[Check]:
    g_mixed = {k: v for k, v in ref.G_MIXED.items() if d_of(*k) <= s.limit}
    return [
        ("graphs", "six-line statistics", sorted(ref.SIX_LINE_STATS), lambda: six_line_rows(s)),
        ("graphs", "22-line complements (|T|, disjoint triples)",
         {k: (ref.COMPLEMENT_TRIANGLES, v) for k, v in ref.COMPLEMENT_DISJOINT_TRIPLES.items()},
         lambda: complement_counts(s)),
        ("graphs", "three-conic labels", {k: sorted(v) for k, v in ref.THREE_CONIC_LABELS.items()},
         lambda: three_conic_labels(s)),
        ("graphs", "two-two signatures", {k: sorted(v) for k, v in ref.TWO_TWO_SIGNATURES.items()},
         lambda: two_two_signatures(s)),
        ("graphs", "G(m,0), m=1..14", ref.G_LINES, lambda: {m: s.graphs(m, 0) for m in ref.G_LINES}),
        ("graphs", "G(0,n), n=1..5", {n: ref.G_CONICS[n] for n in range(1, 6)},
         lambda: {n: s.graphs(0, n) for n in range(1, 6)}),
        ("graphs", "G(m,n) mixed, feasible", g_mixed, lambda: {k: s.graphs(*k) for k in g_mixed}),
    ]


def feasible_cells(limit: int) -> list[tuple[int, int]]:
    cells = []
    for m in range(NL + 1):
        n = 0
        while d_of(m, n) <= limit:
            cells.append((m, n))
            n += 1
    return cells


def sweep_check(s: Session) -> list[Check]:
    def mismatches():
        bad = []
        for m, n in feasible_cells(s.limit):
            got = len(decompose(m, n, s.gens, limit=s.limit, threads=s.threads))
            if got != count_orbits(s.census, m, n).N:
                bad.append((m, n))
        return bad

    return [("orbits", f"orbit count = Burnside count for all d <= {s.limit}", [], mismatches)]


def lattice_verify(s: Session) -> list[CheckResult]:
    return run([*lattice_checks(s), *edge_checks(s), *cone_checks(s)])


def full_check(s: Session, sweep: bool = True) -> list[CheckResult]:
    checks = [*lattice_checks(s), *census_checks(s), *decomposition_checks(s), *edge_checks(s),
              *graph_checks(s), *cone_checks(s)]
    if sweep:
        checks += sweep_check(s)
    return run(checks)
