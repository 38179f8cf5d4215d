"""Command-line front end.

Exit codes: 0 success, 1 check failure or stale cache, 2 usage error,
3 resource limit.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Callable

import click

from . import checks as chk
from .burnside import count_orbits, d_of
from .census import build_census, default_census_path, load_or_build, write_census
from .cone import face_census
from .errors import CacheMismatchError, E7OrbitsError, InternalCheckError, ResourceLimitError
from .intgraph import count_graphs, graph_of, two_graph_stats
from .lattice import build_lattice, build_picard_data, default_data
from .orbits import DEFAULT_LIMIT, decompose
from .weyl import DEFAULT_MEMORY_BUDGET, generators

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# anticanonical class used by the hidden fault-injection flag of `lattice verify`
_CORRUPT_H = (3, -1, -1, -1, -1, -1, -1, 0)


@dataclass(frozen=True)
class RunConfig:
    census_path: Path | None = None
    orbit_limit: int = DEFAULT_LIMIT
    memory_budget: int = DEFAULT_MEMORY_BUDGET
    threads: int = 1
    output_format: str = "text"
    out: Path | None = None

    def __post_init__(self):
        if self.orbit_limit <= 0 or self.memory_budget <= 0 or self.threads <= 0:
            raise ValueError("limits and thread counts must be positive")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def census(self):
        path = self.census_path or default_census_path()
        if not path.exists():
            click.echo(f"building cycle census -> {path} (one-time, about 15 s)", err=True)
        return load_or_build(path)


def _threads(value: str | None) -> int | None:
    if value is None:
        return None
    if value == "auto":
        return os.cpu_count() or 1
    try:
        n = int(value)
    except ValueError:
        raise click.BadParameter(f"expected an integer or 'auto', got {value!r}")
    if n < 1:
        raise click.BadParameter("must be at least 1")
    return n


def _common(f: Callable) -> Callable:
    """Options accepted both before and after the subcommand name."""
    opts = [
        click.option("--census", "census_path", type=click.Path(path_type=Path), default=None,
                     help="Census cache file (default: $E7ORBITS_CENSUS or the user cache dir)."),
        click.option("--limit", "orbit_limit", type=click.IntRange(min=1), default=None,
                     help=f"Largest |P^(m,n)| for explicit orbits (default {DEFAULT_LIMIT})."),
        click.option("--memory-budget", type=click.IntRange(min=1), default=None,
                     help="Byte budget for group enumeration."),
        click.option("--threads", type=str, default=None, help="Worker threads, an integer or 'auto'."),
        click.option("--format", "output_format", type=click.Choice(["json", "csv", "text"]), default=None),
        click.option("--out", type=click.Path(path_type=Path), default=None, help="Write output here."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _config(ctx: click.Context, **overrides) -> RunConfig:
    cfg: RunConfig = ctx.find_root().obj
    given = {k: v for k, v in overrides.items() if v is not None}
    if "threads" in given:
        given["threads"] = _threads(given["threads"])
    return replace(cfg, **given) if given else cfg


def _emit(cfg: RunConfig, payload: Any, text: str, rows: list[list] | None = None) -> None:
    if cfg.output_format == "json":
        body = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows or [])
        body = buf.getvalue()
    else:
        body = text if text.endswith("\n") else text + "\n"
    if cfg.out:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(body, encoding="utf-8")
    else:
        click.echo(body, nl=False)


def _guard(fn: Callable[[], int | None]) -> None:
    try:
        code = fn() or EXIT_OK
    except ResourceLimitError as exc:
        click.echo(f"resource limit: {exc}", err=True)
        code = EXIT_RESOURCE
    except CacheMismatchError as exc:
        click.echo(f"refusing stale census: {exc}; rebuild with `e7orbits census build --force`", err=True)
        code = EXIT_CHECK
    except InternalCheckError as exc:
        click.echo(f"internal check failed: {exc}", err=True)
        code = EXIT_CHECK
    sys.exit(code)


def _results(cfg: RunConfig, results: list[chk.CheckResult]) -> int:
    passed = sum(r.ok for r in results)
    text = "\n".join(r.line() for r in results) + f"\n{passed}/{len(results)} checks passed"
    rows = [["group", "check", "ok", "actual"]] + [[r.group, r.name, r.ok, json.dumps(chk._plain(r.actual))]
                                                  for r in results]
    _emit(cfg, {"passed": passed, "total": len(results), "checks": [r.to_json() for r in results]}, text, rows)
    return EXIT_OK if passed == len(results) else EXIT_CHECK


# -- commands --------------------------------------------------------------------------

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@_common
@click.option("-v", "--verbose", count=True, help="Log progress to stderr (-vv for debug).")
@click.pass_context
def main(ctx, census_path, orbit_limit, memory_budget, threads, output_format, out, verbose):
    """Orbits of W(E7) on bitangent / conic-family configurations of a plane quartic."""
    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)],
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    base = RunConfig()
    ctx.obj = _config_from(base, census_path, orbit_limit, memory_budget, threads, output_format, out)


def _config_from(base, census_path, orbit_limit, memory_budget, threads, output_format, out) -> RunConfig:
    given = dict(census_path=census_path, orbit_limit=orbit_limit, memory_budget=memory_budget,
                 threads=_threads(threads), output_format=output_format, out=out)
    return replace(base, **{k: v for k, v in given.items() if v is not None})


@main.group()
def lattice():
    """Lattice and cone cardinality checks."""


@lattice.command("verify")
@_common
@click.option("--inject-fault", is_flag=True, hidden=True, help="Verify a deliberately wrong basis.")
@click.pass_context
def lattice_verify(ctx, inject_fault, **opts):
    """Check 56/126/28/63, triangles, quadruples, labels and the face census."""
    cfg = _config(ctx, **opts)

    def body():
        try:
            data = build_picard_data(build_lattice(h=_CORRUPT_H)) if inject_fault else default_data()
        except E7OrbitsError as exc:
            return _results(cfg, [chk.CheckResult("cardinalities", "lattice", "valid basis", None, False,
                                                  f"{type(exc).__name__}: {exc}")])
        return _results(cfg, chk.lattice_verify(chk.Session(data=data)))

    _guard(body)


@main.group()
def census():
    """The cycle-type census of the group."""


@census.command("build")
@_common
@click.option("--force", is_flag=True, help="Rebuild even if a cache exists.")
@click.pass_context
def census_build(ctx, force, **opts):
    """Enumerate the group and write the census cache."""
    cfg = _config(ctx, **opts)

    def body():
        path = cfg.census_path or default_census_path()
        if path.exists() and not force:
            c = load_or_build(path)
            status = "exists"
        else:
            click.echo(f"enumerating 1451520 group elements -> {path}", err=True)
            c = build_census(memory_budget=cfg.memory_budget)
            write_census(c, path)
            status = "built"
        payload = {"path": str(path), "status": status, "group_order": c.group_order, "cycle_types": len(c.entries)}
        _emit(cfg, payload, f"census {status}: {path} ({len(c.entries)} cycle types, order {c.group_order})",
              [["path", "status", "group_order", "cycle_types"], [str(path), status, c.group_order, len(c.entries)]])

    _guard(body)


@main.command("count")
@_common
@click.argument("m", type=click.IntRange(0, 28))
@click.argument("n", type=click.IntRange(min=0))
@click.pass_context
def count_cmd(ctx, m, n, **opts):
    """N^(m,n) by Burnside's lemma."""
    cfg = _config(ctx, **opts)

    def body():
        r = count_orbits(cfg.census(), m, n)
        _emit(cfg, {"m": m, "n": n, "d": r.d, "N": r.N}, str(r.N), [["m", "n", "d", "N"], [m, n, r.d, r.N]])

    _guard(body)


@main.command("table")
@_common
@click.option("--m-max", type=click.IntRange(0, 28), default=14, show_default=True)
@click.option("--n-max", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--m-min", type=click.IntRange(0, 28), default=0, show_default=True)
@click.option("--n-min", type=click.IntRange(min=0), default=0, show_default=True)
@click.pass_context
def table_cmd(ctx, m_max, n_max, m_min, n_min, **opts):
    """N^(m,n) over a rectangle of (m, n); rows are m, columns n."""
    cfg = _config(ctx, **opts)

    def body():
        c = cfg.census()
        ms, ns = range(m_min, m_max + 1), range(n_min, n_max + 1)
        grid = [[count_orbits(c, m, n).N for n in ns] for m in ms]
        width = max(len(str(x)) for row in grid for x in row) if grid and grid[0] else 1
        lines = ["m\\n " + " ".join(str(n).rjust(width) for n in ns)]
        lines += [str(m).rjust(3) + " " + " ".join(str(x).rjust(width) for x in row) for m, row in zip(ms, grid)]
        rows = [["m", "n", "d", "N"]] + [[m, n, d_of(m, n), grid[i][j]]
                                         for i, m in enumerate(ms) for j, n in enumerate(ns)]
        payload = {"m": list(ms), "n": list(ns), "N": grid}
        _emit(cfg, payload, "\n".join(lines), rows)

    _guard(body)


@main.command("orbits")
@_common
@click.argument("m", type=click.IntRange(0, 28))
@click.argument("n", type=click.IntRange(min=0))
@click.pass_context
def orbits_cmd(ctx, m, n, **opts):
    """Explicit orbit decomposition with lexicographically minimal representatives."""
    cfg = _config(ctx, **opts)

    def body():
        dec = decompose(m, n, generators(default_data()), limit=cfg.orbit_limit, threads=cfg.threads)
        lines = [f"d^({m},{n}) = {dec.d}, {len(dec)} orbits"]
        lines += [f"{size:>8}  lines={list(x.lines)} conics={list(x.conics)}" for size, x in dec.orbits]
        rows = [["size", "lines", "conics"]] + [[s, " ".join(map(str, x.lines)), " ".join(map(str, x.conics))]
                                                for s, x in dec.orbits]
        _emit(cfg, dec.to_json(), "\n".join(lines), rows)

    _guard(body)


@main.group()
def graphs():
    """Intersection graphs of orbit representatives."""


@graphs.command("count")
@_common
@click.argument("m", type=click.IntRange(0, 28))
@click.argument("n", type=click.IntRange(min=0))
@click.pass_context
def graphs_count(ctx, m, n, **opts):
    """G^(m,n): the number of non-isomorphic intersection graphs."""
    cfg = _config(ctx, **opts)

    def body():
        gc = count_graphs(m, n, generators(default_data()), limit=cfg.orbit_limit, threads=cfg.threads)
        classes = sorted(sorted(v) for v in gc.forms.values())
        payload = {"m": m, "n": n, "N": gc.N, "G": gc.G, "orbit_sizes_by_graph": classes}
        text = f"N = {gc.N}\nG = {gc.G}"
        _emit(cfg, payload, text, [["m", "n", "N", "G"], [m, n, gc.N, gc.G]])

    _guard(body)


@graphs.command("stats")
@_common
@click.argument("m", type=click.IntRange(0, 28))
@click.pass_context
def graphs_stats(ctx, m, **opts):
    """(|T|, a0, a1, a2) for each orbit of lines-only configurations."""
    cfg = _config(ctx, **opts)

    def body():
        dec = decompose(m, 0, generators(default_data()), limit=cfg.orbit_limit, threads=cfg.threads)
        rows = [(size, *two_graph_stats(x)) for size, x in dec.orbits]
        keys = ["size", "T", "a0", "a1", "a2"]
        text = "\n".join(["    size    |T|    a0    a1    a2"] + ["".join(f"{v:>8}" for v in r) for r in rows])
        _emit(cfg, {"m": m, "orbits": [dict(zip(keys, r)) for r in rows]}, text, [keys] + [list(r) for r in rows])

    _guard(body)


@graphs.command("dump")
@_common
@click.argument("m", type=click.IntRange(0, 28))
@click.argument("n", type=click.IntRange(min=0))
@click.pass_context
def graphs_dump(ctx, m, n, **opts):
    """JSON intersection graph of every orbit representative."""
    cfg = _config(ctx, **opts)

    def body():
        dec = decompose(m, n, generators(default_data()), limit=cfg.orbit_limit, threads=cfg.threads)
        items = [{"size": s, "configuration": x.to_json(), "graph": graph_of(x).to_json()} for s, x in dec.orbits]
        text = "\n".join(json.dumps(i, sort_keys=True, ensure_ascii=False) for i in items)
        rows = [["size", "lines", "conics", "canonical"]] + [
            [i["size"], " ".join(map(str, i["configuration"]["lines"])),
             " ".join(map(str, i["configuration"]["conics"])), i["graph"]["canonical"]] for i in items]
        _emit(cfg, {"m": m, "n": n, "graphs": items}, text, rows)

    _guard(body)


@main.group()
def cone():
    """Face census of the cone."""


@cone.command("faces")
@_common
@click.pass_context
def cone_faces(ctx, **opts):
    """Face counts by dimension, rays split into 7A1 and 6A1~."""
    cfg = _config(ctx, **opts)

    def body():
        fc = face_census()
        dims = sorted(fc["faces"], key=int, reverse=True)
        text = ("dim " + " ".join(f"{d:>6}" for d in dims) + "\n#   " + " ".join(f"{fc['faces'][d]:>6}" for d in dims)
                + f"\nrays: 7A1 = {fc['rays']['7A1']}, 6A1~ = {fc['rays']['6A1~']}")
        rows = [["dim", "count"]] + [[d, fc["faces"][d]] for d in dims]
        _emit(cfg, fc, text, rows)

    _guard(body)


@main.command("paper-check")
@_common
@click.option("--no-sweep", is_flag=True, help="Skip the orbit-count vs Burnside sweep over all feasible cells.")
@click.pass_context
def full_check_cmd(ctx, no_sweep, **opts):
    """Run every reproduction check and print a scoreboard."""
    cfg = _config(ctx, **opts)

    def body():
        session = chk.Session(census_loader=cfg.census, limit=cfg.orbit_limit, threads=cfg.threads)
        return _results(cfg, chk.full_check(session, sweep=not no_sweep))

    _guard(body)


if __name__ == "__main__":
    main()
