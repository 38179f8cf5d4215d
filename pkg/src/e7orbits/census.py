"""On-disk cache of the cycle-type census.

Line-delimited JSON: one header record followed by one record per census
entry, ``{"lam_L": [...], "lam_F": [...], "count": n}``.  The header carries
the group order and fingerprints of the generators and the lattice basis so a
cache from a different build is refused.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .errors import CacheMismatchError
from .lattice import PicardData, default_data
from .weyl import CycleCensus, cycle_census, enumerate_group, generator_fingerprint, generators

log = logging.getLogger(__name__)

FORMAT_VERSION = 1


def default_census_path() -> Path:
    env = os.environ.get("E7ORBITS_CENSUS")
    if env:
        return Path(env)
    base = Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache"))
    return base / "e7orbits" / "census.jsonl"


def _header(data: PicardData, census: CycleCensus) -> dict:
    return {
        "format": FORMAT_VERSION,
        "group_order": census.group_order,
        "generators": generator_fingerprint(generators(data)),
        "basis": data.fingerprint(),
    }


def build_census(data: PicardData | None = None, memory_budget: int | None = None) -> CycleCensus:
    data = data or default_data()
    gens = generators(data)
    kwargs = {} if memory_budget is None else {"memory_budget": memory_budget}
    table = enumerate_group(gens, **kwargs)
    return cycle_census(table)


def write_census(census: CycleCensus, path: Path, data: PicardData | None = None) -> None:
    data = data or default_data()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(_header(data, census), sort_keys=True) + "\n")
        for lam_L, lam_F, count in census.entries:
            fh.write(json.dumps({"lam_L": list(lam_L), "lam_F": list(lam_F), "count": count}, sort_keys=True) + "\n")
    os.replace(tmp, path)


def read_census(path: Path, data: PicardData | None = None) -> CycleCensus:
    data = data or default_data()
    with open(path, encoding="utf-8") as fh:
        lines = [json.loads(line) for line in fh if line.strip()]
    if not lines:
        raise CacheMismatchError(f"{path}: empty census file")
    header, records = lines[0], lines[1:]
    expected = {
        "format": FORMAT_VERSION,
        "generators": generator_fingerprint(generators(data)),
        "basis": data.fingerprint(),
    }
    for key, value in expected.items():
        if header.get(key) != value:
            raise CacheMismatchError(f"{path}: {key} fingerprint does not match the current build")
    census = CycleCensus(
        [(tuple(r["lam_L"]), tuple(r["lam_F"]), int(r["count"])) for r in records],
        int(header["group_order"]),
    )
    census.check()
    return census


def load_or_build(path: Path | None = None, data: PicardData | None = None, rebuild: bool = False) -> CycleCensus:
    """Read the cached census, building and writing it first when absent."""
    path = Path(path) if path else default_census_path()
    if path.exists() and not rebuild:
        return read_census(path, data)
    log.info("building cycle census (one-time, ~15 s) -> %s", path)
    census = build_census(data)
    write_census(census, path, data)
    return census
