import json

import pytest
from click.testing import CliRunner

from e7orbits.cli import RunConfig, main


@pytest.fixture
def run(census_path):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, ["--census", str(census_path), *args], catch_exceptions=False)

    return invoke


def test_lattice_verify(run):
    r = run("lattice", "verify")
    assert r.exit_code == 0
    assert "L: 56 OK" in r.output and "triangles: 2520 OK" in r.output


def test_lattice_verify_fault_injection(run):
    r = run("lattice", "verify", "--inject-fault")
    assert r.exit_code == 1 and "FAIL" in r.output


def test_count(run):
    assert run("count", "0", "10").output.strip() == "490750"
    assert run("count", "0", "0").output.strip() == "1"
    obj = json.loads(run("--format", "json", "count", "2", "2").output)
    assert obj == {"m": 2, "n": 2, "d": 762048, "N": 23}


def test_options_after_subcommand(run):
    obj = json.loads(run("count", "2", "2", "--format", "json").output)
    assert obj["N"] == 23


def test_table(run):
    obj = json.loads(run("--format", "json", "table", "--m-min", "1", "--m-max", "14").output)
    assert [row[0] for row in obj["N"]] == [1, 1, 2, 3, 5, 10, 16, 23, 37, 54, 70, 90, 101, 103]
    csv_out = run("--format", "csv", "table", "--m-max", "0", "--n-min", "10", "--n-max", "10").output
    assert csv_out.splitlines() == ["m,n,d,N", "0,10,536211932256,490750"]


def test_orbits(run):
    obj = json.loads(run("--format", "json", "orbits", "0", "3").output)
    assert sorted(obj["orbit_sizes"]) == [63, 315, 336, 1890, 2016, 3780, 5040, 15120, 15120]
    assert len(obj["representatives"]) == 9


def test_graphs(run):
    r = run("graphs", "count", "6", "0")
    assert "G = 9" in r.output and "N = 10" in r.output
    stats = json.loads(run("--format", "json", "graphs", "stats", "6").output)
    assert {(o["size"], o["T"], o["a0"], o["a1"], o["a2"]) for o in stats["orbits"]} >= {(1260, 12, 6, 30, 30)}
    dump = json.loads(run("--format", "json", "graphs", "dump", "0", "2").output)
    assert len(dump["graphs"]) == 3 and all("canonical" in g["graph"] for g in dump["graphs"])


def test_cone_faces(run):
    obj = json.loads(run("--format", "json", "cone", "faces").output)
    assert obj["faces"]["1"] == 702 and obj["rays"] == {"6A1~": 126, "7A1": 576}


def test_resource_limit_exit(run):
    r = run("orbits", "0", "6")
    assert r.exit_code == 3 and "109453344" in r.output


def test_usage_errors(run):
    assert run("count", "29", "0").exit_code == 2
    assert run("--format", "xml", "count", "1", "1").exit_code == 2
    assert run("--threads", "zero", "count", "1", "1").exit_code == 2
    assert run("frobnicate").exit_code == 2


def test_stale_census_exit(tmp_path, census_path):
    lines = census_path.read_text().splitlines()
    header = json.loads(lines[0])
    header["generators"] = "0" * 64
    bad = tmp_path / "stale.jsonl"
    bad.write_text("\n".join([json.dumps(header)] + lines[1:]) + "\n")
    r = CliRunner().invoke(main, ["--census", str(bad), "count", "1", "1"])
    assert r.exit_code == 1


def test_out_file_and_thread_determinism(run, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("--format", "json", "--threads", "1", "--out", str(a), "orbits", "2", "2")
    run("--format", "json", "--threads", "2", "--out", str(b), "orbits", "2", "2")
    assert a.read_bytes() == b.read_bytes() and len(a.read_bytes()) > 100


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(orbit_limit=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")
    assert RunConfig().threads == 1


def test_census_build(tmp_path):
    path = tmp_path / "c.jsonl"
    r = CliRunner().invoke(main, ["--census", str(path), "census", "build"])
    assert r.exit_code == 0 and path.exists() and "30 cycle types" in r.output
    r = CliRunner().invoke(main, ["--census", str(path), "census", "build"])
    assert "exists" in r.output
