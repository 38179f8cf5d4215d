import numpy as np
import pytest

from e7orbits.census import write_census
from e7orbits.intgraph import build_edge_tables
from e7orbits.lattice import default_data
from e7orbits.orbits import decompose
from e7orbits.weyl import cycle_census, enumerate_group, generators

# criterion number -> (passed, detail); filled by test_acceptance, printed at the end
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def data():
    return default_data()


@pytest.fixture(scope="session")
def gens(data):
    return generators(data)


@pytest.fixture(scope="session")
def group_table(gens):
    return enumerate_group(gens)


@pytest.fixture(scope="session")
def census(group_table):
    return cycle_census(group_table)


@pytest.fixture(scope="session")
def census_path(census, data, tmp_path_factory):
    path = tmp_path_factory.mktemp("cache") / "census.jsonl"
    write_census(census, path, data)
    return path


@pytest.fixture(scope="session")
def tables(data):
    return build_edge_tables(data)


class _Decompositions:
    def __init__(self, gens):
        self.gens = gens
        self.cache = {}

    def __call__(self, m, n):
        if (m, n) not in self.cache:
            self.cache[(m, n)] = decompose(m, n, self.gens)
        return self.cache[(m, n)]


@pytest.fixture(scope="session")
def decomposition(gens):
    return _Decompositions(gens)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
