"""Orbits of W(E7)/{+-1} on configurations of bitangents and conic families of a plane quartic."""
from .burnside import count_orbits, count_table, d_of
from .errors import CacheMismatchError, E7OrbitsError, InternalCheckError, ResourceLimitError
from .lattice import build_picard_data, default_data
from .orbits import Configuration, decompose
from .weyl import GROUP_ORDER, generators

__version__ = "0.1.0"

__all__ = [
    "CacheMismatchError", "Configuration", "E7OrbitsError", "GROUP_ORDER", "InternalCheckError",
    "ResourceLimitError", "build_picard_data", "count_orbits", "count_table", "d_of", "decompose",
    "default_data", "generators",
]
