"""Finite lattices and Hasse diagram output."""
from .finite import FiniteLattice, NotALattice, from_subgroup_family, lattice_isomorphic
from .render import to_dot, to_json
