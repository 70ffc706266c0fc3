"""Core group machinery: Cayley tables, constructors, subgroups, isomorphism, quotients."""
from .group import Group
from .families import (
    direct_product,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_semidihedral,
    make_symmetric,
)
from .groupspec import build_group, parse_group_spec
