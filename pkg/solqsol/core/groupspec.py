"""
Group spec mini-language.

    C<n>  D<order>  Q8  SD<order>  S<n>  Ab(<p>:[a,...])

joined by "x" for direct products, e.g. "D6xD10" or "Ab(2:[1,2])xC3".
Every constructor label is itself a valid spec, and building it reproduces
the same Cayley table.
"""

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Tuple

from .families import (
    check_symmetric_degree,
    direct_product,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_semidihedral,
    make_symmetric,
)
from .group import Group

_FACTOR = re.compile(
    r"SD(?P<sd>\d+)"
    r"|S(?P<s>\d+)"
    r"|C(?P<c>\d+)"
    r"|D(?P<d>\d+)"
    r"|(?P<q>Q8)"
    r"|Ab\(\s*(?P<p>\d+)\s*:\s*\[\s*(?P<exps>\d+(?:\s*,\s*\d+)*)\s*\]\s*\)"
)

Factor = Tuple[str, Tuple[int, ...]]


class GroupSpecError(ValueError):
    """Unparseable group spec; `position` is the offset where parsing stopped."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


@dataclass(frozen=True)
class GroupSpec:
    text: str
    factors: Tuple[Factor, ...]

    @property
    def order(self) -> int:
        """Order of the described group, known without building it."""
        return math.prod(_factor_order(f) for f in self.factors)

    def build(self) -> Group:
        return reduce(direct_product, (_build_factor(f) for f in self.factors))

    def __str__(self) -> str:
        return "x".join(_factor_text(f) for f in self.factors)


def _factor_from_match(m: "re.Match") -> Factor:
    if m.group("sd") is not None:
        return ("SD", (int(m.group("sd")),))
    if m.group("s") is not None:
        return ("S", (int(m.group("s")),))
    if m.group("c") is not None:
        return ("C", (int(m.group("c")),))
    if m.group("d") is not None:
        return ("D", (int(m.group("d")),))
    if m.group("q") is not None:
        return ("Q", ())
    exps = tuple(int(e) for e in m.group("exps").split(","))
    return ("Ab", (int(m.group("p")),) + exps)


def _factor_order(factor: Factor) -> int:
    kind, args = factor
    if kind == "Q":
        return 8
    if kind == "S":
        check_symmetric_degree(args[0])
        return math.factorial(args[0])
    if kind == "Ab":
        return args[0] ** sum(args[1:])
    return args[0]


def _factor_text(factor: Factor) -> str:
    kind, args = factor
    if kind == "Q":
        return "Q8"
    if kind == "Ab":
        return f"Ab({args[0]}:[{','.join(str(a) for a in args[1:])}])"
    return f"{kind}{args[0]}"


def _build_factor(factor: Factor) -> Group:
    kind, args = factor
    if kind == "C":
        return make_cyclic(args[0])
    if kind == "D":
        return make_dihedral(args[0])
    if kind == "Q":
        return make_quaternion()
    if kind == "SD":
        return make_semidihedral(args[0])
    if kind == "S":
        return make_symmetric(args[0])
    p = args[0]
    return make_abelian([(p, a) for a in args[1:]])


def parse_group_spec(text: str) -> GroupSpec:
    if not isinstance(text, str):
        raise GroupSpecError("group spec must be a string", repr(text), 0)
    s = text.strip()
    if not s:
        raise GroupSpecError("empty group spec", text, 0)
    factors = []
    pos = 0
    while True:
        m = _FACTOR.match(s, pos)
        if m is None:
            raise GroupSpecError("expected C<n>, D<order>, Q8, SD<order>, S<n> or Ab(p:[...])", s, pos)
        factors.append(_factor_from_match(m))
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "x":
            raise GroupSpecError("expected 'x' between factors", s, pos)
        pos += 1
    return GroupSpec(s, tuple(factors))


def build_group(text: str) -> Group:
    return parse_group_spec(text).build()
