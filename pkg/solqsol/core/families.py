"""
Constructors for the standard group families.

Dihedral and semidihedral groups are named by ORDER: D8 has 8 elements,
SD16 has 16. Element indices are fixed per family so that subgroup bitsets
and reports are reproducible:

    C<n>      i                         -> i
    D<2n>     x^i y^s                   -> s*n + i
    Q8        x^i y^s  (y^2 = x^2)      -> 4*s + i
    SD<2^k>   a^i b^s  (b a b = a^r)    -> s*m + i,  m = 2^(k-1), r = m/2 - 1
    Ab(...)   residue tuples, mixed radix, first factor most significant
    S<n>      permutations in lexicographic order of their images
    GxH       (g, h)                    -> g*|H| + h
"""

import itertools
import logging
import math
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from sympy import isprime

from ..config import OrderCapExceeded, check_order
from .group import Group

logger = logging.getLogger("solqsol")

SYMMETRIC_MAX_DEGREE = 5


def _cyclic_table(n: int) -> np.ndarray:
    ar = np.arange(n)
    return np.add.outer(ar, ar) % n


def _product_table(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    m, k = left.shape[0], right.shape[0]
    table = left[:, None, :, None] * k + right[None, :, None, :]
    return table.reshape(m * k, m * k)


def _check_positive(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    value = int(value)
    if value < 1:
        raise ValueError(f"{what} must be at least 1, got {value}")
    return value


def make_cyclic(n: int) -> Group:
    n = _check_positive(n, "cyclic order")
    check_order(n, f"C{n}")
    return Group(_cyclic_table(n), label=f"C{n}")


def trivial_group() -> Group:
    return make_cyclic(1)


def make_dihedral(order: int) -> Group:
    """Dihedral group of the given order: x^n = y^2 = 1, y x y = x^-1."""
    order = _check_positive(order, "dihedral order")
    if order % 2 or order < 6:
        raise ValueError(f"dihedral order must be even and at least 6, got {order}")
    check_order(order, f"D{order}")
    n = order // 2
    idx = np.arange(order)
    a, s = idx % n, idx // n
    sign = 1 - 2 * s
    prod_a = (a[:, None] + sign[:, None] * a[None, :]) % n
    prod_s = s[:, None] ^ s[None, :]
    return Group(prod_s * n + prod_a, label=f"D{order}")


def make_quaternion() -> Group:
    """Q8 with x^4 = 1, y^2 = x^2, y x y^-1 = x^-1."""
    idx = np.arange(8)
    a, s = idx % 4, idx // 4
    sign = 1 - 2 * s
    exp = a[:, None] + sign[:, None] * a[None, :]
    exp = (exp + 2 * (s[:, None] & s[None, :])) % 4
    return Group(4 * (s[:, None] ^ s[None, :]) + exp, label="Q8")


def make_semidihedral(order: int) -> Group:
    order = _check_positive(order, "semidihedral order")
    if order < 16 or order & (order - 1):
        raise ValueError(f"semidihedral order must be a power of two, at least 16, got {order}")
    check_order(order, f"SD{order}")
    m = order // 2
    r = m // 2 - 1
    idx = np.arange(order)
    i, s = idx % m, idx // m
    mult = np.where(s == 1, r, 1)
    exp = (i[:, None] + mult[:, None] * i[None, :]) % m
    return Group((s[:, None] ^ s[None, :]) * m + exp, label=f"SD{order}")


def abelian_label(factors: Sequence[Tuple[int, int]]) -> str:
    """Grammar label, one Ab(...) block per run of equal primes."""
    if not factors:
        return "C1"
    blocks = []
    for p, run in itertools.groupby(factors, key=lambda f: f[0]):
        exps = ",".join(str(a) for _, a in run)
        blocks.append(f"Ab({p}:[{exps}])")
    return "x".join(blocks)


def check_factors(factors: Iterable[Tuple[int, int]]) -> List[Tuple[int, int]]:
    checked = []
    for item in factors:
        try:
            p, a = item
        except (TypeError, ValueError):
            raise ValueError(f"abelian factor must be a (prime, exponent) pair, got {item!r}")
        p = _check_positive(p, "abelian factor prime")
        a = _check_positive(a, "abelian factor exponent")
        if not isprime(p):
            raise ValueError(f"abelian factor {p}^{a}: {p} is not prime")
        checked.append((p, a))
    return checked


def make_abelian(factors: Iterable[Tuple[int, int]]) -> Group:
    """Direct product of cyclic groups Z_{p^a}, one per (p, a) factor."""
    factors = check_factors(factors)
    label = abelian_label(factors)
    order = math.prod(p ** a for p, a in factors)
    check_order(order, label)
    table = np.zeros((1, 1), dtype=np.int64)
    for p, a in factors:
        table = _product_table(table, _cyclic_table(p ** a))
    return Group(table, label=label)


def check_symmetric_degree(n: int) -> None:
    """S_n is only built up to a fixed degree; checked before n! is formed."""
    if n > SYMMETRIC_MAX_DEGREE:
        raise OrderCapExceeded(f"S{n}", n, SYMMETRIC_MAX_DEGREE, setting=None, quantity="degree")


def make_symmetric(n: int) -> Group:
    """S_n with (g*h)(i) = g(h(i))."""
    n = _check_positive(n, "symmetric degree")
    check_symmetric_degree(n)
    check_order(math.factorial(n), f"S{n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(g[h[k]] for k in range(n))] for h in perms] for g in perms]
    return Group(table, label=f"S{n}")


def direct_product(left: Group, right: Group) -> Group:
    label = f"{left.label}x{right.label}"
    check_order(left.order * right.order, label)
    return Group(_product_table(left.table, right.table), label=label)
