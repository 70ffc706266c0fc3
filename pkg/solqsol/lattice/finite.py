"""
Finite lattices given by their order relation.

Nodes are 0..size-1. Down-sets and up-sets are kept as int bitsets; the meet
of a and b is the node whose down-set is down[a] & down[b] (it exists iff the
set of common lower bounds has a greatest element), and dually for joins.
"""

import logging
from typing import Any, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from sympy import divisors

from ..core.group import elements_of, popcount
from ..core.subgroups import SubgroupFamily

logger = logging.getLogger("solqsol")


class NotALattice(ValueError):
    """Some pair of nodes has no meet or no join. `pair` names the nodes."""

    def __init__(self, message: str, pair: Tuple[int, int]):
        self.pair = pair
        super().__init__(message)


def _bits(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


class FiniteLattice:
    """
    Args:
        leq: size x size boolean matrix, leq[i, j] iff node i <= node j.
        payload: Optional per-node labels (subgroup order and members, an
            integer, a pair of labels for product lattices).
    """

    def __init__(self, leq: Any, payload: Optional[Sequence[Any]] = None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1] or leq.shape[0] == 0:
            raise ValueError(f"order relation must be a non-empty square matrix, got shape {leq.shape}")
        size = leq.shape[0]
        if payload is not None and len(payload) != size:
            raise ValueError(f"payload has {len(payload)} entries for {size} nodes")
        if not leq.diagonal().all():
            raise ValueError("order relation is not reflexive")
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise ValueError(f"order relation is not antisymmetric: nodes {int(i)} and {int(j)}")

        down = [_bits(leq[:, j]) for j in range(size)]
        up = [_bits(leq[i, :]) for i in range(size)]
        for j in range(size):
            for x in elements_of(down[j]):
                if down[x] & ~down[j]:
                    raise ValueError(f"order relation is not transitive below node {j}")

        full = (1 << size) - 1
        bottoms = [i for i in range(size) if up[i] == full]
        tops = [j for j in range(size) if down[j] == full]
        if not bottoms or not tops:
            raise NotALattice("order has no bottom or no top", (0, 0))

        down_index = {d: j for j, d in enumerate(down)}
        up_index = {u: i for i, u in enumerate(up)}
        meet = np.empty((size, size), dtype=np.int32)
        join = np.empty((size, size), dtype=np.int32)
        for a in range(size):
            for b in range(a, size):
                m = down_index.get(down[a] & down[b])
                if m is None:
                    raise NotALattice(f"nodes {a} and {b} have no meet", (a, b))
                u = up_index.get(up[a] & up[b])
                if u is None:
                    raise NotALattice(f"nodes {a} and {b} have no join", (a, b))
                meet[a, b] = meet[b, a] = m
                join[a, b] = join[b, a] = u

        covers = []
        for j in range(size):
            strict = down[j] & ~(1 << j)
            below = 0
            for x in elements_of(strict):
                below |= down[x] & ~(1 << x)
            covers.extend((x, j) for x in elements_of(strict & ~below))

        leq.setflags(write=False)
        meet.setflags(write=False)
        join.setflags(write=False)
        self.size = size
        self.leq = leq
        self.payload = tuple(payload) if payload is not None else None
        self.covers: List[Tuple[int, int]] = sorted(covers)
        self.bottom = bottoms[0]
        self.top = tops[0]
        self._down = down
        self._meet = meet
        self._join = join

        by_rank = sorted(range(size), key=lambda j: popcount(down[j]))
        lower_covers = {j: [] for j in range(size)}
        for x, j in self.covers:
            lower_covers[j].append(x)
        heights = [0] * size
        for j in by_rank:
            heights[j] = max((heights[x] + 1 for x in lower_covers[j]), default=0)
        self.heights: Tuple[int, ...] = tuple(heights)

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, covers={len(self.covers)})"

    @property
    def edge_count(self) -> int:
        return len(self.covers)

    def meet(self, a: int, b: int) -> int:
        return int(self._meet[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self._join[a, b])

    def dual(self) -> "FiniteLattice":
        return FiniteLattice(self.leq.T, self.payload)

    def to_networkx(self) -> nx.DiGraph:
        """Hasse diagram, edges from lower to upper cover, nodes carry their height."""
        g = nx.DiGraph()
        for j in range(self.size):
            g.add_node(j, height=self.heights[j])
        g.add_edges_from(self.covers)
        return g


def is_chain(L: FiniteLattice) -> bool:
    return bool((L.leq | L.leq.T).all())


def chain_length(L: FiniteLattice) -> int:
    """Number of cover edges, size - 1 for a chain."""
    if not is_chain(L):
        raise ValueError(f"{L!r} is not a chain")
    return L.size - 1


def is_distributive(L: FiniteLattice) -> bool:
    """x & (y | z) == (x & y) | (x & z) for all triples."""
    M, J = L._meet, L._join
    for x in range(L.size):
        lhs = M[x][J]
        rhs = J[M[x][:, None], M[x][None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_modular(L: FiniteLattice) -> bool:
    """x <= z implies x | (y & z) == (x | y) & z."""
    M, J = L._meet, L._join
    columns = np.arange(L.size)
    for x in range(L.size):
        above = L.leq[x]
        lhs = J[x][M]
        rhs = M[J[x][:, None], columns[None, :]]
        if not np.array_equal(lhs[:, above], rhs[:, above]):
            return False
    return True


def lattice_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    if L1.size != L2.size or L1.edge_count != L2.edge_count:
        return False
    if sorted(L1.heights) != sorted(L2.heights):
        return False
    return nx.is_isomorphic(
        L1.to_networkx(),
        L2.to_networkx(),
        node_match=lambda a, b: a["height"] == b["height"],
    )


def lattice_anti_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    return lattice_isomorphic(L1, L2.dual())


def product_lattice(L1: FiniteLattice, L2: FiniteLattice) -> FiniteLattice:
    """Componentwise order; node (i, j) has index i * L2.size + j."""
    leq = np.kron(L1.leq.astype(np.uint8), L2.leq.astype(np.uint8)).astype(bool)
    payload = None
    if L1.payload is not None and L2.payload is not None:
        payload = [(a, b) for a in L1.payload for b in L2.payload]
    return FiniteLattice(leq, payload)


def chain_lattice(nodes: int) -> FiniteLattice:
    if nodes < 1:
        raise ValueError(f"a chain needs at least one node, got {nodes}")
    return FiniteLattice(np.triu(np.ones((nodes, nodes), dtype=bool)), list(range(nodes)))


def divisor_lattice(orders) -> FiniteLattice:
    """Divisibility order on a divisor-closed set of positive integers."""
    values = sorted({int(v) for v in orders})
    if not values or values[0] < 1:
        raise ValueError(f"divisor lattice needs positive integers, got {values}")
    present = set(values)
    for v in values:
        missing = [d for d in divisors(v) if d not in present]
        if missing:
            raise ValueError(f"{sorted(present)} is not closed under divisors: {v} needs {missing[0]}")
    arr = np.array(values)
    leq = (arr[None, :] % arr[:, None]) == 0
    return FiniteLattice(leq, values)


def subgroup_payload(H) -> dict:
    return {"order": H.order, "members": list(H.members)}


def from_subgroup_family(F: SubgroupFamily, require_intersections: bool = False) -> FiniteLattice:
    """
    Inclusion order on a subgroup family. Meets and joins are taken inside the
    family; with require_intersections, every meet must also be the literal
    intersection of the two subgroups.
    """
    subs = list(F)
    G = F.parent
    full = (1 << G.order) - 1
    masks = [H.mask for H in subs]
    if (1 << G.identity) not in F or full not in F:
        raise ValueError(f"family of {G.label} must contain the trivial subgroup and the whole group")

    size = len(subs)
    leq = np.zeros((size, size), dtype=bool)
    for i, H in enumerate(subs):
        for j, K in enumerate(subs):
            if K.order % H.order == 0 and (masks[i] & ~masks[j]) == 0:
                leq[i, j] = True

    if require_intersections:
        index = {m: i for i, m in enumerate(masks)}
        for i in range(size):
            for j in range(i + 1, size):
                if (masks[i] & masks[j]) not in index:
                    raise NotALattice(
                        f"intersection of {subs[i]} and {subs[j]} is not in the family", (i, j)
                    )

    try:
        return FiniteLattice(leq, [subgroup_payload(H) for H in subs])
    except NotALattice as exc:
        a, b = exc.pair
        raise NotALattice(f"{subs[a]} and {subs[b]}: {exc}", exc.pair) from exc
