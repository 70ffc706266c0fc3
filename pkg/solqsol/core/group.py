"""
Finite groups as Cayley tables over element indices.

A Group is immutable once built. Anything derived from the table (element
orders, generators, subgroup lattices, quotients) is memoised on the group
behind a lock, so one Group can be shared by concurrent jobs.

Subsets of a group are handled as Python ints used as bitsets: bit g is set
iff element g belongs to the subset.
"""

import logging
import math
import threading
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .. import config

logger = logging.getLogger("solqsol")

Element = int
OrderHistogram = Dict[int, int]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for g in elements:
        mask |= 1 << int(g)
    return mask


def elements_of(mask: int) -> List[int]:
    """Set bits of `mask` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Group:
    """
    Finite group given by its Cayley table.

    Args:
        table: n x n array, table[g][h] = index of g*h.
        label: Provenance string, e.g. "D8" or "C2xC4".
        validate: Run the associativity check. Defaults to True for
            orders up to the configured validate cap.
    """

    def __init__(self, table: Any, label: str = "G", validate: Optional[bool] = None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"Cayley table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError(f"{label}: table entries must lie in [0, {n})")

        ar = np.arange(n)
        rows_ok = (arr == ar[None, :]).all(axis=1)
        cols_ok = (arr == ar[:, None]).all(axis=0)
        candidates = np.flatnonzero(rows_ok & cols_ok)
        if len(candidates) != 1:
            raise ValueError(f"{label}: table has no two-sided identity")
        identity = int(candidates[0])

        hits = arr == identity
        bad = np.flatnonzero(hits.sum(axis=1) != 1)
        if len(bad):
            raise ValueError(f"{label}: element {int(bad[0])} has no unique inverse")
        inverses = hits.argmax(axis=1)
        if not (arr[inverses, ar] == identity).all():
            raise ValueError(f"{label}: inverses are not two-sided")

        arr.setflags(write=False)
        inverses.setflags(write=False)
        self.order = n
        self.table = arr
        self.identity = identity
        self.inverses = inverses
        self.label = label

        self._rows: List[List[int]] = arr.tolist()
        self._inv: List[int] = inverses.tolist()
        self._memo: Dict[Any, Any] = {}
        self._lock = threading.RLock()

        if validate is None:
            validate = n <= config.current().validate_cap
        if validate:
            self.validate()

    def __repr__(self) -> str:
        return f"Group({self.label!r}, order={self.order})"

    # --- Memo ---

    def memo(self, key: Any, compute: Callable[[], Any]) -> Any:
        """Return the cached value for `key`, computing it once if needed."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    # --- Arithmetic ---

    def mul(self, g: Element, h: Element) -> Element:
        return self._rows[g][h]

    def inv(self, g: Element) -> Element:
        return self._inv[g]

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self._inv[g], -k
        x = self.identity
        for _ in range(k):
            x = self._rows[x][g]
        return x

    def validate(self) -> None:
        """Check identity, inverses and associativity on all n^3 triples."""
        t = self.table
        n = self.order
        ar = np.arange(n)
        e = self.identity
        if not ((t[e] == ar).all() and (t[:, e] == ar).all()):
            raise ValueError(f"{self.label}: identity row/column is not the identity permutation")
        if not ((t[ar, self.inverses] == e).all() and (t[self.inverses, ar] == e).all()):
            raise ValueError(f"{self.label}: inverse table is wrong")
        for a in range(n):
            left = t[t[a]]
            right = t[a][t]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise ValueError(f"{self.label}: associativity fails for ({a}, {int(b)}, {int(c)})")

    # --- Element statistics ---

    def element_orders(self) -> Tuple[int, ...]:
        def compute():
            rows, e = self._rows, self.identity
            orders = []
            for g in range(self.order):
                x, k = g, 1
                while x != e:
                    x = rows[x][g]
                    k += 1
                orders.append(k)
            return tuple(orders)
        return self.memo("element_orders", compute)

    def element_order(self, g: Element) -> int:
        if not 0 <= g < self.order:
            raise ValueError(f"{g} is not an element of {self.label}")
        return self.element_orders()[g]

    def order_histogram(self) -> OrderHistogram:
        counts: Dict[int, int] = {}
        for k in self.element_orders():
            counts[k] = counts.get(k, 0) + 1
        return dict(sorted(counts.items()))

    def exponent(self) -> int:
        return math.lcm(*self.element_orders())

    def is_abelian(self) -> bool:
        return self.memo("abelian", lambda: bool(np.array_equal(self.table, self.table.T)))

    def conjugation_table(self) -> np.ndarray:
        """conj[g, h] = g h g^-1."""
        def compute():
            conj = self.table[self.table, self.inverses[:, None]]
            conj.setflags(write=False)
            return conj
        return self.memo("conjugation", compute)

    def centralizer_sizes(self) -> Tuple[int, ...]:
        return self.memo(
            "centralizer_sizes",
            lambda: tuple(int(c) for c in (self.table == self.table.T).sum(axis=1)),
        )

    def generators(self) -> Tuple[Element, ...]:
        """
        Minimal generating sequence, chosen greedily: each step adds the
        element that enlarges the generated subgroup most (lowest index on ties).
        """
        def compute():
            full = (1 << self.order) - 1
            gens: List[int] = []
            mask = 1 << self.identity
            elems = [self.identity]
            while mask != full:
                best, best_mask, best_size = -1, mask, popcount(mask)
                for g in range(self.order):
                    if mask >> g & 1:
                        continue
                    grown = extend(self, mask, elems, gens, g)
                    size = popcount(grown)
                    if size > best_size:
                        best, best_mask, best_size = g, grown, size
                        if grown == full:
                            break
                gens.append(best)
                mask = best_mask
                elems = elements_of(mask)
            return tuple(gens)
        return self.memo("generators", compute)


def span(group: Group, seeds: Iterable[Element]) -> int:
    """Bitset of the subgroup generated by `seeds`."""
    rows = group._rows
    e = group.identity
    gens = [g for g in dict.fromkeys(int(s) for s in seeds) if g != e]
    mask = 1 << e
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for s in gens:
                y = row[s]
                if not mask >> y & 1:
                    mask |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return mask


def extend(group: Group, base_mask: int, base_elements: Sequence[Element],
           base_gens: Sequence[Element], g: Element) -> int:
    """
    Bitset of <H, g>, where H = <base_gens> has bitset `base_mask`.

    The result is grown one right coset Hz at a time, so the cost is about
    |<H, g>| table lookups.
    """
    if base_mask >> g & 1:
        return base_mask
    rows = group._rows
    gens = list(base_gens) + [g]
    mask = base_mask
    reps = [group.identity]
    i = 0
    while i < len(reps):
        row = rows[reps[i]]
        i += 1
        for s in gens:
            z = row[s]
            if not mask >> z & 1:
                for h in base_elements:
                    mask |= 1 << rows[h][z]
                reps.append(z)
    return mask


def validate(group: Group) -> None:
    group.validate()


def element_order(group: Group, g: Element) -> int:
    return group.element_order(g)


def order_histogram(group: Group) -> OrderHistogram:
    return group.order_histogram()


def exponent(group: Group) -> int:
    return group.exponent()
