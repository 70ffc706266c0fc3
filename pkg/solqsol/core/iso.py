"""
Isomorphism testing, automorphisms and characteristic subgroups.

The search maps a minimal generating sequence of the source group onto
candidate images in the target and extends the partial map along the
Cayley graph of the generators. A partial map is rejected as soon as two
words for the same element disagree or two elements collide.
"""

import hashlib
import logging
from collections import defaultdict
from dataclasses import astuple, dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .. import config
from ..config import OrderCapExceeded, check_order
from .group import Element, Group, mask_of
from .subgroups import (
    Subgroup,
    SubgroupFamily,
    all_subgroups,
    center,
    derived_subgroup,
    is_subgroup_set,
)

logger = logging.getLogger("solqsol")

AUTOMORPHISM_SEARCH_LIMIT = 200_000


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants used to prescreen pairs. Equal for isomorphic groups."""

    order: int
    abelian: bool
    exponent: int
    histogram: Tuple[Tuple[int, int], ...]
    center_order: int
    derived_order: int
    class_sizes: Tuple[int, ...]

    def digest(self) -> str:
        return hashlib.sha1(repr(astuple(self)).encode()).hexdigest()[:10]

    @classmethod
    def for_abelian(cls, histogram: Dict[int, int]) -> "Fingerprint":
        """Fingerprint of an abelian group from its order histogram alone."""
        order = sum(histogram.values())
        exponent = max(histogram)
        return cls(
            order=order,
            abelian=True,
            exponent=exponent,
            histogram=tuple(sorted(histogram.items())),
            center_order=order,
            derived_order=1,
            class_sizes=(1,) * order,
        )


def class_sizes(G: Group) -> Tuple[int, ...]:
    """Sorted conjugacy-class sizes."""
    def compute():
        conj = G.conjugation_table()
        seen = 0
        sizes = []
        for h in range(G.order):
            if seen >> h & 1:
                continue
            cls = np.unique(conj[:, h])
            sizes.append(len(cls))
            seen |= mask_of(cls)
        return tuple(sorted(sizes))
    return G.memo("class_sizes", compute)


def fingerprint(G: Group) -> Fingerprint:
    def compute():
        if G.is_abelian():
            return Fingerprint.for_abelian(G.order_histogram())
        return Fingerprint(
            order=G.order,
            abelian=False,
            exponent=G.exponent(),
            histogram=tuple(G.order_histogram().items()),
            center_order=center(G).order,
            derived_order=derived_subgroup(G).order,
            class_sizes=class_sizes(G),
        )
    return G.memo("fingerprint", compute)


@dataclass(frozen=True, eq=False)
class IsoMap:
    """Bijection source -> target given by images[g]."""

    source: Group
    target: Group
    images: Tuple[Element, ...]

    def __call__(self, g: Element) -> Element:
        return self.images[g]

    def apply_mask(self, mask: int) -> int:
        out = 0
        g = 0
        while mask:
            if mask & 1:
                out |= 1 << self.images[g]
            mask >>= 1
            g += 1
        return out

    def apply(self, H: Subgroup) -> Subgroup:
        if H.parent is not self.source:
            raise ValueError(f"{H} is not a subgroup of {self.source.label}")
        gens = None if H.generators is None else tuple(self.images[g] for g in H.generators)
        return Subgroup(self.target, self.apply_mask(H.mask), gens)

    def is_valid(self) -> bool:
        """Bijective homomorphism, checked on all pairs."""
        if len(self.images) != self.source.order or self.source.order != self.target.order:
            return False
        img = np.array(self.images, dtype=np.int64)
        if len(np.unique(img)) != len(img):
            return False
        return bool((img[self.source.table] == self.target.table[np.ix_(img, img)]).all())

    def inverse(self) -> "IsoMap":
        inv = [0] * len(self.images)
        for g, h in enumerate(self.images):
            inv[h] = g
        return IsoMap(self.target, self.source, tuple(inv))

    def compose(self, first: "IsoMap") -> "IsoMap":
        """self after first."""
        if first.target is not self.source:
            raise ValueError("maps do not compose: target of the first is not the source of the second")
        return IsoMap(first.source, self.target, tuple(self.images[x] for x in first.images))

    def is_identity(self) -> bool:
        return self.source is self.target and all(g == h for g, h in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IsoMap)
            and other.source is self.source
            and other.target is self.target
            and other.images == self.images
        )

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.images))


def identity_map(G: Group) -> IsoMap:
    return IsoMap(G, G, tuple(range(G.order)))


def _extend(G: Group, H: Group, gens: Sequence[Element], images: Sequence[Element]) -> Optional[List[int]]:
    """
    Extend gens -> images to <gens> by walking the Cayley graph.
    Returns the partial image table (-1 outside <gens>) or None on conflict.
    """
    g_rows, h_rows = G._rows, H._rows
    phi = [-1] * G.order
    used = [False] * H.order
    phi[G.identity] = H.identity
    used[H.identity] = True
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            gx, hx = g_rows[x], h_rows[phi[x]]
            for s, t in zip(gens, images):
                y, z = gx[s], hx[t]
                if phi[y] == -1:
                    if used[z]:
                        return None
                    phi[y] = z
                    used[z] = True
                    nxt.append(y)
                elif phi[y] != z:
                    return None
        frontier = nxt
    return phi


def _search(G: Group, H: Group) -> Iterator[IsoMap]:
    """All isomorphisms G -> H, in lexicographic order of generator images."""
    if G.order != H.order:
        return
    gens = G.generators()
    if not gens:
        yield IsoMap(G, H, (H.identity,))
        return
    g_orders, h_orders = G.element_orders(), H.element_orders()
    g_cent, h_cent = G.centralizer_sizes(), H.centralizer_sizes()
    candidates = [
        [h for h in range(H.order) if h_orders[h] == g_orders[g] and h_cent[h] == g_cent[g]]
        for g in gens
    ]
    if any(not c for c in candidates):
        return

    chosen: List[int] = []

    def backtrack(depth: int) -> Iterator[IsoMap]:
        for h in candidates[depth]:
            if h in chosen:
                continue
            chosen.append(h)
            phi = _extend(G, H, gens[: depth + 1], chosen)
            if phi is not None:
                if depth + 1 == len(gens):
                    if -1 not in phi:
                        iso = IsoMap(G, H, tuple(phi))
                        if iso.is_valid():
                            yield iso
                else:
                    yield from backtrack(depth + 1)
            chosen.pop()

    yield from backtrack(0)


def are_isomorphic(G: Group, H: Group) -> Optional[IsoMap]:
    """A witnessing isomorphism G -> H, or None."""
    if G.order != H.order or fingerprint(G) != fingerprint(H):
        return None
    return next(_search(G, H), None)


def isomorphic(G: Group, H: Group) -> bool:
    """Decision only; abelian groups are decided by their order histograms."""
    if G.order != H.order:
        return False
    if G.is_abelian() and H.is_abelian():
        return G.order_histogram() == H.order_histogram()
    return are_isomorphic(G, H) is not None


def automorphisms(G: Group) -> List[IsoMap]:
    cap = config.current().automorphism_cap
    check_order(G.order, f"automorphisms({G.label})", cap=cap, setting=config.ENV_AUTOMORPHISM_CAP)
    bound = automorphism_search_bound(G)
    if bound > AUTOMORPHISM_SEARCH_LIMIT:
        raise OrderCapExceeded(
            f"automorphisms({G.label})", bound, AUTOMORPHISM_SEARCH_LIMIT,
            setting=None, quantity="search bound",
        )

    def compute():
        autos = tuple(_search(G, G))
        logger.debug(f"{G.label}: {len(autos)} automorphisms")
        return autos

    return list(G.memo("automorphisms", compute))


def _check_subgroup(G: Group, H: Subgroup) -> None:
    if H.parent is not G or not is_subgroup_set(G, H.mask):
        raise ValueError(f"{H} is not a subgroup of {G.label}")


def _power_map(G: Group, k: int) -> np.ndarray:
    """g -> g^k for every element, k >= 0."""
    result = np.full(G.order, G.identity, dtype=np.int64)
    base = np.arange(G.order, dtype=np.int64)
    while k:
        if k & 1:
            result = G.table[result, base]
        base = G.table[base, base]
        k >>= 1
    return result


def automorphism_classes(G: Group) -> Tuple[int, ...]:
    """
    Aut(G)-orbits of an abelian group as bitmasks, without listing Aut(G).

    Aut(G) is the product of the automorphism groups of the Sylow parts, and
    two elements of a finite abelian p-group lie in one orbit exactly when
    their height sequences agree: the heights of x, x^p, x^(p^2), ... where
    the height of y is the largest k with y a p^k-th power.
    """
    if not G.is_abelian():
        raise ValueError(f"{G.label} is not abelian")
    from sympy import factorint

    def compute():
        keys: List[List[Tuple[int, ...]]] = [[] for _ in range(G.order)]
        for p, a in sorted(factorint(G.order).items()):
            rest = G.order // p ** a
            component = _power_map(G, rest * pow(rest, -1, p ** a)) if rest > 1 else np.arange(G.order)
            step = _power_map(G, p)
            powers = [np.zeros(G.order, dtype=bool)]
            image = np.arange(G.order)
            for _ in range(a):
                image = step[image]
                powers.append(np.zeros(G.order, dtype=bool))
                powers[-1][image] = True
            height = sum(powers[1:], np.zeros(G.order, dtype=np.int64))
            for x in range(G.order):
                y = int(component[x])
                seq = []
                while y != G.identity:
                    seq.append(int(height[y]))
                    y = int(step[y])
                keys[x].append(tuple(seq))
        classes: Dict[Tuple, int] = defaultdict(int)
        for x, key in enumerate(keys):
            classes[tuple(key)] |= 1 << x
        return tuple(sorted(classes.values()))

    return G.memo("automorphism_classes", compute)


def _is_union_of(classes: Sequence[int], mask: int) -> bool:
    return all((c & mask) in (0, c) for c in classes)


def is_characteristic(G: Group, H: Subgroup) -> bool:
    _check_subgroup(G, H)
    if H.is_trivial or H.is_whole:
        return True
    if G.is_abelian():
        return _is_union_of(automorphism_classes(G), H.mask)
    return all(phi.apply_mask(H.mask) == H.mask for phi in automorphisms(G))


def characteristic_subgroups(G: Group) -> SubgroupFamily:
    """
    Subgroups fixed by every automorphism. Abelian groups are decided from
    their automorphism classes; other groups enumerate Aut(G) and raise
    OrderCapExceeded when that search is over its limits.
    """
    def compute():
        if G.is_abelian():
            classes = automorphism_classes(G)
            return all_subgroups(G).filter(lambda H: _is_union_of(classes, H.mask))
        autos = automorphisms(G)
        return all_subgroups(G).filter(
            lambda H: all(phi.apply_mask(H.mask) == H.mask for phi in autos)
        )
    return G.memo("characteristic_subgroups", compute)


def subgroup_abstract_group(G: Group, H: Subgroup) -> Tuple[Group, Tuple[Element, ...]]:
    """H re-indexed to [0, |H|) in ascending member order, with the inclusion map."""
    _check_subgroup(G, H)

    def compute():
        members = np.array(H.members, dtype=np.int64)
        lookup = np.full(G.order, -1, dtype=np.int64)
        lookup[members] = np.arange(len(members))
        table = lookup[G.table[np.ix_(members, members)]]
        sub = Group(table, label=f"{G.label}[{H.order}]", validate=False)
        return sub, tuple(int(x) for x in members)

    return G.memo(("abstract", H.mask), compute)


def subgroup_fingerprint(G: Group, H: Subgroup) -> Fingerprint:
    """Fingerprint of H as an abstract group, skipping the re-indexing when H is abelian."""
    rows = G._rows
    gens = H.gens()
    if all(rows[a][b] == rows[b][a] for a in gens for b in gens):
        orders = G.element_orders()
        hist: Dict[int, int] = {}
        for g in H.members:
            hist[orders[g]] = hist.get(orders[g], 0) + 1
        return Fingerprint.for_abelian(hist)
    return fingerprint(subgroup_abstract_group(G, H)[0])


def abelian_invariants(G: Group) -> List[Tuple[int, int]]:
    """
    Prime-power cyclic factors (p, a) of an abelian group, primes ascending
    and exponents ascending within a prime. Read off the order histogram:
    the number of factors with exponent >= k is log_p(N_k / N_{k-1}), where
    N_k counts elements of order dividing p^k.
    """
    if not G.is_abelian():
        raise ValueError(f"{G.label} is not abelian")
    from sympy import factorint, multiplicity

    orders = G.element_orders()
    factors: List[Tuple[int, int]] = []
    for p, top in sorted(factorint(G.order).items()):
        counts = [sum(1 for k in orders if (p ** j) % k == 0) for j in range(top + 1)]
        at_least = [multiplicity(p, counts[j] // counts[j - 1]) for j in range(1, top + 1)]
        at_least.append(0)
        parts: List[int] = []
        for j in range(top, 0, -1):
            parts.extend([j] * (at_least[j - 1] - at_least[j]))
        factors.extend((p, a) for a in sorted(parts))
    return factors


def automorphism_search_bound(G: Group) -> int:
    """Upper bound on the number of maps the automorphism search may visit."""
    orders, cent = G.element_orders(), G.centralizer_sizes()
    bound = 1
    for g in G.generators():
        bound *= sum(1 for h in range(G.order) if orders[h] == orders[g] and cent[h] == cent[g])
    return bound
