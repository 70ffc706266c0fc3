"""
Subgroups and subgroup families.

Enumeration works by layered joins: start from every cyclic subgroup, then
join each newly found subgroup with every cyclic subgroup of prime-power
order until nothing new appears. Every subgroup is generated by elements of
prime-power order, so the fixpoint is the whole subgroup lattice.
"""

import logging
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import factorint

from ..config import check_order
from .group import Element, Group, elements_of, extend, mask_of, popcount, span

logger = logging.getLogger("solqsol")


class Subgroup:
    """
    Subgroup of `parent`, stored as a bitset of member indices.

    Two Subgroups are equal iff they have the same parent and the same bitset.
    """

    __slots__ = ("parent", "mask", "order", "generators", "_members")

    def __init__(self, parent: Group, mask: int, generators: Optional[Sequence[Element]] = None):
        self.parent = parent
        self.mask = mask
        self.order = popcount(mask)
        self.generators = tuple(generators) if generators is not None else None
        self._members = None

    @property
    def members(self) -> Tuple[Element, ...]:
        if self._members is None:
            self._members = tuple(elements_of(self.mask))
        return self._members

    @property
    def sort_key(self) -> Tuple[int, Tuple[Element, ...]]:
        return (self.order, self.members)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def gens(self) -> Tuple[Element, ...]:
        """A generating set (the recorded one, or a greedy one computed on demand)."""
        if self.generators is None:
            G = self.parent
            found: List[int] = []
            mask = 1 << G.identity
            elems = [G.identity]
            for g in self.members:
                if not mask >> g & 1:
                    mask = extend(G, mask, elems, found, g)
                    found.append(g)
                    elems = elements_of(mask)
            self.generators = tuple(found)
        return self.generators

    def __contains__(self, g: Element) -> bool:
        return bool(self.mask >> g & 1)

    def issubset(self, other: "Subgroup") -> bool:
        return (self.mask & ~other.mask) == 0

    def __le__(self, other: "Subgroup") -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.mask == self.mask

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={list(self.members)})"


class SubgroupFamily:
    """Set of subgroups of one group, sorted by (order, members)."""

    def __init__(self, parent: Group, subgroups: Iterable[Subgroup]):
        unique: Dict[int, Subgroup] = {}
        for H in subgroups:
            if H.parent is not parent:
                raise ValueError(f"{H} is not a subgroup of {parent.label}")
            unique.setdefault(H.mask, H)
        self.parent = parent
        self.members: Tuple[Subgroup, ...] = tuple(sorted(unique.values(), key=lambda H: H.sort_key))
        self._by_mask = unique

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> Subgroup:
        return self.members[i]

    def __contains__(self, item: Union[Subgroup, int]) -> bool:
        if isinstance(item, Subgroup):
            return item.parent is self.parent and item.mask in self._by_mask
        return item in self._by_mask

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupFamily)
            and other.parent is self.parent
            and other.masks == self.masks
        )

    def __repr__(self) -> str:
        return f"SubgroupFamily({self.parent.label}, orders={self.orders()})"

    @property
    def masks(self) -> frozenset:
        return frozenset(self._by_mask)

    def orders(self) -> List[int]:
        return [H.order for H in self.members]

    def find(self, mask: int) -> Optional[Subgroup]:
        return self._by_mask.get(mask)

    def index(self, H: Subgroup) -> int:
        for i, K in enumerate(self.members):
            if K.mask == H.mask:
                return i
        raise ValueError(f"{H} is not in {self!r}")

    def filter(self, keep: Callable[[Subgroup], bool]) -> "SubgroupFamily":
        return SubgroupFamily(self.parent, (H for H in self.members if keep(H)))


# --- Construction ---

def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, 1 << G.identity, ())


def whole_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, (1 << G.order) - 1, G.generators())


def is_subgroup_set(G: Group, mask: int) -> bool:
    """Closure validation: contains the identity and is closed under products."""
    if not mask >> G.identity & 1 or mask >> G.order:
        return False
    members = np.array(elements_of(mask), dtype=np.int64)
    inside = np.zeros(G.order, dtype=bool)
    inside[members] = True
    return bool(inside[G.table[np.ix_(members, members)]].all())


def subgroup_from_mask(G: Group, mask: int) -> Subgroup:
    if not is_subgroup_set(G, mask):
        raise ValueError(f"{elements_of(mask)} is not a subgroup of {G.label}")
    return Subgroup(G, mask)


def subgroup_from_elements(G: Group, elements: Iterable[Element]) -> Subgroup:
    return subgroup_from_mask(G, mask_of(elements))


def _check_elements(G: Group, seed: Iterable[Element]) -> List[int]:
    seeds = []
    for g in seed:
        g = int(g)
        if not 0 <= g < G.order:
            raise ValueError(f"{g} is not an element of {G.label}")
        seeds.append(g)
    return seeds


def closure(G: Group, seed: Iterable[Element]) -> Subgroup:
    """Smallest subgroup containing `seed`."""
    seeds = _check_elements(G, seed)
    gens = tuple(g for g in dict.fromkeys(seeds) if g != G.identity)
    return Subgroup(G, span(G, gens), gens)


def _check_parent(G: Group, H: Subgroup) -> None:
    if H.parent is not G:
        raise ValueError(f"{H} is not a subgroup of {G.label}")


def join(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.parent is not K.parent:
        raise ValueError("join of subgroups of different groups")
    G = H.parent
    mask, gens, elems = H.mask, list(H.gens()), list(H.members)
    for g in K.gens():
        if not mask >> g & 1:
            mask = extend(G, mask, elems, gens, g)
            gens.append(g)
            elems = elements_of(mask)
    return Subgroup(G, mask, gens)


def meet(H: Subgroup, K: Subgroup) -> Subgroup:
    if H.parent is not K.parent:
        raise ValueError("meet of subgroups of different groups")
    return Subgroup(H.parent, H.mask & K.mask)


# --- Enumeration ---

def _cyclic_subgroups(G: Group) -> Dict[int, Subgroup]:
    def compute():
        rows, e = G._rows, G.identity
        found: Dict[int, Subgroup] = {}
        for g in range(G.order):
            mask, x = 1 << e, g
            while x != e:
                mask |= 1 << x
                x = rows[x][g]
            if mask not in found:
                found[mask] = Subgroup(G, mask, () if g == e else (g,))
        return found
    return G.memo("cyclic_subgroups", compute)


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(factorint(n)) == 1


def all_subgroups(G: Group) -> SubgroupFamily:
    check_order(G.order, f"all_subgroups({G.label})")

    def compute():
        cyclic = _cyclic_subgroups(G)
        found: Dict[int, Subgroup] = dict(cyclic)
        partners = [C for C in cyclic.values() if _is_prime_power(C.order)]
        partners.sort(key=lambda C: C.sort_key)
        resolved = set()
        layer = sorted(found.values(), key=lambda H: H.sort_key)
        rounds = 0
        while layer:
            rounds += 1
            nxt = []
            for H in layer:
                h_elems = None
                for C in partners:
                    if (C.mask & ~H.mask) == 0:
                        continue
                    union = H.mask | C.mask
                    if union in resolved:
                        continue
                    resolved.add(union)
                    if h_elems is None:
                        h_elems = H.members
                    g = C.generators[0]
                    mask = extend(G, H.mask, h_elems, H.gens(), g)
                    if mask not in found:
                        S = Subgroup(G, mask, H.gens() + (g,))
                        found[mask] = S
                        nxt.append(S)
            layer = nxt
        logger.debug(f"{G.label}: {len(found)} subgroups in {rounds} join rounds")
        return SubgroupFamily(G, found.values())

    return G.memo("all_subgroups", compute)


def find_conjugation_violation(G: Group, H: Subgroup) -> Optional[Tuple[Element, Element, Element]]:
    """First (g, h, g h g^-1) with the conjugate outside H, or None if H is normal."""
    rows, inv = G._rows, G._inv
    for g in G.generators():
        for h in H.gens():
            c = rows[rows[g][h]][inv[g]]
            if not H.mask >> c & 1:
                return (g, h, c)
    return None


def is_normal(G: Group, H: Subgroup) -> bool:
    _check_parent(G, H)
    if not is_subgroup_set(G, H.mask):
        raise ValueError(f"{H} is not a subgroup of {G.label}")
    return find_conjugation_violation(G, H) is None


def normal_subgroups(G: Group) -> SubgroupFamily:
    def compute():
        return all_subgroups(G).filter(lambda H: find_conjugation_violation(G, H) is None)
    return G.memo("normal_subgroups", compute)


# --- Named subgroups ---

def center(G: Group) -> Subgroup:
    def compute():
        gens = list(G.generators())
        t = G.table
        if not gens:
            return trivial_subgroup(G)
        commutes = (t[:, gens] == t[gens, :].T).all(axis=1)
        return Subgroup(G, mask_of(np.flatnonzero(commutes)))
    return G.memo("center", compute)


def derived_subgroup(G: Group) -> Subgroup:
    def compute():
        t, inv = G.table, G.inverses
        left = t[inv[:, None], inv[None, :]]
        commutators = t[left, t]
        return closure(G, np.unique(commutators).tolist())
    return G.memo("derived", compute)


def maximal_subgroups(G: Group) -> SubgroupFamily:
    def compute():
        proper = [H for H in all_subgroups(G) if not H.is_whole]
        maximal: List[Subgroup] = []
        for H in reversed(proper):
            if not any(H.issubset(M) for M in maximal):
                maximal.append(H)
        return SubgroupFamily(G, maximal)
    return G.memo("maximal_subgroups", compute)


def frattini(G: Group) -> Subgroup:
    """Intersection of the maximal subgroups; the whole group when |G| = 1."""
    def compute():
        mask = (1 << G.order) - 1
        for M in maximal_subgroups(G):
            mask &= M.mask
        return Subgroup(G, mask)
    return G.memo("frattini", compute)


def frattini_series(G: Group) -> List[Subgroup]:
    """G = F_0 > F_1 > ... > 1 with F_{i+1} the Frattini subgroup of F_i."""
    from .iso import subgroup_abstract_group

    def compute():
        terms = [whole_subgroup(G)]
        current, inclusion = G, tuple(range(G.order))
        while current.order > 1:
            F = frattini(current)
            terms.append(Subgroup(G, mask_of(inclusion[x] for x in F.members)))
            current, sub_inclusion = subgroup_abstract_group(current, F)
            inclusion = tuple(inclusion[x] for x in sub_inclusion)
        return tuple(terms)

    return list(G.memo("frattini_series", compute))


def is_p_group(G: Group) -> Optional[int]:
    """The prime p if |G| is a power of p, else None (also for the trivial group)."""
    primes = factorint(G.order)
    return next(iter(primes)) if len(primes) == 1 else None


def _require_abelian_p_group(G: Group) -> Optional[int]:
    if not G.is_abelian():
        raise ValueError(f"{G.label} is not abelian")
    p = is_p_group(G)
    if p is None and G.order > 1:
        raise ValueError(f"{G.label} is not a p-group (order {G.order})")
    return p


def omega(G: Group, n: int) -> Subgroup:
    """Subgroup generated by the elements of order dividing p^n."""
    if n < 0:
        raise ValueError(f"omega index must be non-negative, got {n}")
    p = _require_abelian_p_group(G)
    if p is None:
        return whole_subgroup(G)
    bound = p ** n
    seeds = [g for g, k in enumerate(G.element_orders()) if bound % k == 0]
    return Subgroup(G, span(G, seeds))


def omega_series(G: Group) -> List[Subgroup]:
    """Omega_0 < Omega_1 < ... up to G."""
    _require_abelian_p_group(G)
    terms = [omega(G, 0)]
    n = 0
    while not terms[-1].is_whole:
        n += 1
        terms.append(omega(G, n))
    return terms


def _p_elements(G: Group, p: int) -> int:
    mask = 0
    for g, k in enumerate(G.element_orders()):
        if k == 1 or set(factorint(k)) == {p}:
            mask |= 1 << g
    return mask


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    """Some Sylow p-subgroup, grown greedily from the trivial subgroup."""
    target = p ** factorint(G.order).get(p, 0)
    candidates = elements_of(_p_elements(G, p))
    H = trivial_subgroup(G)
    while H.order < target:
        for g in candidates:
            if g in H:
                continue
            K = join(H, Subgroup(G, span(G, [g]), (g,)))
            if set(factorint(K.order)) == {p}:
                H = K
                break
        else:
            raise RuntimeError(f"no p-element extends {H} in {G.label}")
    return H


def is_nilpotent(G: Group) -> bool:
    def compute():
        for p in factorint(G.order):
            mask = _p_elements(G, p)
            if span(G, elements_of(mask)) != mask:
                return False
        return True
    return G.memo("nilpotent", compute)


def sylow_decomposition(G: Group) -> List[Subgroup]:
    """One Sylow subgroup per prime dividing |G| (ascending); G must be nilpotent."""
    parts = []
    for p in sorted(factorint(G.order)):
        mask = _p_elements(G, p)
        if span(G, elements_of(mask)) != mask:
            P = sylow_subgroup(G, p)
            raise ValueError(
                f"{G.label} is not nilpotent: Sylow {p}-subgroup {list(P.members)} is not normal"
            )
        parts.append(Subgroup(G, mask))
    return parts


def is_cyclic(G: Group) -> bool:
    return G.order in G.element_orders()


def is_elementary_abelian(G: Group) -> bool:
    if G.order == 1:
        return True
    p = is_p_group(G)
    return p is not None and G.is_abelian() and G.exponent() == p


def is_perfect(G: Group) -> bool:
    return derived_subgroup(G).order == G.order


def is_hamiltonian(G: Group) -> bool:
    """Nonabelian with every subgroup normal (checked on cyclic subgroups)."""
    if G.is_abelian():
        return False
    return all(find_conjugation_violation(G, C) is None for C in _cyclic_subgroups(G).values())
