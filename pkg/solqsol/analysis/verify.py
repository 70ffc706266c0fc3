"""
Verification suite: each claim is checked by brute force over its frozen
corpus (see corpus.json) and reported as verified, refuted or probe.

Claims register themselves with @claim. A claim function receives the
corpus groups and an EventLogger and returns a VerificationResult; verify()
attaches the corpus description and the event summary.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from math import gcd
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy import divisor_count, divisor_sigma

from ..config import OrderCapExceeded
from ..core.group import Group, mask_of
from ..core.groupspec import parse_group_spec
from ..core.iso import (
    abelian_invariants,
    characteristic_subgroups,
    subgroup_abstract_group,
)
from ..core.logger import EventLogger
from ..core.quotients import project_subgroup, quotient
from ..core.subgroups import (
    Subgroup,
    all_subgroups,
    closure,
    derived_subgroup,
    find_conjugation_violation,
    frattini,
    frattini_series,
    is_cyclic,
    is_elementary_abelian,
    is_nilpotent,
    is_p_group,
    is_perfect,
    join,
    maximal_subgroups,
    normal_subgroups,
    omega,
    omega_series,
    sylow_decomposition,
    trivial_subgroup,
    whole_subgroup,
)
from ..lattice.finite import (
    NotALattice,
    chain_lattice,
    chain_length,
    divisor_lattice,
    from_subgroup_family,
    is_chain,
    is_distributive,
    is_modular,
    lattice_isomorphic,
    product_lattice,
)
from . import corpus
from .duality import AbelianPresentation, check_eq_4, delta, delta_is_involution, verify_prop_3_1
from .naming import quotient_type_label, subgroup_type_label
from .solitary import (
    VerificationResult,
    char_is_tractable,
    find_prop_2_3_counterexample,
    is_quotient_solitary_free,
    predicted_qsol_dihedral,
    prop_2_3_witness,
    qsol,
    qsol_lattice,
    recheck_prop_2_3_witness,
    sol,
    sol_lattice,
)

logger = logging.getLogger("solqsol")

ClaimCheck = Callable[[List[Group], EventLogger, Dict[str, Any]], VerificationResult]
CLAIMS: Dict[str, ClaimCheck] = {}


def claim(claim_id: str):
    def register(fn: ClaimCheck) -> ClaimCheck:
        CLAIMS[claim_id] = fn
        return fn
    return register


def _members(H: Subgroup) -> List[int]:
    return list(H.members)


def _sweep(
    claim_id: str,
    groups: Sequence[Group],
    events: EventLogger,
    check: Callable[[Group], Optional[Dict[str, Any]]],
    narrative: str,
) -> VerificationResult:
    """Run `check` on every group; the first non-None result is the witness."""
    for G in groups:
        witness = check(G)
        events.log_group_checked(G.label, G.order, witness is None)
        if witness is not None:
            witness = {"group": G.label, **witness}
            events.log_witness(G.label, witness)
            return VerificationResult(claim_id, "refuted", f"fails on {G.label}", witness=witness)
    return VerificationResult(claim_id, "verified", f"{narrative} ({len(groups)} groups)")


def _image(inclusion: Sequence[int], H: Subgroup, G: Group) -> Subgroup:
    return Subgroup(G, mask_of(inclusion[x] for x in H.members))


def _proper_maximal(family, G: Group) -> List[Subgroup]:
    """Maximal members of the family other than G itself."""
    proper = [N for N in family if not N.is_whole]
    return [N for N in proper if not any(N.mask != M.mask and N.issubset(M) for M in proper)]


def _presentation(G: Group) -> AbelianPresentation:
    """Presentation whose element encoding matches G's spec label."""
    factors = []
    for kind, args in parse_group_spec(G.label).factors:
        if kind == "Ab":
            factors.extend((args[0], a) for a in args[1:])
        elif kind == "C" and args[0] == 1:
            continue
        else:
            raise ValueError(f"{G.label} is not written as a product of Ab(...) blocks")
    return AbelianPresentation(tuple(factors))


def _partition(G: Group) -> Dict[int, List[int]]:
    parts: Dict[int, List[int]] = {}
    for p, a in abelian_invariants(G):
        parts.setdefault(p, []).append(a)
    return parts


# --- QSol as a lattice ---

@claim("prop-2.1")
def _prop_2_1(groups, events, ctx):
    def check(G):
        try:
            from_subgroup_family(qsol(G), require_intersections=True)
        except NotALattice as exc:
            return {"reason": str(exc), "pair": list(exc.pair)}
        return None
    return _sweep("prop-2.1", groups, events, check,
                  "QSol is a lattice whose meets are intersections")


@claim("prop-2.2")
def _prop_2_2(groups, events, ctx):
    def check(G):
        Q = qsol(G)
        for H in Q:
            A, inclusion = subgroup_abstract_group(G, H)
            for K_abs in qsol(A):
                K = _image(inclusion, K_abs, G)
                if find_conjugation_violation(G, K) is None and K not in Q:
                    return {"H": _members(H), "K": _members(K)}
        return None
    return _sweep("prop-2.2", groups, events, check,
                  "K normal in G, K in QSol(H), H in QSol(G) imply K in QSol(G)")


@claim("prop-2.3")
def _prop_2_3(groups, events, ctx):
    for G in groups:
        pair = find_prop_2_3_counterexample(G)
        events.log_group_checked(G.label, G.order, pair is None)
        if pair is None:
            continue
        H, K = pair
        witness = prop_2_3_witness(G, H, K)
        witness["rechecked"] = recheck_prop_2_3_witness(witness)
        events.log_witness(G.label, {"H": witness["H"], "K": witness["K"]})
        return VerificationResult(
            "prop-2.3",
            "refuted",
            f"{G.label}: K is in QSol(G) but its image in G/H (order {witness['quotient_order']}) "
            f"is not in QSol(G/H)",
            witness=witness,
        )
    return VerificationResult("prop-2.3", "verified", f"no counterexample in {len(groups)} groups")


@claim("eq-2")
def _eq_2(groups, events, ctx):
    checked = 0
    by_label = {G.label: G for G in groups}
    for p_spec, q_spec in ctx["pairs"]:
        G = by_label.get(f"{p_spec}x{q_spec}")
        if G is None:
            continue
        P, Q = corpus.group_for(p_spec), corpus.group_for(q_spec)
        if gcd(P.order, Q.order) != 1 or not (is_nilpotent(P) and is_nilpotent(Q)):
            events.log_group_skipped(G.label, "factors not coprime nilpotent")
            continue
        expected = product_lattice(qsol_lattice(P), qsol_lattice(Q))
        holds = lattice_isomorphic(qsol_lattice(G), expected)
        events.log_group_checked(G.label, G.order, holds)
        checked += 1
        if not holds:
            witness = {"group": G.label, "qsol_size": len(qsol(G)), "product_size": expected.size}
            return VerificationResult("eq-2", "refuted", f"{G.label}: QSol does not decompose", witness=witness)
    return VerificationResult(
        "eq-2", "verified",
        f"QSol of {checked} coprime products is the product of the factor lattices",
        details={"pairs_checked": checked},
    )


@claim("frattini-qsol")
def _frattini_qsol(groups, events, ctx):
    def check(G):
        if frattini(G) not in qsol(G):
            return {"frattini": _members(frattini(G))}
        return None
    p_groups = [G for G in groups if is_p_group(G) is not None]
    return _sweep("frattini-qsol", p_groups, events, check, "the Frattini subgroup of a p-group is in QSol")


@claim("prop-2.4")
def _prop_2_4(groups, events, ctx):
    maximal_holds, maximal_fails = [], []
    for G in groups:
        if is_p_group(G) is None:
            continue
        F = frattini(G)
        Q = qsol(G)
        if F not in Q:
            events.log_group_skipped(G.label, "Frattini subgroup not in QSol")
            continue
        above = [N for N in Q if not N.is_whole and N.mask != F.mask and F.issubset(N)]
        events.log_group_checked(G.label, G.order, not above)
        (maximal_fails if above else maximal_holds).append(G.label)
    return VerificationResult(
        "prop-2.4",
        "probe",
        f"Frattini subgroup maximal in QSol minus G for {len(maximal_holds)} p-groups, "
        f"not maximal in {len(maximal_fails)}",
        details={"maximal": maximal_holds, "not_maximal": maximal_fails},
    )


@claim("cor-2.5")
def _cor_2_5(groups, events, ctx):
    def check(G):
        Q = qsol(G)
        for term in frattini_series(G):
            if term not in Q:
                return {"frattini_term": _members(term)}
        if G.order == 1:
            return None
        sylows = sylow_decomposition(G)
        predicted = set()
        for i, P in enumerate(sylows):
            A, inclusion = subgroup_abstract_group(G, P)
            N = _image(inclusion, frattini(A), G)
            for j, R in enumerate(sylows):
                if j != i:
                    N = join(N, R)
            predicted.add(N.mask)
        found = {N.mask for N in _proper_maximal(Q, G)}
        if found != predicted:
            return {"maximal": sorted(found), "predicted": sorted(predicted)}
        return None
    nilpotent = [G for G in groups if is_nilpotent(G)]
    return _sweep("cor-2.5", nilpotent, events, check,
                  "Frattini series in QSol and maximal QSol members as predicted")


@claim("cor-2.6")
def _cor_2_6(groups, events, ctx):
    def check(G):
        equal = qsol(G) == normal_subgroups(G)
        if equal != is_cyclic(G):
            return {"qsol_equals_normal": equal, "cyclic": is_cyclic(G)}
        return None
    nilpotent = [G for G in groups if is_nilpotent(G)]
    return _sweep("cor-2.6", nilpotent, events, check, "QSol = N(G) exactly for cyclic nilpotent groups")


# --- Abelian groups ---

@claim("lemma-3.2")
def _lemma_3_2(groups, events, ctx):
    def check(G):
        F = frattini(G)
        A, inclusion = subgroup_abstract_group(G, F)
        back = {g: i for i, g in enumerate(inclusion)}
        inner = qsol(A)
        for N in qsol(G):
            if N.is_whole:
                continue
            if not N.issubset(F):
                return {"subgroup": _members(N), "reason": "not inside the Frattini subgroup"}
            if mask_of(back[g] for g in N.members) not in inner:
                return {"subgroup": _members(N), "reason": "not in QSol of the Frattini subgroup"}
        return None
    return _sweep("lemma-3.2", groups, events, check,
                  "proper QSol members lie in QSol of the Frattini subgroup")


def _chain_check(G: Group, family, series: List[Subgroup], lattice) -> Optional[Dict[str, Any]]:
    if family.masks != frozenset(H.mask for H in series):
        return {"family": [H.order for H in family], "series": [H.order for H in series]}
    alpha = max((a for _, a in abelian_invariants(G)), default=0)
    if not is_chain(lattice) or chain_length(lattice) != alpha:
        return {"chain_length": lattice.size - 1, "largest_part": alpha}
    return None


@claim("thm-3.3")
def _thm_3_3(groups, events, ctx):
    def check(G):
        found = _chain_check(G, qsol(G), frattini_series(G), qsol_lattice(G))
        if found is None:
            found = _chain_check(G, sol(G), omega_series(G), sol_lattice(G))
        return found
    return _sweep("thm-3.3", groups, events, check,
                  "QSol is the Frattini series and Sol the omega series, chains of length the largest part")


@claim("correction-thm-1")
def _correction_thm_1(groups, events, ctx):
    def check(G):
        return _chain_check(G, sol(G), omega_series(G), sol_lattice(G))
    return _sweep("correction-thm-1", groups, events, check, "Sol is the omega series")


@claim("cor-3.4")
def _cor_3_4(groups, events, ctx):
    def check(G):
        L = qsol_lattice(G)
        if not is_distributive(L):
            return {"reason": "QSol lattice is not distributive"}
        expected = chain_lattice(1)
        for p, parts in sorted(_partition(G).items()):
            expected = product_lattice(expected, chain_lattice(max(parts) + 1))
        if not lattice_isomorphic(L, expected):
            return {"reason": "QSol is not the product of the Sylow chains", "size": L.size}
        return None
    return _sweep("cor-3.4", groups, events, check, "QSol is a distributive product of chains")


@claim("cor-3.5")
def _cor_3_5(groups, events, ctx):
    decomposes, fails, chains = [], [], {}
    for G in groups:
        L = qsol_lattice(G)
        sylows = sylow_decomposition(G)
        two_part = sylows[0]
        odd = trivial_subgroup(G)
        for R in sylows[1:]:
            odd = join(odd, R)
        two_abs = subgroup_abstract_group(G, two_part)[0]
        odd_abs = subgroup_abstract_group(G, odd)[0]
        expected = product_lattice(qsol_lattice(two_abs), qsol_lattice(odd_abs))
        holds = lattice_isomorphic(L, expected) and is_distributive(L)
        events.log_group_checked(G.label, G.order, holds)
        (decomposes if holds else fails).append(G.label)
        if odd.order == 1:
            rank = (G.order // 8).bit_length() - 1
            chains[str(rank)] = {
                "group": G.label,
                "is_chain": is_chain(L),
                "nodes": L.size,
                "edges": L.edge_count,
                "orders": qsol(G).orders(),
            }
    lengths = ", ".join(f"n={n}: {c['nodes']} nodes/{c['edges']} edges" for n, c in sorted(chains.items()))
    return VerificationResult(
        "cor-3.5",
        "probe",
        f"decomposition holds for {len(decomposes)} of {len(groups)} hamiltonian groups; "
        f"QSol(Q8 x Z2^n): {lengths}",
        witness={"decomposition_fails": fails} if fails else None,
        details={"decomposes": decomposes, "chains": chains},
    )


@claim("cor-3.6")
def _cor_3_6(groups, events, ctx):
    def check(G):
        equal = sol(G).masks == qsol(G).masks
        homocyclic = all(len(set(parts)) == 1 for parts in _partition(G).values())
        if equal != homocyclic:
            return {"sol_equals_qsol": equal, "homocyclic": homocyclic}
        return None
    return _sweep("cor-3.6", groups, events, check, "Sol = QSol exactly when every Sylow subgroup is homocyclic")


@claim("thm-3.7")
def _thm_3_7(groups, events, ctx):
    def check(G):
        free = is_quotient_solitary_free(G)
        if is_nilpotent(G) and free != is_elementary_abelian(G):
            return {"quotient_solitary_free": free, "elementary_abelian": is_elementary_abelian(G)}
        if free and not (is_perfect(G) or G.is_abelian()):
            return {"quotient_solitary_free": True, "reason": "neither perfect nor abelian"}
        return None
    return _sweep("thm-3.7", groups, events, check,
                  "nilpotent groups are quotient solitary free exactly when elementary abelian")


@claim("s2n-remark")
def _s2n_remark(groups, events, ctx):
    report = {}
    for G in groups:
        Q = qsol(G)
        entries = []
        char = characteristic_subgroups(G) if char_is_tractable(G) else None
        for M in maximal_subgroups(G):
            entries.append({
                "members": _members(M),
                "type": subgroup_type_label(M),
                "characteristic": (M in char) if char is not None else None,
                "in_qsol": M in Q,
            })
        events.log_group_checked(G.label, G.order, True)
        report[G.label] = {
            "maximal_types": sorted(e["type"] for e in entries),
            "maximal": entries,
            "qsol_orders": Q.orders(),
        }
    summary = "; ".join(f"{label}: {', '.join(r['maximal_types'])}" for label, r in report.items())
    return VerificationResult("s2n-remark", "probe", f"maximal subgroups {summary}", details=report)


@claim("char-remark")
def _char_remark(groups, events, ctx):
    tractable, skipped = [], []
    for G in groups:
        if char_is_tractable(G):
            tractable.append(G)
        else:
            skipped.append(G.label)
            events.log_group_skipped(G.label, "automorphism search too large")

    def check(G):
        char = characteristic_subgroups(G)
        for N in qsol(G):
            if N not in char:
                return {"subgroup": _members(N)}
        return None
    result = _sweep("char-remark", tractable, events, check, "QSol members are characteristic")
    if skipped:
        result.narrative += f"; not checked: {', '.join(skipped)}"
    result.details["skipped"] = skipped
    return result


# --- Worked examples and remarks ---

@claim("dihedral-example")
def _dihedral_example(groups, events, ctx):
    def check(G):
        n = G.order // 2
        if qsol(G) != predicted_qsol_dihedral(G.order, G):
            return {"qsol": [_members(H) for H in qsol(G)]}
        normals = {closure(G, [d % n]).mask for d in range(1, n + 1) if n % d == 0}
        normals.add((1 << G.order) - 1)
        if n % 2 == 0:
            normals.add(closure(G, [2, n]).mask)
            normals.add(closure(G, [2, n + 1]).mask)
        if normal_subgroups(G).masks != frozenset(normals):
            return {"normal_orders": normal_subgroups(G).orders()}
        expected = int(divisor_count(n)) + int(divisor_sigma(n))
        if len(all_subgroups(G)) != expected:
            return {"subgroups": len(all_subgroups(G)), "expected": expected}
        return None
    return _sweep("dihedral-example", groups, events, check,
                  "QSol, N(G) and subgroup counts of dihedral groups match the case formulas")


@claim("d8-separation")
def _d8_separation(groups, events, ctx):
    def check(G):
        rotations = closure(G, [1])
        centre = closure(G, [2])
        S, Q = sol(G), qsol(G)
        if not (centre in Q and centre not in S and rotations in S and rotations not in Q):
            return {"x2_in_qsol": centre in Q, "x2_in_sol": centre in S,
                    "x_in_sol": rotations in S, "x_in_qsol": rotations in Q}
        return None
    return _sweep("d8-separation", groups, events, check, "<x^2> in QSol only, <x> in Sol only")


@claim("z2z4-example")
def _z2z4_example(groups, events, ctx):
    def check(G):
        if G.order != 8:
            return None
        S, Q = sol(G), qsol(G)
        sol_types = [subgroup_type_label(H) for H in S]
        qsol_types = [subgroup_type_label(H) for H in Q]
        if sol_types != ["C1", "C2xC2", "C2xC4"] or qsol_types != ["C1", "C2", "C2xC4"]:
            return {"sol_types": sol_types, "qsol_types": qsol_types}
        if Q[1] != frattini(G) or S[1] != omega(G, 1):
            return {"reason": "middle terms are not the Frattini subgroup and omega_1"}
        if subgroup_type_label(delta(_presentation(G), frattini(G))) != "C2xC2":
            return {"reason": "delta of the Frattini subgroup is not C2xC2"}
        return None
    result = _sweep("z2z4-example", groups, events, check, "Sol and QSol of Z2 x Z4 are the stated chains")
    if result.status == "verified" and len(groups) == 2:
        small, big = groups
        if not lattice_isomorphic(qsol_lattice(small), qsol_lattice(big)) or chain_length(qsol_lattice(big)) != 2:
            return VerificationResult(
                "z2z4-example", "refuted", "QSol(Z2 x Z4) and QSol(Z4 x Z4) are not isomorphic chains",
                witness={"group": big.label, "qsol_orders": qsol(big).orders()},
            )
        result.narrative += "; QSol(Z4 x Z4) is an isomorphic chain"
    return result


@claim("d12-remark")
def _d12_remark(groups, events, ctx):
    rows = {}
    for G in groups:
        threes = [N for N in normal_subgroups(G) if N.order == 3]
        events.log_group_checked(G.label, G.order, len(threes) == 1)
        if len(threes) != 1:
            rows[G.label] = {"normal_order_3": len(threes)}
            continue
        H = threes[0]
        quo = quotient(G, H)
        above = [K for K in qsol(G) if H.issubset(K)]
        images = {project_subgroup(quo, K).mask for K in above}
        rows[G.label] = {
            "above_orders": [K.order for K in above],
            "quotient_type": quotient_type_label(G, H),
            "quotient_solitary_free": is_quotient_solitary_free(quo.group),
            "bijection": len(images) == len(above) and images == set(qsol(quo.group).masks),
        }
    summary = "; ".join(
        f"{label}: QSol members above H have orders {r.get('above_orders')}, "
        f"G/H is {r.get('quotient_type')}, bijection {r.get('bijection')}"
        for label, r in rows.items()
    )
    return VerificationResult("d12-remark", "probe", summary, details=rows)


@claim("derived-remark")
def _derived_remark(groups, events, ctx):
    def check(G):
        Q = qsol(G)
        if trivial_subgroup(G) not in Q or whole_subgroup(G) not in Q:
            return {"reason": "1 or G missing from QSol"}
        if derived_subgroup(G) not in Q:
            return {"derived": _members(derived_subgroup(G))}
        free = is_quotient_solitary_free(G)
        if is_elementary_abelian(G) and not free:
            return {"reason": "elementary abelian but not quotient solitary free"}
        if free and not (is_perfect(G) or G.is_abelian()):
            return {"reason": "quotient solitary free but neither perfect nor abelian"}
        return None
    return _sweep("derived-remark", groups, events, check, "1, G and G' lie in QSol(G)")


@claim("qsol-normal-remark")
def _qsol_normal_remark(groups, events, ctx):
    hypothesis, converse_only = [], []

    def check(G):
        orders = normal_subgroups(G).orders()
        equal = qsol(G) == normal_subgroups(G)
        if len(set(orders)) == len(orders):
            hypothesis.append(G.label)
            if not equal:
                return {"normal_orders": orders}
        elif equal:
            converse_only.append(G.label)
        return None
    result = _sweep("qsol-normal-remark", groups, events, check,
                    "distinct normal subgroup orders imply QSol = N(G)")
    result.details.update({"hypothesis_holds": len(hypothesis), "equal_without_hypothesis": converse_only})
    return result


@claim("maximal-qsol-remark")
def _maximal_qsol_remark(groups, events, ctx):
    def check(G):
        Q = qsol(G)
        some = any(M in Q for M in maximal_subgroups(G))
        if some != is_cyclic(G):
            return {"maximal_in_qsol": some, "cyclic": is_cyclic(G)}
        return None
    p_groups = [G for G in groups if G.order > 1 and is_p_group(G) is not None]
    return _sweep("maximal-qsol-remark", p_groups, events, check,
                  "a p-group has a maximal subgroup in QSol exactly when it is cyclic")


@claim("pi-e-remark")
def _pi_e_remark(groups, events, ctx):
    def check(G):
        orders = divisor_lattice(set(G.element_orders()))
        if not lattice_isomorphic(sol_lattice(G), orders):
            return {"lattice": "sol"}
        if not lattice_isomorphic(qsol_lattice(G), orders):
            return {"lattice": "qsol"}
        return None
    return _sweep("pi-e-remark", groups, events, check, "Sol and QSol are isomorphic to the element-order lattice")


@claim("eq-4")
def _eq_4(groups, events, ctx):
    def check(G):
        pres = _presentation(G)
        bad = check_eq_4(pres)
        if bad is not None:
            return {"subgroup": _members(bad), "reason": "isomorphism type mismatch"}
        bad = delta_is_involution(pres)
        if bad is not None:
            return {"subgroup": _members(bad), "reason": "delta is not an order-reversing involution"}
        return None
    return _sweep("eq-4", groups, events, check, "H ~ G/delta(H) and delta(H) ~ G/H for every subgroup")


@claim("prop-3.1")
def _prop_3_1(groups, events, ctx):
    for G in groups:
        result = verify_prop_3_1(_presentation(G))
        events.log_group_checked(G.label, G.order, result.status == "verified")
        if result.status == "refuted":
            events.log_witness(G.label, result.witness)
            return result
    return VerificationResult("prop-3.1", "verified", f"delta(QSol) = Sol for {len(groups)} abelian p-groups")


@claim("char-min-remark")
def _char_min_remark(groups, events, ctx):
    rows = {}
    for G in groups:
        if not char_is_tractable(G):
            events.log_group_skipped(G.label, "automorphism search too large")
            continue
        char = [N for N in characteristic_subgroups(G) if not N.is_trivial]
        minimal = [N for N in char if not any(M.mask != N.mask and M.issubset(N) for M in char)]
        pres = _presentation(G)
        F = frattini(G)
        rows[G.label] = {
            "minimal": [_members(N) for N in minimal],
            "unique": len(minimal) == 1,
            "delta_is_frattini": [delta(pres, N).mask == F.mask for N in minimal],
        }
        events.log_group_checked(G.label, G.order, len(minimal) == 1)
    unique = sum(1 for r in rows.values() if r["unique"])
    matches = sum(1 for r in rows.values() if r["unique"] and all(r["delta_is_frattini"]))
    return VerificationResult(
        "char-min-remark",
        "probe",
        f"{unique} of {len(rows)} groups have a unique minimal characteristic subgroup; "
        f"delta of it is the Frattini subgroup in {matches}",
        details=rows,
    )


@claim("lattice-laws")
def _lattice_laws(groups, events, ctx):
    cap = ctx.get("subgroup_lattice_max_order", 32)
    chains = product_lattice(chain_lattice(2), chain_lattice(3))
    if not is_distributive(chains):
        return VerificationResult("lattice-laws", "refuted", "product of chains is not distributive",
                                  witness={"group": "chain2 x chain3"})

    def check(G):
        try:
            built = [("normal", from_subgroup_family(normal_subgroups(G))), ("qsol", qsol_lattice(G))]
            if G.order <= cap:
                built.append(("subgroups", from_subgroup_family(all_subgroups(G))))
        except NotALattice as exc:
            return {"reason": str(exc), "pair": list(exc.pair)}
        if not is_modular(built[0][1]):
            return {"lattice": "normal", "reason": "not modular"}
        for name, L in built:
            if is_distributive(L) and not is_modular(L):
                return {"lattice": name, "reason": "distributive but not modular"}
        return None
    return _sweep("lattice-laws", groups, events, check,
                  "N(G) modular, QSol and L(G) lattices, distributive implies modular")


# --- Entry points ---

def _load_groups(claim_id: str, max_order: Optional[int], events: EventLogger) -> Tuple[List[Group], Dict[str, Any]]:
    entry = corpus.claim_entry(claim_id)
    ctx: Dict[str, Any] = {k: v for k, v in entry.items() if k not in ("corpus", "specs", "pairs")}
    specs = corpus.claim_specs(claim_id, max_order)
    if "pairs" in entry:
        ctx["pairs"] = corpus.claim_pairs(claim_id, max_order)
    groups = []
    for spec in specs:
        try:
            groups.append(corpus.group_for(spec))
        except OrderCapExceeded as exc:
            events.log_group_skipped(spec, str(exc))
            logger.warning(f"{claim_id}: skipping {spec}: {exc}")
    return groups, ctx


def verify(claim_id: str, max_order: Optional[int] = None) -> VerificationResult:
    """
    Check one claim over its corpus. `max_order` lowers the corpus cap
    (it never raises it above the manifest value).
    """
    if claim_id not in CLAIMS:
        raise ValueError(f"unknown claim id {claim_id!r}; known ids: {', '.join(CLAIMS)}")
    events = EventLogger()
    groups, ctx = _load_groups(claim_id, max_order, events)
    logger.info(f"{claim_id}: checking {len(groups)} groups")
    result = CLAIMS[claim_id](groups, events, ctx)
    result.details.update({
        "corpus": [G.label for G in groups],
        "max_order": corpus.claim_max_order(claim_id, max_order),
        "expected": corpus.claim_expectation(claim_id),
        "events": events.get_summary(),
    })
    if result.status == "refuted" and result.details["expected"] == "verified":
        logger.warning(f"{claim_id}: refuted: {result.narrative}")
    return result


def verify_all(
    claim_ids: Optional[List[str]] = None,
    max_order: Optional[int] = None,
    max_workers: int = 4,
) -> List[VerificationResult]:
    """Run claims in parallel; results come back in the requested order."""
    ids = list(claim_ids) if claim_ids is not None else corpus.claim_ids()
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = [executor.submit(verify, cid, max_order) for cid in ids]
        return [f.result() for f in futures]


def unexpected_refutations(results: Sequence[VerificationResult]) -> List[str]:
    """Claims expected to verify that came back refuted."""
    return [r.claim_id for r in results if r.status == "refuted" and r.details.get("expected") == "verified"]
