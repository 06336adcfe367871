"""
Exact subgroup lattices.

Every subgroup is a join of cyclic subgroups, so the enumeration starts from
the cyclic subgroups and joins new subgroups with cyclic ones until nothing
new appears. Subgroups are keyed by their membership bit-vector.
"""

from __future__ import annotations

import collections
import logging
import math
import typing

import numpy as np
import sympy

from .errors import PreconditionError
from .groups import Group, SubgroupSet, check_cap
from .types import LatticeSummary

logger = logging.getLogger(__name__)


def _adjoin(G: Group, H: SubgroupSet, g: int) -> SubgroupSet:
    """<H, g>, built as a union of right cosets of H"""
    g = int(g)
    if g in H:
        return H
    T = G.mul
    gens = _generators_of(G, H) + (g,)
    mask = H.mask.copy()
    block = H.elements
    reps = [0]
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        for s in gens:
            t = int(T[r, s])
            if not mask[t]:
                mask[T[block, t]] = True
                reps.append(t)
    return SubgroupSet.from_mask(mask, gens)


def _generators_of(G: Group, H: SubgroupSet) -> typing.Tuple[int, ...]:
    if H.generators is None:
        built = SubgroupSet.trivial(G.order)
        for x in H.elements:
            if x not in built:
                built = _adjoin(G, built, int(x))
        H.generators = built.generators
    return H.generators


def generated_subgroup(G: Group, seed: typing.Iterable[int]) -> SubgroupSet:
    """Smallest subgroup containing every element of seed"""
    H = SubgroupSet.trivial(G.order)
    for x in seed:
        if not 0 <= int(x) < G.order:
            raise IndexError(f"element index {x} out of range for order {G.order}")
        H = _adjoin(G, H, int(x))
    return H


def join(G: Group, H: SubgroupSet, K: SubgroupSet) -> SubgroupSet:
    """<H, K>"""
    J = H
    for g in _generators_of(G, K):
        J = _adjoin(G, J, g)
    return J


def generating_set(G: Group) -> typing.Tuple[int, ...]:
    """
    A small generating set, picked greedily from elements of largest order.
    """
    cached = G._cache.get("generating_set")
    if cached is None:
        orders = G.cyclic_data()[0]
        H = SubgroupSet.trivial(G.order)
        for x in np.argsort(-orders, kind="stable"):
            if H.order == G.order:
                break
            if int(x) not in H:
                H = _adjoin(G, H, int(x))
        cached = H.generators
        G._cache["generating_set"] = cached
    return cached


def cyclic_subgroups(G: Group) -> typing.List[SubgroupSet]:
    """The distinct cyclic subgroups <x>, each tagged with one generator"""
    cached = G._cache.get("cyclic_subgroups")
    if cached is None:
        _, powers = G.cyclic_data()
        packed = np.packbits(powers, axis=1, bitorder="little")
        rows, first = np.unique(packed, axis=0, return_index=True)
        cached = [
            SubgroupSet(G.order, int.from_bytes(row.tobytes(), "little"), (int(x),) if x else ())
            for row, x in zip(rows, first)
        ]
        G._cache["cyclic_subgroups"] = cached
    return cached


def all_subgroups(G: Group, cap: typing.Optional[int] = None) -> typing.List[SubgroupSet]:
    """Every subgroup of G exactly once, smallest orders first"""
    check_cap(G.order, cap, "subgroup lattice")
    cached = G._cache.get("subgroups")
    if cached is not None:
        return cached
    cyclics = cyclic_subgroups(G)
    found: typing.Dict[int, SubgroupSet] = {H.members: H for H in cyclics}
    frontier = list(found.values())
    rounds = 0
    while frontier:
        rounds += 1
        fresh = []
        for H in frontier:
            for Z in cyclics:
                if Z.issubset(H):
                    continue
                J = _adjoin(G, H, Z.generators[0])
                if J.members not in found:
                    found[J.members] = J
                    fresh.append(J)
        frontier = fresh
    subgroups = sorted(found.values(), key=lambda H: (H.order, H.members))
    logger.debug("%s: %d subgroups (%d cyclic) after %d rounds", G.label, len(subgroups), len(cyclics), rounds)
    G._cache["subgroups"] = subgroups
    return subgroups


def count_subgroups(G: Group, cap: typing.Optional[int] = None) -> int:
    return len(all_subgroups(G, cap))


def prime_powers(n: int) -> typing.Dict[int, int]:
    """p -> p^a for the full power of each prime dividing n"""
    return {int(p): int(p) ** int(a) for p, a in sympy.factorint(n).items()}


def summarize(G: Group, cap: typing.Optional[int] = None) -> LatticeSummary:
    subgroups = all_subgroups(G, cap)
    by_order = collections.Counter(H.order for H in subgroups)
    sylow_counts = {p: by_order[q] for p, q in prime_powers(G.order).items()}
    return LatticeSummary(total=len(subgroups), by_order=dict(sorted(by_order.items())), sylow_counts=sylow_counts)


def is_normal(G: Group, H: SubgroupSet) -> bool:
    """gHg^-1 = H for every generator g of G"""
    elems = H.elements
    mask = H.mask
    T = G.mul
    for g in generating_set(G):
        conj = T[T[g, elems], G.inv[g]]
        if not mask[conj].all():
            return False
    return True


def normal_subgroups(G: Group, cap: typing.Optional[int] = None) -> typing.List[SubgroupSet]:
    return [H for H in all_subgroups(G, cap) if is_normal(G, H)]


def sylow_subgroups(G: Group, p: int, cap: typing.Optional[int] = None) -> typing.List[SubgroupSet]:
    full = prime_powers(G.order).get(p)
    if full is None:
        raise PreconditionError(f"{p} does not divide {G.order}")
    return [H for H in all_subgroups(G, cap) if H.order == full]


def is_nilpotent(G: Group) -> bool:
    """
    Every Sylow subgroup is normal.

    A Sylow p-subgroup is normal iff the elements of p-power order number
    exactly p^a, which only needs element orders.
    """
    orders = G.cyclic_data()[0]
    for p, full in prime_powers(G.order).items():
        p_elements = np.count_nonzero(full % orders == 0)
        if p_elements != full:
            return False
    return True


def is_coprime_decomposable(G: Group, cap: typing.Optional[int] = None) -> bool:
    """G = N x M for normal N, M of coprime nontrivial orders"""
    n = G.order
    if len(prime_powers(n)) < 2:
        return False
    normal_orders = {H.order for H in normal_subgroups(G, cap)}
    for d in normal_orders:
        if 1 < d < n and math.gcd(d, n // d) == 1 and n // d in normal_orders:
            return True
    return False


def split_coprime_subgroup(G: Group, H: Group, K: SubgroupSet) -> typing.Tuple[SubgroupSet, SubgroupSet]:
    """
    Split a subgroup of G x H (coprime orders) into its projections.

    The pair (g, h) has index g*|H| + h; K must equal the product of its
    projections.
    """
    if math.gcd(G.order, H.order) != 1:
        raise PreconditionError(f"orders {G.order} and {H.order} are not coprime")
    if K.parent_order != G.order * H.order:
        raise PreconditionError(f"subgroup of order-{K.parent_order} group does not live in G x H")
    elems = K.elements
    left = SubgroupSet.from_elements(G.order, elems // H.order)
    right = SubgroupSet.from_elements(H.order, elems % H.order)
    if left.order * right.order != K.order:
        raise PreconditionError("subset is not a subgroup of the coprime product")
    return left, right
