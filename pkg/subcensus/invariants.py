"""
Structural checks every subgroup lattice must pass.

Each check returns a list of human-readable violations; an empty list means
the group passes. `check_all` runs the lot and is what `verify tables`
reports per catalog group.
"""

from __future__ import annotations

import logging
import math
import typing

import numpy as np

from .groups import Group, direct_product
from .lattice import (
    all_subgroups,
    count_subgroups,
    is_normal,
    join,
    normal_subgroups,
    prime_powers,
    split_coprime_subgroup,
    summarize,
)

logger = logging.getLogger(__name__)

Violations = typing.List[str]


def lagrange(G: Group) -> Violations:
    """Every subgroup contains the identity and has order dividing |G|"""
    out = []
    for H in all_subgroups(G):
        if 0 not in H:
            out.append(f"subgroup of order {H.order} misses the identity")
        if G.order % H.order:
            out.append(f"subgroup order {H.order} does not divide {G.order}")
    return out


def wielandt(G: Group) -> Violations:
    """For a p-group, the number of subgroups of each order p^i is 1 mod p"""
    powers = prime_powers(G.order)
    if len(powers) != 1:
        return []
    (p, full), = powers.items()
    by_order = summarize(G).by_order
    out = []
    q = 1
    while q <= full:
        if by_order.get(q, 0) % p != 1 % p:
            out.append(f"{by_order.get(q, 0)} subgroups of order {q}, not 1 mod {p}")
        q *= p
    return out


def sylow_counts(G: Group) -> Violations:
    """n_p = 1 mod p and n_p divides the p'-part of |G|"""
    out = []
    for p, n_p in summarize(G).sylow_counts.items():
        rest = G.order // prime_powers(G.order)[p]
        if n_p % p != 1:
            out.append(f"n_{p} = {n_p} is not 1 mod {p}")
        if rest % n_p:
            out.append(f"n_{p} = {n_p} does not divide {rest}")
    return out


def prime_index_normality(G: Group) -> Violations:
    """Subgroups whose index is the smallest prime divisor of |G| are normal"""
    if G.order == 1:
        return []
    smallest = min(prime_powers(G.order))
    return [
        f"subgroup of index {smallest} is not normal"
        for H in all_subgroups(G)
        if H.order * smallest == G.order and not is_normal(G, H)
    ]


def nh_closure(G: Group) -> Violations:
    """For N normal, the set product NH is a subgroup already in the lattice"""
    subgroups = all_subgroups(G)
    known = {H.members for H in subgroups}
    out = []
    for N in normal_subgroups(G):
        for H in subgroups:
            meet = (N.members & H.members).bit_count()
            J = join(G, N, H)
            if J.order * meet != N.order * H.order:
                out.append(f"NH for |N|={N.order}, |H|={H.order} is not a subgroup")
            elif J.members not in known:
                out.append(f"NH of order {J.order} missing from the lattice")
    return out


def burnside_complement(G: Group) -> Violations:
    """A cyclic Sylow subgroup at the smallest prime has a normal complement"""
    if G.order == 1:
        return []
    powers = prime_powers(G.order)
    p = min(powers)
    full = powers[p]
    if full == G.order or not (G.cyclic_data()[0] == full).any():
        return []
    complement = G.order // full
    if any(N.order == complement for N in normal_subgroups(G)):
        return []
    return [f"cyclic Sylow {p}-subgroup without a normal complement of order {complement}"]


def coprime_multiplicativity(G: Group, H: Group) -> Violations:
    """|Sub(G x H)| = |Sub G| |Sub H| and every subgroup splits into projections"""
    if math.gcd(G.order, H.order) != 1:
        return []
    product = direct_product(G, H)
    out = []
    expected = count_subgroups(G) * count_subgroups(H)
    observed = count_subgroups(product)
    if observed != expected:
        out.append(f"|Sub({product.label})| = {observed}, expected {expected}")
    left = {K.members for K in all_subgroups(G)}
    right = {K.members for K in all_subgroups(H)}
    for K in all_subgroups(product):
        a, b = split_coprime_subgroup(G, H, K)
        if a.members not in left or b.members not in right:
            out.append(f"projection of an order-{K.order} subgroup is not a subgroup")
            continue
        rebuilt = (a.elements[:, None] * H.order + b.elements[None, :]).ravel()
        if not np.array_equal(np.sort(rebuilt), K.elements):
            out.append(f"order-{K.order} subgroup is not the product of its projections")
    return out


SUITE: typing.Dict[str, typing.Callable[[Group], Violations]] = {
    "lagrange": lagrange,
    "wielandt": wielandt,
    "sylow": sylow_counts,
    "prime-index": prime_index_normality,
    "nh-closure": nh_closure,
    "burnside": burnside_complement,
}


def check_all(G: Group) -> typing.Dict[str, Violations]:
    results = {name: check(G) for name, check in SUITE.items()}
    for name, violations in results.items():
        for violation in violations:
            logger.warning("%s: %s: %s", G.label, name, violation)
    return results
