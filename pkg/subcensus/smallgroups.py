"""
Groups of very small order: isomorphism testing, automorphisms, and a
from-scratch enumeration of every group of order at most 12.

Every group of order below 60 is solvable, so it has a normal subgroup of
prime index p and is an extension of a smaller group N by Z_p. Such an
extension is fixed by an automorphism phi of N (conjugation by the new
generator t) and the element c = t^p of N, subject to phi(c) = c and
phi^p = conjugation by c. Enumerating those pairs and removing isomorphic
duplicates yields every group of the order.
"""

from __future__ import annotations

import collections
import logging
import typing

import numpy as np
import sympy

from .errors import OrderCapError, PreconditionError
from .groups import Group, SubgroupSet, check_group_axioms, is_abelian, make_cyclic, subgroup_as_group
from .lattice import generating_set, prime_powers
from .types import AbelianShape, SimilarityClass

logger = logging.getLogger(__name__)

ISOMORPHISM_LIMIT = 64
ENUMERATION_LIMIT = 12

Mapping = typing.List[int]


def order_profile(G: Group) -> typing.Tuple[typing.Tuple[int, int], ...]:
    """Sorted (element order, multiplicity) pairs"""
    return tuple(sorted(collections.Counter(G.cyclic_data()[0].tolist()).items()))


def _fingerprint(G: Group):
    center_size = int((G.mul == G.mul.T).all(axis=1).sum())
    return G.order, is_abelian(G), center_size, order_profile(G)


def _extend(gt, ht, gens, images, n) -> typing.Optional[Mapping]:
    """
    The map generated by gens -> images on <gens>, or None if it is not a
    well-defined injective homomorphism there.
    """
    phi = [-1] * n
    used = [False] * n
    phi[0] = 0
    used[0] = True
    queue = [0]
    for x in queue:
        fx = phi[x]
        for s, t in zip(gens, images):
            y = gt[x][s]
            image = ht[fx][t]
            if phi[y] < 0:
                if used[image]:
                    return None
                phi[y] = image
                used[image] = True
                queue.append(y)
            elif phi[y] != image:
                return None
    return phi


def isomorphisms(G: Group, H: Group) -> typing.Iterator[Mapping]:
    """
    Every isomorphism G -> H as an index map, found by backtracking over
    images of a generating set of G that respect element orders.
    """
    if G.order > ISOMORPHISM_LIMIT or H.order > ISOMORPHISM_LIMIT:
        raise OrderCapError(max(G.order, H.order), ISOMORPHISM_LIMIT, "isomorphism test")
    if _fingerprint(G) != _fingerprint(H):
        return
    n = G.order
    gt, ht = G.mul.tolist(), H.mul.tolist()
    gens = list(generating_set(G))
    g_orders, h_orders = G.cyclic_data()[0], H.cyclic_data()[0]
    candidates = [np.flatnonzero(h_orders == g_orders[g]).tolist() for g in gens]

    def search(depth: int, images: typing.List[int]):
        partial = _extend(gt, ht, gens[:depth], images, n)
        if partial is None:
            return
        if depth == len(gens):
            if -1 not in partial:
                yield partial
            return
        for image in candidates[depth]:
            yield from search(depth + 1, images + [image])

    yield from search(0, [])


def isomorphic(G: Group, H: Group) -> bool:
    return next(isomorphisms(G, H), None) is not None


def automorphisms(G: Group) -> typing.List[Mapping]:
    cached = G._cache.get("automorphisms")
    if cached is None:
        cached = list(isomorphisms(G, G))
        G._cache["automorphisms"] = cached
    return cached


def cyclic_extensions(N: Group, p: int) -> typing.List[Group]:
    """
    Every group G with a normal subgroup N of index p (one per valid
    (phi, c) pair; isomorphic duplicates are not removed).
    """
    if not sympy.isprime(p):
        raise PreconditionError(f"{p} is not prime")
    m = N.order
    nt = N.mul
    identity = np.arange(m)
    groups = []
    for phi in automorphisms(N):
        phi = np.asarray(phi)
        powers = [identity]
        for _ in range(p):
            powers.append(phi[powers[-1]])
        for c in range(m):
            if phi[c] != c:
                continue
            inner = nt[nt[c, identity], N.inv[c]]
            if not np.array_equal(powers[p], inner):
                continue
            groups.append(_extension_table(N, np.stack(powers[:p]), c, p))
    return groups


def _extension_table(N: Group, phi_powers: np.ndarray, c: int, p: int) -> Group:
    """(a, i)(b, j) = (a phi^i(b) c^[i+j >= p], i+j mod p); (a, i) has index i*|N| + a"""
    m = N.order
    a = np.tile(np.arange(m), p)
    i = np.repeat(np.arange(p), m)
    first = N.mul[a[:, None], phi_powers[i[:, None], a[None, :]]]
    wrap = (i[:, None] + i[None, :]) >= p
    body = np.where(wrap, N.mul[first, c], first)
    table = ((i[:, None] + i[None, :]) % p) * m + body
    G = Group(table, label=f"{N.label}.Z_{p}")
    check_group_axioms(G)
    return G


def _dedupe(groups: typing.Iterable[Group]) -> typing.List[Group]:
    kept: typing.Dict[tuple, typing.List[Group]] = collections.defaultdict(list)
    result = []
    for G in groups:
        bucket = kept[_fingerprint(G)]
        if any(isomorphic(G, H) for H in bucket):
            continue
        bucket.append(G)
        result.append(G)
    return result


_enumerated: typing.Dict[int, typing.List[Group]] = {}


def enumerate_groups_of_order(n: int) -> typing.List[Group]:
    """One group per isomorphism type of order n"""
    if n < 1:
        raise PreconditionError(f"order must be positive, got {n}")
    if n > ENUMERATION_LIMIT:
        raise OrderCapError(n, ENUMERATION_LIMIT, "group enumeration")
    if n not in _enumerated:
        if n == 1:
            _enumerated[n] = [make_cyclic(1)]
        else:
            candidates = []
            for p in prime_powers(n):
                for N in enumerate_groups_of_order(n // p):
                    candidates.extend(cyclic_extensions(N, p))
            _enumerated[n] = _dedupe(candidates)
            logger.debug("order %d: %d extensions, %d isomorphism types", n, len(candidates), len(_enumerated[n]))
    return _enumerated[n]


def abelian_shape_of(G: Group) -> AbelianShape:
    """
    Invariants of an abelian group from its order statistics.

    |{x : x^(p^i) = e}| = p^(s_i) with s_i = sum(min(part, i)), so
    s_i - s_(i-1) is the number of parts >= i.
    """
    if not is_abelian(G):
        raise PreconditionError(f"{G.label} is not abelian")
    orders = G.cyclic_data()[0]
    components = {}
    for p, full in prime_powers(G.order).items():
        sizes = []
        q = 1
        while q <= full:
            count = int(np.count_nonzero(q % orders == 0))
            sizes.append(sympy.multiplicity(p, count))
            q *= p
        at_least = [sizes[i] - sizes[i - 1] for i in range(1, len(sizes))] + [0]
        parts = []
        for i in range(1, len(sizes)):
            parts.extend([i] * (at_least[i - 1] - at_least[i]))
        components[p] = tuple(parts)
    return AbelianShape(components=components)


def similarity_of(G: Group) -> typing.Tuple[SimilarityClass, Group]:
    """
    The similarity class of G and its core.

    Cyclic central Sylow subgroups become free exponents. What remains is
    the core, the Hall subgroup of the other primes; for abelian groups it
    splits into pinned components.
    """
    orders = G.cyclic_data()[0]
    central = (G.mul == G.mul.T).all(axis=1)
    free = []
    stripped = 1
    for p, full in prime_powers(G.order).items():
        p_elements = full % orders == 0
        normal = np.count_nonzero(p_elements) == full
        if normal and (orders[p_elements] == full).any() and central[p_elements].all():
            free.append(sympy.multiplicity(p, full))
            stripped *= p
    mask = np.gcd(orders, stripped) == 1
    core = subgroup_as_group(G, SubgroupSet.from_mask(mask), label=f"core of {G.label}")
    if is_abelian(core):
        shape = abelian_shape_of(core)
        return SimilarityClass(free_cyclic=free, pinned=list(shape.components.items())), core
    return SimilarityClass(free_cyclic=free, core=core.label), core
