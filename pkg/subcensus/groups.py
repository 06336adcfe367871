"""
Concrete finite groups as dense multiplication tables.

Element 0 is always the identity. A table is a numpy array of shape (n, n)
whose entry [x, y] is the index of the product x*y.
"""

from __future__ import annotations

import logging
import math
import typing

import numpy as np
import sympy

from . import config
from .errors import InvalidGeneratorError, InvalidPresentationError, OrderCapError, PreconditionError

logger = logging.getLogger(__name__)

TABLE_DTYPE = np.int32


def check_cap(order: int, cap: typing.Optional[int] = None, what: str = "group") -> None:
    """Raise OrderCapError when order is above the (configured) cap"""
    limit = config.max_order(cap)
    if order > limit:
        raise OrderCapError(order, limit, what)


def _pack(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _unpack(members: int, n: int) -> np.ndarray:
    raw = np.frombuffer(members.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, count=n, bitorder="little").astype(bool)


class SubgroupSet:
    """
    A subset of a parent group's element indices, stored as a bit-vector.

    `members` is a Python int whose bit x is set iff element x belongs to the
    set; it is the canonical key used for deduplication. `generators`, when
    known, generate the subgroup.
    """

    __slots__ = ("parent_order", "members", "generators", "_mask")

    def __init__(self, parent_order: int, members: int, generators: typing.Optional[typing.Tuple[int, ...]] = None):
        self.parent_order = parent_order
        self.members = members
        self.generators = generators
        self._mask: typing.Optional[np.ndarray] = None

    @classmethod
    def from_mask(cls, mask: np.ndarray, generators: typing.Optional[typing.Iterable[int]] = None) -> "SubgroupSet":
        sub = cls(len(mask), _pack(mask), None if generators is None else tuple(int(g) for g in generators))
        sub._mask = mask
        return sub

    @classmethod
    def from_elements(cls, parent_order: int, elements: typing.Iterable[int], generators=None) -> "SubgroupSet":
        mask = np.zeros(parent_order, dtype=bool)
        mask[list(elements)] = True
        return cls.from_mask(mask, generators)

    @classmethod
    def trivial(cls, parent_order: int) -> "SubgroupSet":
        return cls(parent_order, 1, ())

    @classmethod
    def whole(cls, G: "Group") -> "SubgroupSet":
        return cls(G.order, (1 << G.order) - 1, G.generators)

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            self._mask = _unpack(self.members, self.parent_order)
        return self._mask

    @property
    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def order(self) -> int:
        return self.members.bit_count()

    def __len__(self) -> int:
        return self.order

    def __contains__(self, x: int) -> bool:
        return bool((self.members >> int(x)) & 1)

    def issubset(self, other: "SubgroupSet") -> bool:
        return self.members & ~other.members == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.parent_order == other.parent_order and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.parent_order, self.members))

    def __repr__(self) -> str:
        return f"SubgroupSet(order={self.order}, parent_order={self.parent_order})"


class Group:
    """
    A finite group given by its multiplication table.

    Groups are immutable once built; derived data (element orders, powers)
    is cached on first use.
    """

    __slots__ = ("order", "mul", "inv", "label", "generators", "_cache")

    def __init__(self, mul: np.ndarray, label: str = "G", generators: typing.Optional[typing.Iterable[int]] = None):
        table = np.asarray(mul)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidPresentationError(f"multiplication table must be square and non-empty, got {table.shape}")
        n = table.shape[0]
        identity = np.flatnonzero((table == np.arange(n)).all(axis=1))
        if len(identity) == 0:
            raise InvalidPresentationError(f"{label}: no identity element")
        e = int(identity[0])
        if e != 0:
            # swap the labels 0 and e (the swap is its own inverse)
            perm = np.arange(n)
            perm[0], perm[e] = e, 0
            table = perm[table[np.ix_(perm, perm)]]
            if generators is not None:
                generators = [int(perm[g]) for g in generators]
        self.order = n
        self.mul = np.ascontiguousarray(table, dtype=TABLE_DTYPE)
        self.mul.setflags(write=False)
        self.inv = np.argmax(self.mul == 0, axis=1).astype(TABLE_DTYPE)
        self.inv.setflags(write=False)
        self.label = label
        self.generators = None if generators is None else tuple(int(g) for g in generators)
        self._cache: typing.Dict[str, typing.Any] = {}

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.label}, order={self.order})"

    def multiply(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def power(self, x: int, k: int) -> int:
        """x^k for k >= 0 by repeated squaring over the table"""
        result, base = 0, int(x)
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    def cyclic_data(self) -> typing.Tuple[np.ndarray, np.ndarray]:
        """
        (orders, powers) where orders[x] = o(x) and powers[x] is the
        membership mask of <x>; computed for all x at once.
        """
        cached = self._cache.get("cyclic")
        if cached is None:
            n = self.order
            idx = np.arange(n)
            powers = np.zeros((n, n), dtype=bool)
            orders = np.zeros(n, dtype=np.int64)
            cur = idx.copy()
            active = np.ones(n, dtype=bool)
            step = 1
            while active.any():
                rows = idx[active]
                powers[rows, cur[active]] = True
                closed = active & (cur == 0)
                orders[closed] = step
                active &= ~closed
                cur = self.mul[cur, idx]
                step += 1
            cached = (orders, powers)
            self._cache["cyclic"] = cached
        return cached


# Axiom checks
# ------------

def exhaustive_associativity(table: np.ndarray) -> bool:
    """Check (ab)c = a(bc) over all triples"""
    t = np.asarray(table)
    left = t[t, :]
    right = t[np.arange(len(t))[:, None, None], t[None, :, :]]
    return bool(np.array_equal(left, right))


def light_associativity(table: np.ndarray, generators: typing.Sequence[int]) -> bool:
    """
    Light's associativity test.

    The table is associative iff every generator g satisfies (xg)y = x(gy)
    for all x, y, provided the generators reach every element by products.
    """
    t = np.asarray(table)
    n = len(t)
    gens = [int(g) for g in generators]
    reached = np.zeros(n, dtype=bool)
    frontier = list(dict.fromkeys(gens))
    reached[frontier] = True
    while frontier:
        nxt = []
        for x in frontier:
            for y in t[x, gens]:
                if not reached[y]:
                    reached[y] = True
                    nxt.append(int(y))
        frontier = nxt
    if n > 1 and not reached.all():
        return False
    for g in gens:
        if not np.array_equal(t[t[:, g], :], t[:, t[g, :]]):
            return False
    return True


def check_group_axioms(G: Group, generators: typing.Optional[typing.Sequence[int]] = None) -> None:
    """Raise InvalidPresentationError unless G's table is a group table"""
    t = G.mul
    n = G.order
    expected = np.arange(n)
    if not (np.array_equal(t[0], expected) and np.array_equal(t[:, 0], expected)):
        raise InvalidPresentationError(f"{G.label}: element 0 is not a two-sided identity")
    if not (np.sort(t, axis=1) == expected).all() or not (np.sort(t, axis=0) == expected[:, None]).all():
        raise InvalidPresentationError(f"{G.label}: table is not a Latin square")
    gens = generators if generators is not None else G.generators
    if n <= config.get_settings().exhaustive_assoc_limit or gens is None:
        ok = exhaustive_associativity(t)
    else:
        ok = light_associativity(t, gens)
    if not ok:
        raise InvalidPresentationError(f"{G.label}: multiplication is not associative")


# Constructors
# ------------

def make_cyclic(n: int, cap: typing.Optional[int] = None) -> Group:
    """Cyclic group of order n with i*j = (i + j) mod n"""
    if n < 1:
        raise PreconditionError(f"cyclic group order must be positive, got {n}")
    check_cap(n, cap)
    r = np.arange(n)
    return Group(np.add.outer(r, r) % n, label=f"Z_{n}", generators=(1 % n,))


def direct_product(G: Group, H: Group, cap: typing.Optional[int] = None) -> Group:
    """Componentwise product; the pair (g, h) has index g*|H| + h"""
    n, m = G.order, H.order
    check_cap(n * m, cap)
    table = (G.mul.astype(np.int64)[:, None, :, None] * m + H.mul[None, :, None, :]).reshape(n * m, n * m)
    gens = None
    if G.generators is not None and H.generators is not None:
        gens = tuple(g * m for g in G.generators) + tuple(H.generators)
    return Group(table, label=f"{G.label} x {H.label}", generators=gens)


def metacyclic(n: int, m: int, k: int, t: int, cap: typing.Optional[int] = None, label: typing.Optional[str] = None) -> Group:
    """
    <x, y | x^n = e, y^m = x^t, y x y^-1 = x^k> of order n*m.

    Element x^i y^j has index i*m + j.
    """
    if n < 1 or m < 1:
        raise PreconditionError(f"metacyclic orders must be positive, got n={n}, m={m}")
    if n > 1 and not 1 <= k < n:
        raise InvalidPresentationError(f"action exponent k={k} must satisfy 1 <= k < {n}")
    if not 0 <= t < n:
        raise InvalidPresentationError(f"t={t} must satisfy 0 <= t < {n}")
    k %= n
    if math.gcd(k, n) != 1:
        raise InvalidPresentationError(f"gcd({k}, {n}) != 1")
    if pow(k, m, n) != 1 % n:
        raise InvalidPresentationError(f"{k}^{m} is not 1 mod {n}")
    if (t * (k - 1)) % n:
        raise InvalidPresentationError(f"t*(k-1) = {t * (k - 1)} is not 0 mod {n}")
    check_cap(n * m, cap)

    i = np.repeat(np.arange(n, dtype=np.int64), m)
    j = np.tile(np.arange(m, dtype=np.int64), n)
    kpow = np.array([pow(k, e, n) for e in range(m)], dtype=np.int64)
    s = j[:, None] + j[None, :]
    new_i = (i[:, None] + kpow[j][:, None] * i[None, :] + t * (s >= m)) % n
    table = new_i * m + s % m

    x = m if n > 1 else 0
    y = 1 if m > 1 else 0
    G = Group(table, label=label or f"Meta({n},{m},{k},{t})", generators=(x, y))
    check_group_axioms(G)
    if G.cyclic_data()[0][x] != n:
        raise InvalidPresentationError(f"{G.label}: x does not have order {n}")
    return G


def _closure(identity: np.ndarray, generators: typing.Sequence[np.ndarray], compose, cap: int, what: str):
    """Breadth-first closure of a generator set; identity first"""
    elements = [identity]
    seen = {identity.tobytes(): 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        i += 1
        for g in generators:
            y = compose(x, g)
            key = y.tobytes()
            if key not in seen:
                if len(elements) >= cap:
                    raise OrderCapError(len(elements) + 1, cap, what)
                seen[key] = len(elements)
                elements.append(y)
    return elements


def _table_from_codes(codes: np.ndarray, product_codes) -> np.ndarray:
    """Turn per-row products (as integer codes) into a table of indices"""
    order = np.argsort(codes)
    sorted_codes = codes[order]
    n = len(codes)
    table = np.empty((n, n), dtype=np.int64)
    for row in range(n):
        table[row] = order[np.searchsorted(sorted_codes, product_codes(row))]
    return table


def cycles_to_perm(degree: int, *cycles: typing.Sequence[int]) -> typing.List[int]:
    """One-line notation of a product of disjoint cycles, e.g. (0, 1, 2), (3, 4)"""
    perm = list(range(degree))
    for cycle in cycles:
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            perm[a] = b
    return perm


def from_permutations(degree: int, generators: typing.Sequence[typing.Sequence[int]],
                      cap: typing.Optional[int] = None, label: typing.Optional[str] = None) -> Group:
    """Group generated by permutations of 0..degree-1 (one-line notation)"""
    if degree < 1:
        raise PreconditionError(f"degree must be positive, got {degree}")
    gens = []
    for g in generators:
        arr = np.asarray(g, dtype=np.int64)
        if arr.shape != (degree,) or sorted(arr.tolist()) != list(range(degree)):
            raise InvalidGeneratorError(f"{list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(arr)
    limit = config.max_order(cap)
    elements = _closure(np.arange(degree, dtype=np.int64), gens, lambda x, g: x[g], limit, "permutation closure")

    perms = np.stack(elements)
    weights = degree ** np.arange(degree, dtype=np.int64)
    codes = perms @ weights
    table = _table_from_codes(codes, lambda row: perms[row][perms] @ weights)
    gen_index = [_element_index(elements, g) for g in gens]
    G = Group(table, label=label or f"Perm({degree})", generators=gen_index)
    logger.debug("%s: closure of %d permutations has order %d", G.label, len(gens), G.order)
    return G


def _element_index(elements: typing.Sequence[np.ndarray], target: np.ndarray) -> int:
    key = target.tobytes()
    for index, element in enumerate(elements):
        if element.tobytes() == key:
            return index
    raise InvalidGeneratorError("generator not found in its own closure")


def from_matrices(p: int, dim: int, generators: typing.Sequence[typing.Sequence[typing.Sequence[int]]],
                  cap: typing.Optional[int] = None, label: typing.Optional[str] = None) -> Group:
    """Group generated by invertible dim x dim matrices over Z_p"""
    if not sympy.isprime(p):
        raise PreconditionError(f"{p} is not prime")
    if dim < 1:
        raise PreconditionError(f"dimension must be positive, got {dim}")
    gens = []
    for g in generators:
        arr = np.asarray(g, dtype=np.int64) % p
        if arr.shape != (dim, dim):
            raise InvalidGeneratorError(f"generator must be {dim}x{dim}, got shape {arr.shape}")
        if sympy.Matrix(arr.tolist()).det() % p == 0:
            raise InvalidGeneratorError(f"{arr.tolist()} is singular mod {p}")
        gens.append(arr)
    limit = config.max_order(cap)
    elements = _closure(np.eye(dim, dtype=np.int64), gens, lambda x, g: (x @ g) % p, limit, "matrix closure")

    mats = np.stack(elements)
    weights = (p ** np.arange(dim * dim, dtype=np.int64)).reshape(dim, dim)
    codes = (mats * weights).sum(axis=(1, 2))
    table = _table_from_codes(codes, lambda row: ((mats[row] @ mats) % p * weights).sum(axis=(1, 2)))
    gen_index = [_element_index(elements, g) for g in gens]
    return Group(table, label=label or f"Mat({dim},{p})", generators=gen_index)


def subgroup_as_group(G: Group, H: SubgroupSet, label: typing.Optional[str] = None) -> Group:
    """Re-index the elements of H as a standalone group (identity stays at 0)"""
    elems = H.elements
    lookup = np.full(G.order, -1, dtype=np.int64)
    lookup[elems] = np.arange(len(elems))
    table = lookup[G.mul[np.ix_(elems, elems)]]
    if (table < 0).any():
        raise PreconditionError("subset is not closed under multiplication")
    gens = None if H.generators is None else [int(lookup[g]) for g in H.generators]
    return Group(table, label=label or f"{G.label}[{len(elems)}]", generators=gens)


# Named families
# --------------

def dihedral(n: int, cap: typing.Optional[int] = None) -> Group:
    """Dihedral group of order n (n even)"""
    if n < 2 or n % 2:
        raise PreconditionError(f"dihedral order must be even and at least 2, got {n}")
    half = n // 2
    return metacyclic(half, 2, half - 1 if half > 1 else 0, 0, cap=cap, label=f"D_{n}")


def dicyclic(n: int, cap: typing.Optional[int] = None) -> Group:
    """Dicyclic group of order n (4 | n): y^2 = x^(n/4), y x y^-1 = x^-1"""
    if n < 4 or n % 4:
        raise PreconditionError(f"dicyclic order must be a positive multiple of 4, got {n}")
    half = n // 2
    return metacyclic(half, 2, half - 1, n // 4, cap=cap, label=f"Dic_{n}")


def _require_power_of_two(n: int, least: int, what: str) -> None:
    if n < least or n & (n - 1):
        raise PreconditionError(f"{what} order must be a power of 2 and at least {least}, got {n}")


def quaternion(n: int, cap: typing.Optional[int] = None) -> Group:
    """Generalized quaternion group of order n"""
    _require_power_of_two(n, 8, "quaternion")
    G = dicyclic(n, cap=cap)
    G.label = f"Q_{n}"
    return G


def semidihedral(n: int, cap: typing.Optional[int] = None) -> Group:
    _require_power_of_two(n, 16, "semidihedral")
    return metacyclic(n // 2, 2, n // 4 - 1, 0, cap=cap, label=f"SD_{n}")


def modular(p: int, a: int, cap: typing.Optional[int] = None) -> Group:
    """M_{p^a} = <x, y | x^(p^(a-1)) = y^p = e, y x y^-1 = x^(1 + p^(a-2))>"""
    if not sympy.isprime(p) or a < 3:
        raise PreconditionError(f"M(p, a) needs a prime p and a >= 3, got ({p}, {a})")
    return metacyclic(p ** (a - 1), p, 1 + p ** (a - 2), 0, cap=cap, label=f"M_{p ** a}")


def symmetric(n: int, cap: typing.Optional[int] = None) -> Group:
    if n < 1:
        raise PreconditionError(f"degree must be positive, got {n}")
    check_cap(math.factorial(n), cap)
    gens = [cycles_to_perm(n, (0, 1)), cycles_to_perm(n, tuple(range(n)))] if n > 1 else [[0]]
    return from_permutations(n, gens, cap=cap, label=f"S_{n}")


def alternating(n: int, cap: typing.Optional[int] = None) -> Group:
    if n < 3:
        raise PreconditionError(f"alternating group needs degree >= 3, got {n}")
    check_cap(math.factorial(n) // 2, cap)
    gens = [cycles_to_perm(n, (0, 1, i)) for i in range(2, n)]
    return from_permutations(n, gens, cap=cap, label=f"A_{n}")


def special_linear(n: int, p: int, cap: typing.Optional[int] = None) -> Group:
    """SL(n, p), generated by the elementary transvections"""
    if n < 1:
        raise PreconditionError(f"dimension must be positive, got {n}")
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                mat = np.eye(n, dtype=np.int64)
                mat[i, j] = 1
                gens.append(mat)
    return from_matrices(p, n, gens or [np.eye(n, dtype=np.int64)], cap=cap, label=f"SL({n},{p})")


def heisenberg(p: int, cap: typing.Optional[int] = None) -> Group:
    """Upper unitriangular 3x3 matrices over Z_p, order p^3"""
    e12 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    e23 = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
    return from_matrices(p, 3, [e12, e23], cap=cap, label=f"Heis({p})")


def affine_general(p: int, cap: typing.Optional[int] = None) -> Group:
    """GA(1, p) = Z_p x| Z_(p-1), acting through a primitive root"""
    if not sympy.isprime(p):
        raise PreconditionError(f"{p} is not prime")
    root = int(sympy.primitive_root(p))
    return metacyclic(p, p - 1, root % p if p > 2 else 1, 0, cap=cap, label=f"GA(1,{p})")


def klein_by_cyclic(m: int, cap: typing.Optional[int] = None) -> Group:
    """
    (Z_2 x Z_2) x| Z_m where a generator of Z_m cycles the three involutions.

    Realized on 4 + m points: the Klein group acts on the first four and the
    generator is a 3-cycle there times an m-cycle on the rest.
    """
    if m < 3 or m % 3:
        raise PreconditionError(f"the cyclic factor must have order divisible by 3, got {m}")
    degree = 4 + m
    check_cap(4 * m, cap)
    a = cycles_to_perm(degree, (0, 1), (2, 3))
    y = cycles_to_perm(degree, (1, 2, 3), tuple(range(4, degree)))
    return from_permutations(degree, [a, y], cap=cap, label=f"(Z_2 x Z_2) x| Z_{m}")


# Element queries
# ---------------

def element_orders(G: Group) -> np.ndarray:
    return G.cyclic_data()[0]


def element_order(G: Group, x: int) -> int:
    """Least k >= 1 with x^k = e"""
    if not 0 <= x < G.order:
        raise IndexError(f"element index {x} out of range for order {G.order}")
    return int(element_orders(G)[x])


def is_abelian(G: Group) -> bool:
    cached = G._cache.get("abelian")
    if cached is None:
        cached = bool(np.array_equal(G.mul, G.mul.T))
        G._cache["abelian"] = cached
    return cached


def center(G: Group) -> SubgroupSet:
    """Elements commuting with every element"""
    return SubgroupSet.from_mask((G.mul == G.mul.T).all(axis=1))


