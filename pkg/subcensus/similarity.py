"""
Similarity classes of abelian groups with a given subgroup count.

Two groups are similar when they differ only in the primes of their cyclic
central Sylow subgroups. For an abelian group the cyclic Sylow components
contribute (a + 1) subgroups whatever their prime, so a class is a list of
free exponents plus the non-cyclic components, which keep their primes.
"""

from __future__ import annotations

import itertools
import logging
import math
import typing

import sympy

from .abelian import count_abelian, count_p_component, exponent_partitions, min_noncyclic_pgroup_count, p_component_lower_bound
from .types import AbelianShape, Partition, SimilarityClass, VerificationReport

logger = logging.getLogger(__name__)

FREE_PRIME_NAMES = "pqrstuvw"

# Class counts for k = 1..22 as published
PUBLISHED_CLASS_COUNTS = (1, 1, 1, 2, 2, 3, 1, 5, 2, 5, 2, 5, 1, 6, 4, 9, 2, 7, 1, 11, 2, 6)

PinnedComponent = typing.Tuple[int, Partition]


def _max_exponent(p: int, f: int) -> int:
    a = 2
    while min_noncyclic_pgroup_count(p, a + 1) <= f:
        a += 1
    return a


def pinned_components_with_count(f: int) -> typing.List[PinnedComponent]:
    """Non-cyclic abelian p-groups (concrete p) with exactly f subgroups"""
    if f < 2:
        raise ValueError(f"subgroup count must be at least 2, got {f}")
    found = []
    # Z_p x Z_p alone has p + 3 subgroups
    for p in sympy.primerange(2, f - 2):
        p = int(p)
        for a in range(2, _max_exponent(p, f) + 1):
            for parts in exponent_partitions(a):
                if len(parts) < 2:
                    continue
                if p_component_lower_bound(p, parts) > f:
                    continue
                if count_p_component(p, parts) == f:
                    found.append((p, parts))
    return sorted(found)


def _factorizations(k: int, largest: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    """k as non-increasing products of factors >= 2"""
    if k == 1:
        yield ()
        return
    for f in reversed(sympy.divisors(k)):
        if 2 <= f <= largest:
            for rest in _factorizations(k // f, f):
                yield (f,) + rest


def _sort_key(c: SimilarityClass):
    return (len(c.pinned), c.pinned, len(c.free_cyclic), tuple(-e for e in c.free_cyclic))


def enumerate_abelian_classes(k: int) -> typing.List[SimilarityClass]:
    """All similarity classes of abelian groups with exactly k subgroups"""
    if k < 1:
        raise ValueError(f"subgroup count must be positive, got {k}")
    pinned_cache: typing.Dict[int, typing.List[PinnedComponent]] = {}
    seen = {}
    for factors in _factorizations(k, k):
        options = []
        for f in factors:
            if f not in pinned_cache:
                pinned_cache[f] = pinned_components_with_count(f)
            options.append([("free", f - 1)] + [("pinned", comp) for comp in pinned_cache[f]])
        for choice in itertools.product(*options):
            free = [value for kind, value in choice if kind == "free"]
            pinned = [value for kind, value in choice if kind == "pinned"]
            if len({p for p, _ in pinned}) != len(pinned):
                continue
            c = SimilarityClass(free_cyclic=free, pinned=pinned)
            seen.setdefault((c.free_cyclic, c.pinned), c)
    classes = sorted(seen.values(), key=_sort_key)
    logger.debug("k=%d: %d abelian similarity classes", k, len(classes))
    return classes


def abelian_class_count(k: int) -> int:
    return len(enumerate_abelian_classes(k))


def render_free(exponents: typing.Sequence[int]) -> str:
    """Z_{p^4 q} style cyclic factor over arbitrary primes"""
    body = " ".join(
        name if e == 1 else f"{name}^{e}" for name, e in zip(FREE_PRIME_NAMES, sorted(exponents, reverse=True))
    )
    return f"Z_{body}" if len(body) == 1 else f"Z_{{{body}}}"


def render_class(c: SimilarityClass) -> str:
    pieces = [c.core] if c.core else []
    pieces.extend(f"Z_{p ** e}" for p, parts in c.pinned for e in parts)
    if c.free_cyclic:
        pieces.append(render_free(c.free_cyclic))
    return " x ".join(pieces) if pieces else "{e}"


def instantiate(c: SimilarityClass, skip: typing.Iterable[int] = ()) -> AbelianShape:
    """
    Concrete abelian group of the class: free exponents take the smallest
    primes not already pinned (the largest exponent the smallest prime).
    """
    taken = {p for p, _ in c.pinned} | set(skip)
    primes = (int(p) for p in itertools.count(2) if sympy.isprime(p) and p not in taken)
    components = dict(c.pinned)
    for e, p in zip(c.free_cyclic, primes):
        components[p] = (e,)
    return AbelianShape(components=components)


def verify_class(k: int, c: SimilarityClass) -> VerificationReport:
    """Evaluate the closed-form count of an instantiation of the class"""
    shape = instantiate(c)
    observed = count_abelian(shape)
    pinned_count = math.prod(count_p_component(p, parts) for p, parts in c.pinned)
    return VerificationReport(
        name=f"k={k} {render_class(c)}",
        claimed=k,
        observed=observed,
        pinned_count=pinned_count,
        instantiations={str(shape): observed},
        passed=observed == k,
    )


def class_table(K: int = 22) -> typing.List[typing.Tuple[int, typing.List[str]]]:
    """(k, rendered classes) for k = 1..K"""
    return [(k, [render_class(c) for c in enumerate_abelian_classes(k)]) for k in range(1, K + 1)]
