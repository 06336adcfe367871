"""
Subgroup counts of finite abelian groups.

The count of an abelian group is the product of the counts of its Sylow
components. Components with one or two cyclic factors, or of exponent p,
have closed forms; everything else is counted on the constructed group.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
import typing

import sympy
from sympy.utilities.iterables import partitions

from .errors import DomainError, InexactDivisionError, PreconditionError
from .groups import Group, direct_product, make_cyclic
from .lattice import count_subgroups
from .types import AbelianShape, FactoredOrder

logger = logging.getLogger(__name__)


def _require_prime(p: int) -> None:
    if not sympy.isprime(p):
        raise PreconditionError(f"{p} is not prime")


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(f"{what}: {numerator} is not divisible by {denominator}")
    return quotient


def count_cyclic(f: FactoredOrder) -> int:
    """Number of divisors: prod(a_i + 1)"""
    return math.prod(a + 1 for a in f.exponents)


def count_rank2(p: int, a: int, b: int) -> int:
    """Subgroups of Z_{p^a} x Z_{p^b}, a <= b"""
    _require_prime(p)
    if not 0 <= a <= b:
        raise PreconditionError(f"need 0 <= a <= b, got a={a}, b={b}")
    numerator = (
        (b - a + 1) * p ** (a + 2)
        - (b - a - 1) * p ** (a + 1)
        - (b + a + 3) * p
        + (b + a + 1)
    )
    return _exact_div(numerator, (p - 1) ** 2, f"count_rank2({p}, {a}, {b})")


def gaussian_binomial(n: int, i: int, p: int) -> int:
    """Number of i-dimensional subspaces of F_p^n"""
    if n < 0 or not 0 <= i <= n:
        raise PreconditionError(f"need 0 <= i <= n, got n={n}, i={i}")
    result = 1
    for j in range(1, i + 1):
        result = _exact_div(result * (p ** (n - j + 1) - 1), p ** j - 1, f"gaussian_binomial({n}, {j}, {p})")
    return result


def count_elementary(p: int, n: int) -> int:
    """Subgroups of (Z_p)^n: all subspaces of F_p^n"""
    _require_prime(p)
    if n < 1:
        raise PreconditionError(f"rank must be positive, got {n}")
    return sum(gaussian_binomial(n, i, p) for i in range(n + 1))


def p_group(p: int, partition: typing.Sequence[int], cap: typing.Optional[int] = None) -> Group:
    """Z_{p^l1} x Z_{p^l2} x ..."""
    G = make_cyclic(1, cap)
    for part in partition:
        factor = make_cyclic(p ** part, cap)
        G = factor if G.order == 1 else direct_product(G, factor, cap)
    return G


def abelian_group(shape: AbelianShape, cap: typing.Optional[int] = None) -> Group:
    G = make_cyclic(1, cap)
    for p, partition in shape.components.items():
        component = p_group(p, partition, cap)
        G = component if G.order == 1 else direct_product(G, component, cap)
    G.label = str(shape)
    return G


@functools.lru_cache(maxsize=None)
def _brute_force(p: int, partition: typing.Tuple[int, ...], cap: typing.Optional[int]) -> int:
    G = p_group(p, partition, cap)
    count = count_subgroups(G, cap)
    logger.debug("brute force: %s has %d subgroups", G.label, count)
    return count


def count_p_component(p: int, partition: typing.Sequence[int], cap: typing.Optional[int] = None) -> int:
    _require_prime(p)
    parts = sorted(partition, reverse=True)
    if not parts or any(part < 1 for part in parts):
        raise PreconditionError(f"partition must be non-empty with positive parts, got {list(partition)}")
    if len(parts) == 1:
        return parts[0] + 1
    if len(parts) == 2:
        return count_rank2(p, parts[1], parts[0])
    if parts[0] == 1:
        return count_elementary(p, len(parts))
    return _brute_force(p, tuple(parts), cap)


def count_abelian(shape: AbelianShape, cap: typing.Optional[int] = None) -> int:
    return math.prod(count_p_component(p, parts, cap) for p, parts in shape.components.items())


def p_component_lower_bound(p: int, partition: typing.Sequence[int]) -> int:
    """
    Lower bound on count_p_component that never builds a group.

    For A x Z_{p^c} every B x C with B <= A and C <= Z_{p^c} is a distinct
    subgroup, so the count is at least |Sub A| (c + 1). The elementary
    subgroup of the same rank bounds it as well.
    """
    _require_prime(p)
    parts = sorted(partition, reverse=True)
    if not parts or any(part < 1 for part in parts):
        raise PreconditionError(f"partition must be non-empty with positive parts, got {list(partition)}")
    if len(parts) <= 2 or parts[0] == 1:
        return count_p_component(p, parts)
    product = p_component_lower_bound(p, parts[:-1]) * (parts[-1] + 1)
    return max(product, count_elementary(p, len(parts)))


def min_noncyclic_pgroup_count(p: int, a: int) -> int:
    """Least subgroup count of a non-cyclic group of order p^a"""
    _require_prime(p)
    if a < 2:
        raise DomainError(f"groups of order {p}^{a} are cyclic")
    if p >= 3:
        return (a - 1) * (p + 1) + 2
    return {2: 5, 3: 6}.get(a, 3 * a - 1)


def exponent_partitions(n: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    """Partitions of n as descending tuples"""
    for multiplicities in partitions(n):
        yield tuple(sorted(itertools.chain.from_iterable(itertools.repeat(part, count) for part, count in multiplicities.items()), reverse=True))


def abelian_shapes(order: int) -> typing.Iterator[AbelianShape]:
    """Every abelian group of the given order, up to isomorphism"""
    f = FactoredOrder.of(order)
    choices = [[(p, parts) for parts in exponent_partitions(a)] for p, a in f.factors]
    for combination in itertools.product(*choices):
        yield AbelianShape(components=dict(combination))
