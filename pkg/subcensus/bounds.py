"""
Lower bounds on |Sub G| for non-nilpotent groups that do not split as a
direct product of coprime factors, and the candidate orders they leave open.
"""

from __future__ import annotations

import itertools
import logging
import typing

import sympy

from .abelian import min_noncyclic_pgroup_count
from .errors import PreconditionError, SearchWindowError
from .types import BoundReport, FactoredOrder

logger = logging.getLogger(__name__)

PRIME_WINDOW = 50
MAX_SEARCH = 30
FOUR_PRIME_BOUND = 20


def _require_increasing(*primes: int) -> None:
    for p in primes:
        if not sympy.isprime(p):
            raise PreconditionError(f"{p} is not prime")
    if list(primes) != sorted(set(primes)):
        raise PreconditionError(f"primes must be strictly increasing, got {primes}")


def _sylow_p_count(p: int, a: int) -> int:
    """m_p: fewest subgroups of a non-cyclic Sylow p-subgroup of order p^a"""
    return min_noncyclic_pgroup_count(p, a)


def bound_two_prime(p: int, q: int, a: int, b: int) -> int:
    """|G| = p^a q^b, p < q"""
    _require_increasing(p, q)
    if a < 1 or b < 1:
        raise PreconditionError(f"exponents must be positive, got a={a}, b={b}")
    terms = [b * q + a * b + a + 1]
    if b > 1:
        terms.append(b * (q + 1) + 2 * a + (a - 1) * min(p, b))
    if a > 1:
        terms.append(b + q + 1 + (b - 1) * min(a, q) + _sylow_p_count(p, a))
    return min(terms)


def _least_power_reaching(base: int, target: int) -> int:
    """base^i for the least i with base^i >= target"""
    value = 1
    while value < target:
        value *= base
    return value


def bound_three_prime(p: int, q: int, r: int, a: int, b: int, c: int) -> int:
    """|G| = p^a q^b r^c, p < q < r"""
    _require_increasing(p, q, r)
    if min(a, b, c) < 1:
        raise PreconditionError(f"exponents must be positive, got {(a, b, c)}")
    lower_orders = a + b + c + (a - 1) * min(b + 1, p) + (b - 1) * min(c + 1, q) + (c - 1) * min(a + 1, r)
    p_i = _least_power_reaching(p, r + 1)
    q_j = _least_power_reaching(q, r + 1)
    sylow_and_products = min(
        p + q + r + 2,
        q + 2 + min(p_i + 1, q_j, 2 * r + 1),
        min(r + 1, 2 * q + 2) + min(r + 1, 2 * q),
    )
    return lower_orders + sylow_and_products


def proof_three_prime_variant(p: int, q: int, r: int, a: int, b: int, c: int) -> int:
    """
    The three-prime bound assembled case by case, before simplification.

    Lower-order subgroups are counted with their pairings plus G and {e};
    the Sylow/product cases carry q+3 and the extra +1 of the one-normal
    branch. Kept for comparison only; candidate_orders never uses it.
    """
    _require_increasing(p, q, r)
    paired = (a - 1) * min(b + 2, p + 1) + (b - 1) * min(c + 2, q + 1) + (c - 1) * min(a + 2, r + 1) + 2
    p_i = _least_power_reaching(p, r + 1)
    q_j = _least_power_reaching(q, r + 1)
    cases = min(
        2 * q + r + 2,
        p + q + r + 3,
        q + 3 + min(p_i + 1, q_j, 2 * r + 1),
        min(r + 1, 2 * q + 2) + min(r + 1, 2 * q) + 1,
    )
    return paired + cases


def bound_pqr(p: int, q: int, r: int) -> int:
    """|G| = pqr, p < q < r"""
    _require_increasing(p, q, r)
    return r + 4 + min(r + 1, 2 * q)


def bound_four_or_more() -> int:
    return FOUR_PRIME_BOUND


def applicable_bound(f: FactoredOrder) -> BoundReport:
    """The bound that applies to a concrete order"""
    primes, exps = f.primes, f.exponents
    described = ",".join(f"{name}={p}" for name, p in zip("pqrs", primes))
    if not primes:
        raise PreconditionError("the trivial group has no bound to apply")
    if len(primes) == 1:
        (p,), (a,) = primes, exps
        if a == 1:
            return BoundReport(pattern=(1,), primes=[(p,)], constraint=described, bound=2, theorem="cyclic")
        return BoundReport(pattern=(a,), primes=[(p,)], constraint=described, bound=min_noncyclic_pgroup_count(p, a), theorem="p-group")
    if len(primes) == 2:
        bound = bound_two_prime(primes[0], primes[1], exps[0], exps[1])
        return BoundReport(pattern=tuple(exps), primes=[tuple(primes)], constraint=described, bound=bound, theorem="two-prime")
    if len(primes) == 3:
        if exps == [1, 1, 1]:
            return BoundReport(pattern=(1, 1, 1), primes=[tuple(primes)], constraint=described, bound=bound_pqr(*primes), theorem="pqr")
        bound = bound_three_prime(*primes, *exps)
        return BoundReport(pattern=tuple(exps), primes=[tuple(primes)], constraint=described, bound=bound, theorem="three-prime")
    return BoundReport(pattern=tuple(exps), primes=[tuple(primes)], constraint=described, bound=bound_four_or_more(), theorem="four-or-more")


def _describe(name: str, values: typing.Sequence[int], universe: typing.Sequence[int]) -> str:
    values = sorted(set(values))
    if len(values) == 1:
        return f"{name}={values[0]}"
    if values == [u for u in universe if u <= values[-1]]:
        return f"{name}<={values[-1]}"
    return f"{name}=" + ",".join(map(str, values))


def _pgroup_candidates(K: int, primes: typing.Sequence[int]) -> typing.List[BoundReport]:
    reports = []
    for p in primes:
        # non-abelian p-groups have order at least p^3
        a = 3
        while min_noncyclic_pgroup_count(p, a) <= K:
            reports.append(BoundReport(
                pattern=(a,), primes=[(p,)], constraint=f"p={p}",
                bound=min_noncyclic_pgroup_count(p, a), theorem="p-group",
            ))
            a += 1
    return reports


def _two_prime_candidates(K: int, primes: typing.Sequence[int]) -> typing.List[BoundReport]:
    reports = []
    for a, b in itertools.product(range(1, K + 1), repeat=2):
        admitted: typing.Dict[int, typing.List[int]] = {}
        best = None
        for q in primes[1:]:
            for p in (p for p in primes if p < q):
                value = bound_two_prime(p, q, a, b)
                if value <= K:
                    admitted.setdefault(q, []).append(p)
                    best = value if best is None else min(best, value)
        if not admitted:
            continue
        qs = sorted(admitted)
        constraint = _describe("q", qs, primes[1:])
        if any(admitted[q] != [p for p in primes if p < q] for q in qs):
            ps = sorted({p for q in qs for p in admitted[q]})
            constraint = f"p={','.join(map(str, ps))} and {constraint}"
        reports.append(BoundReport(
            pattern=(a, b),
            primes=[(p, q) for q in qs for p in admitted[q]],
            constraint=constraint,
            bound=best,
            theorem="two-prime",
        ))
    return reports


def _three_prime_candidates(K: int, primes: typing.Sequence[int]) -> typing.List[BoundReport]:
    reports = []
    triples = list(itertools.combinations(primes, 3))
    # every min(...) above is at least 2 and the Sylow term at least 11,
    # so the bound is at least 3(a + b + c) + 5
    patterns = [
        (a, b, c)
        for a, b, c in itertools.product(range(1, K + 1), repeat=3)
        if 3 * (a + b + c) + 5 <= K
    ]
    for pattern in patterns:
        admitted = []
        best = None
        for p, q, r in triples:
            if pattern == (1, 1, 1):
                value = bound_pqr(p, q, r)
            else:
                value = bound_three_prime(p, q, r, *pattern)
            if value <= K:
                admitted.append((p, q, r))
                best = value if best is None else min(best, value)
        if not admitted:
            continue
        rs = sorted({r for _, _, r in admitted})
        constraint = _describe("r", rs, primes[2:])
        full = [t for t in triples if t[2] in rs]
        if sorted(admitted) != sorted(full):
            pairs = sorted({(p, q) for p, q, _ in admitted})
            constraint += " and (p,q)=" + ",".join(f"({p},{q})" for p, q in pairs)
        reports.append(BoundReport(
            pattern=pattern,
            primes=admitted,
            constraint=constraint,
            bound=best,
            theorem="pqr" if pattern == (1, 1, 1) else "three-prime",
        ))
    return reports


def candidate_orders(K: int) -> typing.List[BoundReport]:
    """
    Order patterns a non-nilpotent, coprime-indecomposable group with at
    most K subgroups can have, plus the non-abelian p-group orders.
    """
    if not 1 <= K <= MAX_SEARCH:
        raise SearchWindowError(K, MAX_SEARCH, "subgroup count")
    primes = [int(p) for p in sympy.primerange(2, PRIME_WINDOW + 1)]
    reports = _pgroup_candidates(K, primes)
    reports += _two_prime_candidates(K, primes)
    reports += _three_prime_candidates(K, primes)
    if K >= FOUR_PRIME_BOUND:
        reports.append(BoundReport(
            pattern=(1, 1, 1, 1), constraint="any exponents and further primes",
            bound=FOUR_PRIME_BOUND, theorem="four-or-more",
        ))
    logger.info("K=%d: %d candidate families", K, len(reports))
    return reports
