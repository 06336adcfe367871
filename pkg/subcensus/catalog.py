"""
Non-abelian similarity classes with at most 19 subgroups.

Each entry pins its non-abelian part as a group expression (see expr.py)
and lists the cyclic factors that may sit at any further prime. Entries are
verified by counting subgroups on the constructed groups; the sequence of
class counts is only emitted once every entry verifies.
"""

from __future__ import annotations

import concurrent.futures
import functools
import itertools
import logging
import math
import typing

import sympy

from . import config, expr
from .bounds import applicable_bound
from .errors import PreconditionError, SearchWindowError, VerificationError
from .groups import Group, direct_product, is_abelian, make_cyclic
from .invariants import Violations, check_all
from .lattice import count_subgroups, is_coprime_decomposable, is_nilpotent
from .similarity import abelian_class_count, enumerate_abelian_classes, render_class
from .smallgroups import ISOMORPHISM_LIMIT, abelian_shape_of, enumerate_groups_of_order, isomorphic, similarity_of
from .types import CatalogEntry, CompletenessReport, CompletenessRow, FactoredOrder, SimilarityClass, VerificationReport

logger = logging.getLogger(__name__)

MAX_K = 19

PUBLISHED_NONABELIAN_COUNTS = {6: 2, 8: 2, 10: 7, 11: 2, 12: 6, 14: 11, 15: 4, 16: 13, 17: 1, 18: 15, 19: 4}
PUBLISHED_SEQUENCE = (1, 1, 1, 2, 2, 5, 1, 7, 2, 12, 4, 11, 1, 17, 8, 22, 3, 22, 5)

INVERSION = "inversion action, the only one of order 2"
SMALLEST = "smallest k > 1 of the required multiplicative order"


def _entry(k: int, name: str, recipe: str, free: typing.Tuple[int, ...] = (), notes: str = "", test_only: bool = False) -> CatalogEntry:
    return CatalogEntry(name=name, k=k, recipe=recipe, free_factors=free, notes=notes, test_only=test_only)


@functools.lru_cache(maxsize=None)
def _entries() -> typing.Tuple[CatalogEntry, ...]:
    return (
        _entry(6, "Q_8", "Q(8)"),
        _entry(6, "S_3", "S(3)"),

        _entry(8, "Dic_12", "Dic(12)"),
        _entry(8, "D_10", "D(10)"),

        _entry(10, "Z_7:Z_3", "Meta(7,3,2,0)", notes=SMALLEST),
        _entry(10, "Z_3:Z_8", "Meta(3,8,2,0)", notes=INVERSION),
        _entry(10, "D_8", "D(8)"),
        _entry(10, "D_14", "D(14)"),
        _entry(10, "M_27", "M(3,3)", notes="x^9 = y^3 = e, y x y^-1 = x^4"),
        _entry(10, "Dic_20", "Dic(20)"),
        _entry(10, "A_4", "A(4)"),

        _entry(11, "Q_16", "Q(16)"),
        _entry(11, "M_16", "M(2,4)"),

        _entry(12, "Q_8 x Z_p", "Q(8)", (1,)),
        _entry(12, "S_3 x Z_p", "S(3)", (1,)),
        _entry(12, "Z_3:Z_16", "Meta(3,16,2,0)", notes=INVERSION),
        _entry(12, "Dic_28", "Dic(28)"),
        _entry(12, "Z_7:Z_9", "Meta(7,9,2,0)", notes=SMALLEST),
        _entry(12, "Z_5:Z_8", "Meta(5,8,4,0)", notes="x^5 = y^8 = e, y x y^-1 = x^-1"),

        _entry(14, "M_32", "M(2,5)"),
        _entry(14, "S_3 x Z_3", "S(3) x Z(3)", notes="not a coprime product"),
        _entry(14, "Z_3:Z_32", "Meta(3,32,2,0)", notes=INVERSION),
        _entry(14, "Z_5:Z_16", "Meta(5,16,4,0)", notes="x^5 = y^16 = e, y x y^-1 = x^-1"),
        _entry(14, "GA(1,5)", "GA(1,5)", notes="Z_5:Z_4 acting through the primitive root 2"),
        _entry(14, "Z_7:Z_8", "Meta(7,8,6,0)", notes=INVERSION),
        _entry(14, "D_22", "D(22)"),
        _entry(14, "Z_27:Z_3", "Meta(27,3,10,0)", notes=SMALLEST + "; this is M_81"),
        _entry(14, "Z_7:Z_27", "Meta(7,27,2,0)", notes=SMALLEST),
        _entry(14, "Z_11:Z_5", "Meta(11,5,3,0)", notes=SMALLEST),
        _entry(14, "Z_25:Z_5", "Meta(25,5,6,0)", notes="x^25 = y^5 = e, y x y^-1 = x^6"),

        _entry(15, "SL(2,3)", "SL(2,3)"),
        _entry(15, "SD_16", "SD(16)", notes="x^8 = y^2 = e, y x y^-1 = x^3"),
        _entry(15, "Z_4:Z_4", "Meta(4,4,3,0)"),
        _entry(15, "(Z_2 x Z_2):Z_9", "VZ(9)", notes="generator of Z_9 cycles the three involutions"),

        _entry(16, "Dic_12 x Z_p", "Dic(12)", (1,)),
        _entry(16, "D_10 x Z_p", "D(10)", (1,)),
        _entry(16, "D_18", "D(18)"),
        _entry(16, "D_12", "D(12)"),
        _entry(16, "Z_5:Z_8", "Meta(5,8,3,0)", notes="x^5 = y^8 = e, y x y^-1 = x^3"),
        _entry(16, "Z_5:Z_32", "Meta(5,32,4,0)", notes="x^5 = y^32 = e, y x y^-1 = x^-1"),
        _entry(16, "Z_3:Z_64", "Meta(3,64,2,0)", notes=INVERSION),
        _entry(16, "Z_7:Z_16", "Meta(7,16,6,0)", notes=INVERSION),
        _entry(16, "Dic_44", "Dic(44)"),
        _entry(16, "D_26", "D(26)"),
        _entry(16, "Z_13:Z_3", "Meta(13,3,3,0)", notes=SMALLEST),
        _entry(16, "Z_7:Z_81", "Meta(7,81,2,0)", notes=SMALLEST),
        _entry(16, "Z_11:Z_25", "Meta(11,25,3,0)", notes=SMALLEST),

        _entry(17, "Z_32:Z_2", "Meta(32,2,17,0)", notes="x^32 = y^2 = e, y x y^-1 = x^17"),

        _entry(18, "Q_8 x Z_{p^2}", "Q(8)", (2,)),
        _entry(18, "S_3 x Z_{p^2}", "S(3)", (2,)),
        _entry(18, "Z_8.Z_4", "Meta(8,4,7,4)", notes="x^8 = e, x^4 = y^4, y x y^-1 = x^-1"),
        _entry(18, "Z_3:Z_128", "Meta(3,128,2,0)", notes="x^3 = y^128 = e, y x y^-1 = x^-1"),
        _entry(18, "Dic_18", "Dic(24)", notes="no dicyclic group of order 18 exists; the dicyclic group of order 24 has 18 subgroups"),
        _entry(18, "Z_5:Z_16", "Meta(5,16,3,0)", notes="x^5 = y^16 = e, y x y^-1 = x^3"),
        _entry(18, "Z_81:Z_3", "Meta(81,3,28,0)", notes=SMALLEST + "; this is M_243"),
        _entry(18, "Z_7:Z_243", "Meta(7,243,2,0)", notes=SMALLEST),
        _entry(18, "Z_49:Z_7", "Meta(49,7,8,0)", notes=SMALLEST + "; this is M_343"),
        _entry(18, "Z_13:Z_9", "Meta(13,9,3,0)", notes=SMALLEST),
        _entry(18, "Dic_52", "Dic(52)"),
        _entry(18, "Z_11:Z_125", "Meta(11,125,3,0)", notes=SMALLEST),
        _entry(18, "Z_11:Z_8", "Meta(11,8,10,0)", notes="Aut(Z_11) has order 10, so the action is inversion"),
        _entry(18, "Z_7:Z_32", "Meta(7,32,6,0)", notes=INVERSION),
        _entry(18, "Z_5:Z_64", "Meta(5,64,4,0)", notes="x^5 = y^64 = e, y x y^-1 = x^-1"),

        _entry(19, "Z_2 x Q_8", "Z(2) x Q(8)", notes="not a coprime product"),
        _entry(19, "D_16", "D(16)"),
        _entry(19, "(Z_3 x Z_3):Z_3", "Heis(3)", notes="exponent 3"),
        _entry(19, "Dic_36", "Dic(36)"),

        _entry(59, "A_5", "A(5)", test_only=True),
        _entry(19, "Z_9:Z_4", "Meta(9,4,8,0)", notes="isomorphic to Dic_36", test_only=True),
    )


def catalog_entries(include_test_only: bool = False) -> typing.List[CatalogEntry]:
    return [e for e in _entries() if include_test_only or not e.test_only]


def render_entry(e: CatalogEntry) -> str:
    """Group expression of the entry with its free factors, e.g. Q(8) x Z(p^2)"""
    names = "pqrs"
    free = [f"Z({name})" if f == 1 else f"Z({name}^{f})" for name, f in zip(names, e.free_factors)]
    return " x ".join([e.recipe] + free)


def pinned_group(e: CatalogEntry) -> Group:
    """The non-abelian part of the entry (shared, do not mutate)"""
    return expr.build(e.recipe)


def default_assignments(e: CatalogEntry, count: int = 2) -> typing.List[typing.Dict[int, int]]:
    """
    `count` assignments of free-factor positions to primes: the smallest
    primes coprime to the pinned order, shifted by one for each assignment.
    """
    if not e.free_factors:
        return []
    pinned_order = pinned_group(e).order
    usable = [p for p in itertools.islice((q for q in itertools.count(2) if sympy.isprime(q)), 50) if pinned_order % p]
    width = len(e.free_factors)
    return [dict(enumerate(usable[shift:shift + width])) for shift in range(count)]


def build_entry(e: CatalogEntry, prime_assignment: typing.Mapping[int, int]) -> Group:
    """The entry's group with every free factor placed at its assigned prime"""
    pinned = pinned_group(e)
    if sorted(prime_assignment) != list(range(len(e.free_factors))):
        raise PreconditionError(f"{e.name}: expected primes for {len(e.free_factors)} free factor(s), got {dict(prime_assignment)}")
    primes = [prime_assignment[i] for i in range(len(e.free_factors))]
    for p in primes:
        if not sympy.isprime(p):
            raise PreconditionError(f"{e.name}: {p} is not prime")
        if pinned.order % p == 0:
            raise PreconditionError(f"{e.name}: {p} divides the pinned order {pinned.order}")
    if len(set(primes)) != len(primes):
        raise PreconditionError(f"{e.name}: free primes must be distinct, got {primes}")
    G = pinned
    for p, f in zip(primes, e.free_factors):
        G = direct_product(G, make_cyclic(p ** f))
    if primes:
        G.label = e.name.replace("{p^2}", str(primes[0] ** 2)).replace("_p", f"_{primes[0]}")
    return G


def verify_entry(e: CatalogEntry) -> VerificationReport:
    """
    Brute-force count of the pinned part times prod(f + 1) over free
    factors, cross-checked on two fully instantiated groups.
    """
    pinned_count = count_subgroups(pinned_group(e))
    observed = pinned_count * math.prod(f + 1 for f in e.free_factors)
    instantiations = {}
    for assignment in default_assignments(e):
        G = build_entry(e, assignment)
        instantiations[G.label] = count_subgroups(G)
    passed = observed == e.k and all(count == e.k for count in instantiations.values())
    report = VerificationReport(
        name=e.name,
        claimed=e.k,
        observed=observed,
        pinned_count=pinned_count,
        instantiations=instantiations,
        passed=passed,
    )
    if passed:
        logger.info("%s: %d subgroups as claimed", e.name, e.k)
    else:
        logger.warning("%s: claimed %d, observed %d (instantiations %s)", e.name, e.k, observed, instantiations)
    return report


def verify_catalog(entries: typing.Optional[typing.Sequence[CatalogEntry]] = None,
                   workers: typing.Optional[int] = None) -> typing.List[VerificationReport]:
    """Verify entries, in parallel when workers > 1; reports keep catalog order"""
    entries = catalog_entries() if entries is None else list(entries)
    workers = config.get_settings().workers if workers is None else workers
    if workers <= 1:
        return [verify_entry(e) for e in entries]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify_entry, entries))


def nonabelian_class_count(k: int, entries: typing.Optional[typing.Sequence[CatalogEntry]] = None) -> int:
    if not 1 <= k <= MAX_K:
        raise SearchWindowError(k, MAX_K, "subgroup count")
    entries = catalog_entries() if entries is None else entries
    return sum(1 for e in entries if e.k == k and not e.test_only)


def sequence_terms(K: int = MAX_K, reports: typing.Optional[typing.Sequence[VerificationReport]] = None) -> typing.List[int]:
    """
    Number of similarity classes of groups with exactly k subgroups, k = 1..K.

    Refuses to answer unless every catalog entry verifies.
    """
    if not 1 <= K <= MAX_K:
        raise SearchWindowError(K, MAX_K, "sequence length")
    reports = verify_catalog() if reports is None else reports
    failed = [r.name for r in reports if not r.passed]
    if failed:
        raise VerificationError(f"catalog entries failed verification: {', '.join(failed)}")
    return [abelian_class_count(k) + nonabelian_class_count(k) for k in range(1, K + 1)]


def entry_invariants(e: CatalogEntry) -> typing.Dict[str, Violations]:
    """Lattice invariants of the pinned group plus soundness of the order bound"""
    G = pinned_group(e)
    results = check_all(G)
    results["bound"] = bound_violations(G)
    return results


def bound_violations(G: Group) -> Violations:
    """The bound for |G| must not exceed |Sub G| when it applies to G"""
    if is_nilpotent(G) or is_coprime_decomposable(G):
        return []
    report = applicable_bound(FactoredOrder.of(G.order))
    count = count_subgroups(G)
    if report.bound > count:
        return [f"{report.theorem} bound {report.bound} exceeds |Sub {G.label}| = {count}"]
    return []


def _catalog_match(k: int, cls: SimilarityClass, core: Group) -> typing.Optional[CatalogEntry]:
    for e in catalog_entries():
        if e.k != k or tuple(sorted(e.free_factors, reverse=True)) != cls.free_cyclic:
            continue
        pinned = pinned_group(e)
        if pinned.order == core.order <= ISOMORPHISM_LIMIT and isomorphic(pinned, core):
            return e
    return None


def completeness_check_small_orders(max_order: int = 12) -> CompletenessReport:
    """
    Every group of order <= max_order with at most 19 subgroups must be
    accounted for by the abelian classes or by a catalog entry.
    """
    report = CompletenessReport()
    for n in range(1, max_order + 1):
        for G in enumerate_groups_of_order(n):
            k = count_subgroups(G)
            cls, core = similarity_of(G)
            if is_abelian(G):
                label = str(abelian_shape_of(G))
                similarity = render_class(cls)
                known = {(c.free_cyclic, c.pinned) for c in enumerate_abelian_classes(k)} if k <= MAX_K else set()
                covered = k > MAX_K or (cls.free_cyclic, cls.pinned) in known
                source = "abelian classes" if covered else ""
            else:
                match = _catalog_match(k, cls, core)
                label = match.name if match else G.label
                similarity = render_entry(match) if match else render_class(cls)
                covered = k > MAX_K or match is not None
                source = "catalog" if match else ""
            if not covered:
                logger.warning("order %d: %s with %d subgroups is not covered", n, label, k)
            report.rows.append(CompletenessRow(order=n, label=label, subgroups=k, similarity=similarity, covered=covered, source=source))
    return report
