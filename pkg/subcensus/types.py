"""Data models shared across the census modules."""

from __future__ import annotations

import math
import typing

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing_extensions import Self, TypeAlias

Partition: TypeAlias = typing.Tuple[int, ...]


class FactoredOrder(BaseModel):
    """An integer given as (prime, exponent) pairs with strictly increasing primes"""

    model_config = ConfigDict(frozen=True)

    factors: typing.Tuple[typing.Tuple[int, int], ...] = ()

    @field_validator("factors")
    @classmethod
    def _check_factors(cls, factors):
        previous = 1
        for p, a in factors:
            if not sympy.isprime(p):
                raise ValueError(f"{p} is not prime")
            if a < 1:
                raise ValueError(f"exponent of {p} must be positive, got {a}")
            if p <= previous:
                raise ValueError("primes must be distinct and strictly increasing")
            previous = p
        return factors

    @classmethod
    def of(cls, n: int) -> Self:
        if n < 1:
            raise ValueError(f"cannot factor {n}")
        return cls(factors=tuple(sorted(sympy.factorint(n).items())))

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse '2^3*3' or '2^3 * 3^1' (factors in any order)"""
        pairs: typing.Dict[int, int] = {}
        for chunk in text.replace(" ", "").split("*"):
            if not chunk:
                raise ValueError(f"empty factor in '{text}'")
            base, _, exp = chunk.partition("^")
            p, a = int(base), int(exp) if exp else 1
            if p in pairs:
                raise ValueError(f"prime {p} repeated in '{text}'")
            pairs[p] = a
        return cls(factors=tuple(sorted(pairs.items())))

    @property
    def value(self) -> int:
        return math.prod(p**a for p, a in self.factors)

    @property
    def primes(self) -> typing.List[int]:
        return [p for p, _ in self.factors]

    @property
    def exponents(self) -> typing.List[int]:
        return [a for _, a in self.factors]

    def __str__(self) -> str:
        return "*".join(f"{p}^{a}" for p, a in self.factors) or "1"


class LatticeSummary(BaseModel):
    """|Sub G| with its per-order strata and the Sylow counts n_p"""

    total: int
    by_order: typing.Dict[int, int]
    sylow_counts: typing.Dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _consistent(self):
        if self.total != sum(self.by_order.values()):
            raise ValueError("total must equal the sum of the per-order counts")
        if self.by_order.get(1) != 1:
            raise ValueError("a lattice has exactly one trivial subgroup")
        if self.by_order.get(max(self.by_order)) != 1:
            raise ValueError("a lattice has exactly one subgroup of full order")
        return self


class AbelianShape(BaseModel):
    """A finite abelian group up to isomorphism: prime -> partition of exponents"""

    model_config = ConfigDict(frozen=True)

    components: typing.Dict[int, Partition] = Field(default_factory=dict)

    @field_validator("components")
    @classmethod
    def _canonical(cls, components):
        canon = {}
        for p in sorted(components):
            parts = tuple(sorted(components[p], reverse=True))
            if not sympy.isprime(p):
                raise ValueError(f"{p} is not prime")
            if not parts or parts[-1] < 1:
                raise ValueError(f"partition at {p} must be non-empty with positive parts")
            canon[p] = parts
        return canon

    @property
    def order(self) -> int:
        return math.prod(p ** sum(parts) for p, parts in self.components.items())

    def key(self) -> typing.Tuple[typing.Tuple[int, Partition], ...]:
        return tuple(self.components.items())

    def __str__(self) -> str:
        if not self.components:
            return "{e}"
        return " x ".join(f"Z_{p ** e}" for p, parts in self.components.items() for e in parts)


class SimilarityClass(BaseModel):
    """
    Free cyclic exponents (at arbitrary distinct primes) plus pinned components.

    Catalog classes also carry the label of their non-abelian core.
    """

    model_config = ConfigDict(frozen=True)

    free_cyclic: Partition = ()
    pinned: typing.Tuple[typing.Tuple[int, Partition], ...] = ()
    core: typing.Optional[str] = None

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data: typing.Any) -> typing.Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        data["free_cyclic"] = tuple(sorted(data.get("free_cyclic", ()), reverse=True))
        data["pinned"] = tuple(
            sorted((p, tuple(sorted(parts, reverse=True))) for p, parts in data.get("pinned", ()))
        )
        return data

    @model_validator(mode="after")
    def _invariants(self):
        if any(e < 1 for e in self.free_cyclic):
            raise ValueError("free exponents must be positive")
        primes = [p for p, _ in self.pinned]
        if len(set(primes)) != len(primes):
            raise ValueError("pinned primes must be pairwise distinct")
        for p, parts in self.pinned:
            if len(parts) < 2:
                raise ValueError(f"pinned component at {p} must have at least two parts")
        return self


BoundTheorem: TypeAlias = typing.Literal["cyclic", "p-group", "two-prime", "three-prime", "pqr", "four-or-more"]

_PRIME_COUNT = {
    "cyclic": 1,
    "p-group": 1,
    "two-prime": 2,
    "three-prime": 3,
    "pqr": 3,
}


class BoundReport(BaseModel):
    """A lower bound for |Sub G| over an order pattern"""

    pattern: typing.Tuple[int, ...]
    primes: typing.List[typing.Tuple[int, ...]] = Field(default_factory=list)
    constraint: str = ""
    bound: int = Field(ge=2)
    theorem: BoundTheorem

    @model_validator(mode="after")
    def _tag_matches_pattern(self):
        expected = _PRIME_COUNT.get(self.theorem)
        if expected is None:
            if len(self.pattern) < 4:
                raise ValueError("four-or-more needs at least four primes")
        elif len(self.pattern) != expected:
            raise ValueError(f"{self.theorem} bound needs {expected} prime(s), got {len(self.pattern)}")
        return self

    def render_pattern(self) -> str:
        letters = "pqrstuvw"
        return "".join(
            letters[i] if a == 1 else f"{letters[i]}^{a}" for i, a in enumerate(self.pattern)
        )

    def render(self) -> str:
        tail = f" with {self.constraint}" if self.constraint else ""
        return f"{self.render_pattern()}{tail}\t{self.bound}\t{self.theorem}"


class CatalogEntry(BaseModel):
    """One similarity class of non-abelian groups with its construction"""

    model_config = ConfigDict(frozen=True)

    name: str
    k: int
    recipe: str
    free_factors: Partition = ()
    notes: str = ""
    test_only: bool = False


class VerificationReport(BaseModel):
    """Claimed vs brute-force subgroup count of a catalog entry"""

    name: str
    claimed: int
    observed: int
    pinned_count: int
    instantiations: typing.Dict[str, int] = Field(default_factory=dict)
    passed: bool

    def line(self) -> str:
        return f"{self.name}\t{self.claimed}\t{self.observed}\t{'PASS' if self.passed else 'FAIL'}"


class CompletenessRow(BaseModel):
    order: int
    label: str
    subgroups: int
    similarity: str
    covered: bool
    source: str = ""


class CompletenessReport(BaseModel):
    rows: typing.List[CompletenessRow] = Field(default_factory=list)

    @property
    def gaps(self) -> typing.List[CompletenessRow]:
        return [row for row in self.rows if not row.covered]


class Ctor(BaseModel):
    """Constructor call in a group expression, e.g. Meta(5,8,3,0)"""

    model_config = ConfigDict(frozen=True)

    name: str
    args: typing.Tuple[int, ...]
    position: int = 0


class Product(BaseModel):
    """Direct product of two or more terms"""

    model_config = ConfigDict(frozen=True)

    factors: typing.Tuple[Ctor, ...]


GroupExpr: TypeAlias = typing.Union[Ctor, Product]
