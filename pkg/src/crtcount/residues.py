"""Collections of residue classes and the exact two-modulus solution count."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

from .congruence import SolutionClass, checked_mul

ENUMERATION_CAP = 10_000_000


class EnumerationCapError(ValueError):
    """Brute-force enumeration refused: the scan range exceeds the cap."""


@dataclass(frozen=True)
class ResidueSet:
    """An arbitrary set of residue classes modulo a fixed modulus.

    Members are stored strictly sorted; duplicates and out-of-range residues
    are rejected rather than silently normalized.
    """

    modulus: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        ordered = tuple(sorted(self.members))
        for residue in ordered:
            if not 0 <= residue < self.modulus:
                raise ValueError(f"residue {residue} out of range [0, {self.modulus})")
        if len(set(ordered)) != len(ordered):
            raise ValueError("duplicate residues in collection")
        object.__setattr__(self, "members", ordered)
        object.__setattr__(self, "_lookup", frozenset(ordered))

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, residue: int) -> bool:
        return residue in self._lookup  # type: ignore[attr-defined]

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass(frozen=True)
class CyclicInterval:
    """A contiguous arc of residue classes modulo a modulus, wrapping past the top.

    length == 0 is the empty collection and length == modulus the full residue
    system. The start is normalized into [0, modulus).
    """

    modulus: int
    start: int
    length: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.length <= self.modulus:
            raise ValueError(f"length {self.length} out of range [0, {self.modulus}]")
        object.__setattr__(self, "start", self.start % self.modulus)

    @property
    def size(self) -> int:
        return self.length

    def members(self) -> tuple[int, ...]:
        return tuple((self.start + i) % self.modulus for i in range(self.length))

    def __contains__(self, residue: int) -> bool:
        return (residue - self.start) % self.modulus < self.length

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())


ResidueCollection = Union[ResidueSet, CyclicInterval]


@dataclass(frozen=True)
class ResiduePartitionCount:
    """Member counts of a collection split by residue class modulo a divisor."""

    divisor: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def partition_counts(collection: ResidueCollection, divisor: int) -> ResiduePartitionCount:
    """Count the collection's members in each residue class modulo the divisor.

    The divisor must divide the collection's modulus, so each class modulo the
    divisor holds at most modulus/divisor members.
    """
    if divisor < 1:
        raise ValueError(f"divisor must be positive, got {divisor}")
    if collection.modulus % divisor:
        raise ValueError(
            f"divisor {divisor} does not divide modulus {collection.modulus}"
        )
    counts = [0] * divisor
    for member in collection:
        counts[member % divisor] += 1
    return ResiduePartitionCount(divisor, tuple(counts))


def exact_count(a: ResidueCollection, b: ResidueCollection) -> int:
    """Exact number of residue classes modulo lcm(m, n) hit by some admissible pair.

    A pair (α, β) with α in a, β in b yields a common solution of
    x ≡ α (mod m), x ≡ β (mod n) exactly when α ≡ β (mod gcd(m, n)), and each
    such pair contributes one distinct class modulo m*n/gcd(m, n). The count
    is therefore the dot product of the two per-class member counts.
    """
    g = math.gcd(a.modulus, b.modulus)
    checked_mul(a.modulus // g, b.modulus)  # the solution modulus must stay representable
    counts_a = partition_counts(a, g).counts
    counts_b = partition_counts(b, g).counts
    return sum(x * y for x, y in zip(counts_a, counts_b))


def enumerate_solutions(
    a: ResidueCollection, b: ResidueCollection, cap: int = ENUMERATION_CAP
) -> list[SolutionClass]:
    """Scan [0, lcm(m, n)) for every common solution; the oracle, not the fast path."""
    g = math.gcd(a.modulus, b.modulus)
    span = checked_mul(a.modulus // g, b.modulus)
    if span > cap:
        raise EnumerationCapError(f"scan range {span} exceeds the enumeration cap {cap}")
    mod_a, mod_b = a.modulus, b.modulus
    return [
        SolutionClass(x, span)
        for x in range(span)
        if x % mod_a in a and x % mod_b in b
    ]


def interval_members(interval: CyclicInterval) -> ResidueSet:
    """Materialize a cyclic interval as an explicit residue set."""
    return ResidueSet(interval.modulus, interval.members())
