"""Lower bounds on two-congruence solution counts.

The counting problem reduces to a dot product of per-class member counts
(see residues.exact_count). Sorting both count vectors and pairing them in
opposite order can only shrink that product, and among sorted vectors with a
fixed sum and per-entry cap a step-shaped "extremal" vector is the worst
case. The closed form of the extremal pairing gives a floor on the solution
count that depends only on the collection sizes; for cyclic intervals a
sharper pigeonhole floor holds. Both floors are exposed here together with
the one-third density guarantee and the family of instances sitting exactly
on its boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .congruence import checked_mul
from .residues import CyclicInterval

CASE_EMPTY = "empty"
CASE_BOUNDARY = "boundary"
CASE_OVERLAP = "overlap"


class InfeasibleError(ValueError):
    """No admissible sequence exists for the requested size, cap, and length."""


@dataclass(frozen=True)
class SizeDecomposition:
    """Euclidean split: size == quotient*divisor + remainder, 0 <= remainder < divisor."""

    size: int
    divisor: int
    quotient: int
    remainder: int


def decompose(size: int, divisor: int) -> SizeDecomposition:
    """Euclidean division of a collection size by a divisor."""
    if size < 0:
        raise ValueError(f"size must be non-negative, got {size}")
    if divisor < 1:
        raise ValueError(f"divisor must be positive, got {divisor}")
    quotient, remainder = divmod(size, divisor)
    return SizeDecomposition(size, divisor, quotient, remainder)


def rearrangement_bounds(
    a: Sequence[float], b: Sequence[float], sigma: Sequence[int]
) -> tuple[float, float, float]:
    """Reversed, permuted, and aligned dot products of two sorted sequences.

    For non-decreasing a and b the reversed pairing sum(a[k]*b[n-1-k]) is
    minimal and the aligned pairing sum(a[k]*b[k]) maximal over all
    permutations, so the returned triple (reversed, permuted, aligned) is
    ordered.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"sigma must be a permutation of 0..{n - 1}")
    for name, seq in (("a", a), ("b", b)):
        if any(seq[i] > seq[i + 1] for i in range(n - 1)):
            raise ValueError(f"sequence {name} is not sorted non-decreasing")
    lower = sum(x * y for x, y in zip(a, reversed(b)))
    permuted = sum(a[k] * b[sigma[k]] for k in range(n))
    upper = sum(x * y for x, y in zip(a, b))
    return lower, permuted, upper


@dataclass(frozen=True)
class ExtremalProfile:
    """The worst-case sorted count vector: zeros, one leftover entry, then caps."""

    length: int
    cap: int
    values: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.values)


def extremal_profile(size: int, cap: int, length: int) -> ExtremalProfile:
    """Non-decreasing sequence of the given length and sum, entries in [0, cap],
    minimizing the reversed dot product against any rival admissible sequence.

    With filled = size // cap full entries, the sequence is zero before
    position length - filled (1-indexed), carries the leftover
    size - cap*filled there, and equals cap after it.
    """
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    if size < 0:
        raise ValueError(f"size must be non-negative, got {size}")
    if size > cap * length:
        raise InfeasibleError(f"size {size} exceeds cap*length = {cap * length}")
    filled, leftover = divmod(size, cap)
    pivot = length - filled
    values = tuple(
        0 if k < pivot else leftover if k == pivot else cap
        for k in range(1, length + 1)
    )
    return ExtremalProfile(length=length, cap=cap, values=values)


class BoundResult(NamedTuple):
    """A proven floor on the solution count, tagged by which case produced it."""

    lower_bound: int
    case_tag: str


def extremal_sum(
    size_a: int, cap_a: int, size_b: int, cap_b: int, length: int
) -> BoundResult:
    """Closed form of the reversed dot product of the two extremal profiles.

    Writing filled_x = size_x // cap_x and leftover_x = size_x % cap_x, the
    reversed pairing of the two step sequences has
    span = filled_a + filled_b + 1 potentially nonzero positions:

      span < length: the nonzero tails miss each other entirely -> 0.
      span == length: they meet in the single term leftover_a * leftover_b.
      span > length: a run of span - length - 1 full products cap_a * cap_b
        plus the two edge terms leftover_a * cap_b and leftover_b * cap_a.

    The tag records which case fired ("empty", "boundary", "overlap").
    """
    for size, cap in ((size_a, cap_a), (size_b, cap_b)):
        if cap < 1:
            raise ValueError(f"cap must be positive, got {cap}")
        if size < 0:
            raise ValueError(f"size must be non-negative, got {size}")
        if size > cap * length:
            raise InfeasibleError(f"size {size} exceeds cap*length = {cap * length}")
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    filled_a, leftover_a = divmod(size_a, cap_a)
    filled_b, leftover_b = divmod(size_b, cap_b)
    span = filled_a + filled_b + 1
    if span < length:
        return BoundResult(0, CASE_EMPTY)
    if span == length:
        return BoundResult(leftover_a * leftover_b, CASE_BOUNDARY)
    value = (
        (span - length - 1) * cap_a * cap_b
        + leftover_a * cap_b
        + leftover_b * cap_a
    )
    return BoundResult(value, CASE_OVERLAP)


def _check_sizes(m: int, n: int, size_a: int, size_b: int) -> None:
    if m < 1 or n < 1:
        raise ValueError(f"moduli must be positive, got ({m}, {n})")
    if not 0 <= size_a <= m:
        raise ValueError(f"size {size_a} out of range [0, {m}]")
    if not 0 <= size_b <= n:
        raise ValueError(f"size {size_b} out of range [0, {n}]")


def bound_arbitrary(m: int, n: int, size_a: int, size_b: int) -> BoundResult:
    """Floor on the solution count for arbitrary collections of the given sizes.

    Each size is decomposed by modulus/g with g = gcd(m, n); the cases split
    on how the two quotients compare with g - 1. Agrees everywhere with
    extremal_sum(size_a, m // g, size_b, n // g, g), and no pair of
    collections of these sizes has fewer solutions.
    """
    _check_sizes(m, n, size_a, size_b)
    g = math.gcd(m, n)
    cap_a = m // g
    cap_b = n // g
    quot_a, rem_a = divmod(size_a, cap_a)
    quot_b, rem_b = divmod(size_b, cap_b)
    total = quot_a + quot_b
    if total < g - 1:
        return BoundResult(0, CASE_EMPTY)
    if total == g - 1:
        return BoundResult(rem_a * rem_b, CASE_BOUNDARY)
    return BoundResult(
        (total - g) * cap_a * cap_b + rem_a * cap_b + rem_b * cap_a, CASE_OVERLAP
    )


def bound_intervals(m: int, n: int, size_a: int, size_b: int) -> int:
    """Floor on the solution count when both collections are single cyclic intervals.

    Both sizes decompose by g = gcd(m, n). Each full block of g consecutive
    classes covers every class modulo g once, so full blocks pair off exactly;
    the two leftover arcs of lengths rem_a, rem_b < g must still meet in at
    least rem_a + rem_b - g classes modulo g when that is positive.
    """
    _check_sizes(m, n, size_a, size_b)
    g = math.gcd(m, n)
    quot_a, rem_a = divmod(size_a, g)
    quot_b, rem_b = divmod(size_b, g)
    return (
        quot_a * quot_b * g
        + quot_a * rem_b
        + quot_b * rem_a
        + max(0, rem_a + rem_b - g)
    )


def density_guarantee(m: int, n: int, size_a: int, size_b: int) -> bool:
    """Whether interval collections of these sizes are forced to share a solution.

    True iff the moduli are distinct and both sizes are strictly greater than
    one third of their modulus (exact integer comparisons). When true,
    bound_intervals(m, n, size_a, size_b) >= 1.
    """
    if m < 1 or n < 1:
        raise ValueError(f"moduli must be positive, got ({m}, {n})")
    if size_a < 0 or size_b < 0:
        raise ValueError(f"sizes must be non-negative, got ({size_a}, {size_b})")
    return m != n and 3 * size_a > m and 3 * size_b > n


def tightness_instance(scale: int) -> tuple[CyclicInterval, CyclicInterval]:
    """Interval pair with densities exactly one third and no common solution.

    The moduli 3*scale and 6*scale share gcd 3*scale; the first interval
    covers residues 0..scale-1 and the second scale..3*scale-1, so no pair of
    members agrees modulo the gcd. Raising either density strictly above one
    third would force a solution, so these instances pin the guarantee's
    constant.
    """
    if scale < 1:
        raise ValueError(f"scale must be positive, got {scale}")
    checked_mul(3 * scale, 6 * scale)  # the solution modulus must stay representable
    first = CyclicInterval(modulus=3 * scale, start=0, length=scale)
    second = CyclicInterval(modulus=6 * scale, start=scale, length=2 * scale)
    return first, second
