"""Exact distant-time search for two runners on the unit circle.

A runner with integer speed v sits at position v*t mod 1 at time t. Two
runners with distinct positive speeds m and n (a stationary observer at the
origin makes a third) always admit a time at which both are at circle
distance at least 1/3 from the observer. On the grid t = x / (3*m*n) the
times keeping a single runner that far away form one cyclic interval of
residues, so intersecting two such intervals with the congruence solver
finds an exact rational witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .congruence import Congruence, CongruenceSystem, checked_mul, solve
from .residues import CyclicInterval

DISTANT_THRESHOLD = Fraction(1, 3)


def circle_distance(x: Fraction) -> Fraction:
    """Distance from x to the nearest integer, as an exact rational in [0, 1/2]."""
    frac = Fraction(x) % 1
    return min(frac, 1 - frac)


def distant_interval(speed: int, denominator: int, runners: int = 2) -> CyclicInterval:
    """Grid times keeping one runner at distance >= 1/(runners+1) from the origin.

    On the time grid t = x / denominator, the runner at speed v (with v's
    full period dividing the grid, i.e. (runners+1)*speed | denominator) is
    at least 1/(runners+1) from the origin exactly when x mod q lies in
    [q/(runners+1), runners*q/(runners+1)] where q = denominator // speed.
    That is a single cyclic interval of (runners-1)*q/(runners+1) + 1
    residues modulo q.
    """
    if speed < 1:
        raise ValueError(f"speed must be positive, got {speed}")
    if runners < 2:
        raise ValueError(f"runners must be at least 2, got {runners}")
    factor = (runners + 1) * speed
    if denominator % factor != 0:
        raise ValueError(
            f"denominator {denominator} is not a multiple of (runners+1)*speed = {factor}"
        )
    period = denominator // speed
    start = period // (runners + 1)
    length = (runners - 1) * period // (runners + 1) + 1
    return CyclicInterval(modulus=period, start=start, length=length)


@dataclass(frozen=True)
class RunnerPair:
    """Two distinct positive integer speeds."""

    speed_m: int
    speed_n: int

    def __post_init__(self) -> None:
        if self.speed_m < 1 or self.speed_n < 1:
            raise ValueError(
                f"speeds must be positive, got ({self.speed_m}, {self.speed_n})"
            )
        if self.speed_m == self.speed_n:
            raise ValueError(f"speeds must be distinct, got {self.speed_m} twice")


@dataclass(frozen=True)
class DistantWitness:
    """A time in [0, 1) at which both runners are at least 1/3 from the origin."""

    time: Fraction
    distances: tuple[Fraction, Fraction]

    def __post_init__(self) -> None:
        if not 0 <= self.time < 1:
            raise ValueError(f"witness time must lie in [0, 1), got {self.time}")
        for d in self.distances:
            if d < DISTANT_THRESHOLD:
                raise ValueError(f"distance {d} is below the 1/3 threshold")


def two_runner_witness(pair: RunnerPair) -> DistantWitness:
    """Earliest grid time at which both runners are at least 1/3 from the origin.

    Works on the grid t = x / (3*m*n). Each runner's admissible x form a
    cyclic interval; every pair of residues from the two intervals goes
    through the congruence solver, and the smallest solution wins. The
    intervals are longer than a third of their moduli, so a compatible pair
    always exists.
    """
    m, n = pair.speed_m, pair.speed_n
    denominator = checked_mul(3 * m, n)
    interval_m = distant_interval(m, denominator)
    interval_n = distant_interval(n, denominator)
    best: int | None = None
    for residue_m in interval_m:
        for residue_n in interval_n:
            system = CongruenceSystem(
                (
                    Congruence(residue_m, interval_m.modulus),
                    Congruence(residue_n, interval_n.modulus),
                )
            )
            merged = solve(system)
            if merged is None:
                continue
            if best is None or merged.residue < best:
                best = merged.residue
    if best is None:
        raise RuntimeError(f"no distant time found for speeds ({m}, {n})")
    time = Fraction(best, denominator)
    distances = (circle_distance(m * time), circle_distance(n * time))
    return DistantWitness(time=time, distances=distances)
