"""Closed-form counts of diagrams up to rotation and up to rotation plus
reflection, with their asymptotic lower bounds.

All results are exact integers; the intermediate divisions are asserted
exact (see errors.ConsistencyError).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, exact_div
from .groups import divisors, euler_phi


def double_factorial(m: int) -> int:
    """m!! for odd m, with (-1)!! == 1."""
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def diagram_count(n: int) -> int:
    """(2n-1)!!: the number of distinct diagrams under the identity group."""
    if n < 1:
        raise DomainError("diagram_count requires n >= 1")
    return double_factorial(2 * n - 1)


def rotation_fixed_count(n: int, i: int) -> int:
    """Number of matchings on 2n points fixed by a rotation of order i.

    Odd i: the orbit of every chord consists of i disjoint chords, covering
    two point-orbits; i^(n/i) * (2n/i - 1)!! matchings.
    Even i: chords may also connect a point-orbit to itself, giving the
    binomial sum over how many point-orbits pair up.
    """
    if n < 1:
        raise DomainError("rotation_fixed_count requires n >= 1")
    if i < 1 or (2 * n) % i:
        raise DomainError(f"{i} does not divide {2 * n}")
    if i % 2:
        return i ** (n // i) * double_factorial(2 * n // i - 1)
    m = 2 * n // i
    return sum(
        math.comb(m, 2 * k) * i**k * double_factorial(2 * k - 1)
        for k in range(n // i + 1)
    )


def cyclic_count(n: int) -> int:
    """Number of diagrams of order n up to rotation."""
    if n < 1:
        raise DomainError("cyclic_count requires n >= 1")
    total = sum(euler_phi(i) * rotation_fixed_count(n, i) for i in divisors(2 * n))
    return exact_div(total, 2 * n, "cyclic_count")


def wreath_uniform_count(n: int, i: int) -> int:
    """Number of pair-permutations-with-flips on n pairs whose entry cycles
    all have length i (i must divide 2n)."""
    if n < 1:
        raise DomainError("wreath_uniform_count requires n >= 1")
    if i < 1 or (2 * n) % i:
        raise DomainError(f"{i} does not divide {2 * n}")
    if i % 2:
        value = Fraction(
            2**n * math.factorial(n),
            2 ** (n // i) * i ** (n // i) * math.factorial(n // i),
        )
    else:
        base = Fraction(2**n * math.factorial(n), i ** (2 * n // i))
        value = base * sum(
            Fraction(i**k, math.factorial(2 * n // i - 2 * k) * 2**k * math.factorial(k))
            for k in range(n // i + 1)
        )
    return exact_div(value.numerator, value.denominator, "wreath_uniform_count")


def partial_pairing_count(n: int) -> int:
    """Sum over k of n! / (k! * (n-2k)!): the number of ways to pick any
    number of disjoint ordered pairs from n items. Equals the count of
    pair-permutations-with-flips whose entry cycles all have length 2."""
    if n < 0:
        raise DomainError("partial_pairing_count requires n >= 0")
    return sum(
        math.factorial(n) // (math.factorial(k) * math.factorial(n - 2 * k))
        for k in range(n // 2 + 1)
    )


def reflection_type_wreath_count(n: int) -> int:
    """Number of pair-permutations-with-flips on n pairs whose entry cycle
    type is two fixed points plus (n-1) transpositions, i.e. the type of a
    point-fixing reflection."""
    if n < 1:
        raise DomainError("reflection_type_wreath_count requires n >= 1")
    total = 0
    for l in range(1, n + 1):
        if (n - l) % 2 == 0:
            k = (n - l) // 2
            total += l * math.factorial(n) // (math.factorial(l) * math.factorial(k))
    return total


def dihedral_count(n: int) -> int:
    """Number of diagrams of order n up to rotation and reflection."""
    if n < 1:
        raise DomainError("dihedral_count requires n >= 1")
    reflection_part = exact_div(
        partial_pairing_count(n - 1) + partial_pairing_count(n),
        2,
        "dihedral_count reflection term",
    )
    return exact_div(cyclic_count(n) + reflection_part, 2, "dihedral_count")


@dataclass(frozen=True)
class AsymptoticBound:
    """Exact rational lower bound (2n-1)!!/(2n) or (2n-1)!!/(4n) together
    with its integer part."""

    kind: str
    n: int
    numerator: int
    denominator: int
    exact_floor: int

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def asymptotic_lower_bound(kind: str, n: int) -> AsymptoticBound:
    """Lower bound for the cyclic or dihedral count; each orbit has at most
    2n (cyclic) or 4n (dihedral) diagrams, so the bound is also the
    asymptotic value."""
    if n < 1:
        raise DomainError("asymptotic_lower_bound requires n >= 1")
    if kind == "cyclic":
        denominator = 2 * n
    elif kind == "dihedral":
        denominator = 4 * n
    else:
        raise DomainError(f"unknown bound kind {kind!r}")
    numerator = diagram_count(n)
    return AsymptoticBound(
        kind=kind,
        n=n,
        numerator=numerator,
        denominator=denominator,
        exact_floor=numerator // denominator,
    )
