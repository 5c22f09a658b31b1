"""Number-theoretic helpers and explicit permutation groups on circle points.

Points on the circle are numbered 0..2n-1 internally; every serialized or
displayed form is 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError, ResourceLimitError

STANDARD_GROUP_KINDS = ("identity", "cyclic", "dihedral")

DEFAULT_CLOSURE_CAP = 10**6


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, stored as (length, multiplicity) pairs
    sorted by length."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for length, mult in self.parts:
            if length < 1 or mult < 1:
                raise DomainError(f"invalid cycle type entry {length}^{mult}")
        if list(self.parts) != sorted(self.parts):
            raise DomainError("cycle type parts must be sorted by length")
        if len({length for length, _ in self.parts}) != len(self.parts):
            raise DomainError("duplicate length in cycle type")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "CycleType":
        return cls(tuple(sorted((l, m) for l, m in counts.items() if m)))

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        counts: dict[int, int] = {}
        for l in lengths:
            counts[l] = counts.get(l, 0) + 1
        return cls.from_counts(counts)

    @property
    def degree(self) -> int:
        return sum(l * m for l, m in self.parts)

    def multiplicity(self, length: int) -> int:
        for l, m in self.parts:
            if l == length:
                return m
        return 0

    def __str__(self):
        return " ".join(f"{l}^{m}" for l, m in self.parts) or "(empty)"


@dataclass(frozen=True)
class GroupElement:
    """A permutation of the circle points, identified by its image array."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise DomainError("images must be a bijection on [0, size)")

    @classmethod
    def identity(cls, size: int) -> "GroupElement":
        return cls(tuple(range(size)))

    @classmethod
    def rotation(cls, size: int, shift: int) -> "GroupElement":
        """v -> (v + shift) mod size."""
        return cls(tuple((v + shift) % size for v in range(size)))

    @classmethod
    def reflection(cls, size: int, shift: int) -> "GroupElement":
        """v -> (shift - v) mod size."""
        return cls(tuple((shift - v) % size for v in range(size)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "GroupElement":
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def compose(self, other: "GroupElement") -> "GroupElement":
        """self after other: (self * other)(v) = self(other(v))."""
        if self.size != other.size:
            raise DomainError("cannot compose elements of different sizes")
        return GroupElement(tuple(self.images[w] for w in other.images))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.compose(other)

    def inverse(self) -> "GroupElement":
        inv = [0] * self.size
        for v, w in enumerate(self.images):
            inv[w] = v
        return GroupElement(tuple(inv))

    def order(self) -> int:
        return math.lcm(*(l for l, _ in cycle_type_of(self).parts)) if self.size else 1

    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.images))


@dataclass(frozen=True)
class PermGroup:
    """A finite set of permutations of [0, size), closed under composition."""

    size: int
    elements: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def euler_phi(m: int) -> int:
    """Count of k in [1, m] coprime to m."""
    if m < 1:
        raise DomainError("euler_phi requires m >= 1")
    result = m
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def divisors(m: int) -> list[int]:
    """All divisors of m, ascending."""
    if m < 1:
        raise DomainError("divisors requires m >= 1")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    large.reverse()
    return small + large


def partitions(n: int) -> Iterator[CycleType]:
    """Integer partitions of n as CycleTypes, in descending-lexicographic
    order of the part lists (so [n] first, [1]*n last)."""
    if n < 0:
        raise DomainError("partitions requires n >= 0")

    def gen(remaining: int, max_part: int, prefix: list[int]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            yield from gen(remaining - part, part, prefix)
            prefix.pop()

    for parts in gen(n, n if n else 1, []):
        yield CycleType.from_lengths(parts)


def cycle_type_of(g: GroupElement) -> CycleType:
    """Multiset of cycle lengths of g."""
    images = g.images
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = images[v]
            length += 1
        lengths.append(length)
    return CycleType.from_lengths(lengths)


def _sorted_group(size: int, elements: Iterable[GroupElement]) -> PermGroup:
    ordered = tuple(sorted(set(elements), key=lambda g: g.images))
    return PermGroup(size, ordered)


def make_standard_group(kind: str, points: int) -> PermGroup:
    """The identity group, the rotation group, or the full rotation and
    reflection group on an even number of circle points.

    For points >= 4 the dihedral group has order 2*points; on 2 points the
    single reflection coincides with the half-turn, so the set degenerates
    to order 2.
    """
    if points < 2 or points % 2:
        raise DomainError("points must be even and >= 2")
    if kind == "identity":
        elems = [GroupElement.identity(points)]
    elif kind == "cyclic":
        elems = [GroupElement.rotation(points, s) for s in range(points)]
    elif kind == "dihedral":
        elems = [GroupElement.rotation(points, s) for s in range(points)]
        elems += [GroupElement.reflection(points, s) for s in range(points)]
    else:
        raise DomainError(f"unknown group kind {kind!r}")
    return _sorted_group(points, elems)


def generate_group(
    generators: Sequence[GroupElement],
    points: int,
    max_elements: int = DEFAULT_CLOSURE_CAP,
) -> PermGroup:
    """Closure of the generators under composition (hence under inverse,
    the group being finite). Always contains the identity."""
    for g in generators:
        if g.size != points:
            raise DomainError(
                f"generator size {g.size} does not match points={points}"
            )
    identity = GroupElement.identity(points)
    known = {identity.images: identity}
    frontier = [identity]
    gens = list(generators)
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = current.compose(g)
            if nxt.images not in known:
                known[nxt.images] = nxt
                if len(known) > max_elements:
                    raise ResourceLimitError(
                        f"group closure exceeded {max_elements} elements"
                    )
                frontier.append(nxt)
    return _sorted_group(points, known.values())
