"""Chord diagrams: representation, symmetry action, canonical forms,
exhaustive enumeration, crossing counts, strictness.

A diagram on 2n points is stored as its partner array: partner[v] is the
point joined to v by a chord. The circle itself is implicit in the cyclic
order of the points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError
from .groups import GroupElement, PermGroup


@dataclass(frozen=True)
class ChordDiagram:
    """A fixed-point-free involution on [0, 2n): a perfect matching of the
    circle points by chords."""

    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        n2 = len(p)
        if n2 % 2:
            raise DomainError("diagram needs an even number of points")
        for v in range(n2):
            w = p[v]
            if not 0 <= w < n2 or w == v or p[w] != v:
                raise DomainError("partner array is not a fixed-point-free involution")

    @classmethod
    def from_chords(cls, chords: Sequence[tuple[int, int]], size: int | None = None) -> "ChordDiagram":
        """Build from 0-based endpoint pairs."""
        if size is None:
            size = 2 * len(chords)
        partner = [-1] * size
        for a, b in chords:
            if not (0 <= a < size and 0 <= b < size) or partner[a] != -1 or partner[b] != -1:
                raise DomainError(f"bad chord ({a}, {b})")
            partner[a] = b
            partner[b] = a
        return cls(tuple(partner))

    @property
    def size(self) -> int:
        return len(self.partner)

    @property
    def order(self) -> int:
        return len(self.partner) // 2

    def chords(self) -> list[tuple[int, int]]:
        """0-based endpoint pairs (a, b), a < b, sorted by a."""
        return [(v, w) for v, w in enumerate(self.partner) if v < w]

    def to_json_dict(self) -> dict:
        """1-based serialized form: {"n": n, "chords": [[a, b], ...]}."""
        return {"n": self.order, "chords": [[a + 1, b + 1] for a, b in self.chords()]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ChordDiagram":
        try:
            n = int(obj["n"])
            chords = [(int(a) - 1, int(b) - 1) for a, b in obj["chords"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed chord list object: {exc}") from exc
        return cls.from_chords(chords, size=2 * n)

    def __str__(self):
        return " ".join(f"({a + 1},{b + 1})" for a, b in self.chords())


def apply_symmetry(g: GroupElement, diagram: ChordDiagram) -> ChordDiagram:
    """Image of the diagram under g: point v's chord goes to point g(v)."""
    if g.size != diagram.size:
        raise DomainError(
            f"element acts on {g.size} points but diagram has {diagram.size}"
        )
    img = g.images
    old = diagram.partner
    new = [0] * len(old)
    for v in range(len(old)):
        new[img[v]] = img[old[v]]
    return ChordDiagram(tuple(new))


def canonical_form(diagram: ChordDiagram, group: PermGroup) -> ChordDiagram:
    """Lexicographically smallest partner array in the diagram's orbit.
    Two diagrams are equivalent under the group iff their canonical forms
    are equal."""
    if group.size != diagram.size:
        raise DomainError(
            f"group acts on {group.size} points but diagram has {diagram.size}"
        )
    old = diagram.partner
    n2 = len(old)
    best: tuple[int, ...] | None = None
    for g in group.elements:
        img = g.images
        candidate = [0] * n2
        for v in range(n2):
            candidate[img[v]] = img[old[v]]
        t = tuple(candidate)
        if best is None or t < best:
            best = t
    assert best is not None
    return ChordDiagram(best)


def matchings(size: int, first_partner: int | None = None) -> Iterator[list[int]]:
    """Stream every perfect matching of [0, size) as a partner array.

    The yielded list is a shared buffer that is mutated between yields;
    callers that keep a matching must copy it. Matching order: the smallest
    unmatched point is joined to each larger unmatched point in ascending
    order, which makes the stream ascend lexicographically.

    Fixing first_partner restricts the stream to matchings with
    partner[0] == first_partner; the size-1 possible prefixes partition the
    full stream into independent sub-streams.
    """
    if size % 2:
        raise DomainError("matchings need an even number of points")
    partner = [-1] * size
    if first_partner is not None:
        if not 1 <= first_partner < size:
            raise DomainError("first_partner must be in [1, size)")
        partner[0] = first_partner
        partner[first_partner] = 0

    def rec(lo: int) -> Iterator[list[int]]:
        v = lo
        while v < size and partner[v] >= 0:
            v += 1
        if v == size:
            yield partner
            return
        for w in range(v + 1, size):
            if partner[w] < 0:
                partner[v] = w
                partner[w] = v
                yield from rec(v + 1)
                partner[w] = -1
        partner[v] = -1

    if size:
        yield from rec(0)
    else:
        yield partner


def all_diagrams(n: int, first_partner: int | None = None) -> Iterator[ChordDiagram]:
    """All (2n-1)!! chord diagrams of order n, each exactly once."""
    if n < 1:
        raise DomainError("all_diagrams requires n >= 1")
    for partner in matchings(2 * n, first_partner):
        yield ChordDiagram(tuple(partner))


def crossings(diagram: ChordDiagram) -> int:
    """Number of chord pairs whose endpoints interleave on the circle."""
    chords = diagram.chords()
    count = 0
    for i, (a, b) in enumerate(chords):
        for c, d in chords[i + 1:]:
            # chords are sorted by first endpoint, so a < c always
            if c < b < d:
                count += 1
    return count


def is_strict(diagram: ChordDiagram) -> bool:
    """True iff no chord joins circle-adjacent points (which would double a
    circle edge)."""
    p = diagram.partner
    n2 = len(p)
    return all(p[v] != (v + 1) % n2 for v in range(n2))
