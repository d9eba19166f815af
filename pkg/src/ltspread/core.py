"""Validated linear triple systems and skeleton-graph queries.

A linear triple system on vertices 0..n-1 is a set of three-element blocks
in which every unordered vertex pair lies in at most one block.  Validation
happens once, at construction; the pair -> third-vertex table built here is
what keeps the closure and property checks in the rest of the package cheap.
"""

from __future__ import annotations

import operator
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    DegenerateTriple,
    DuplicatePairCoverage,
    SameVertex,
    VertexOutOfRange,
)

Triple = tuple[int, int, int]
Pair = tuple[int, int]


def _normalize_triple(raw: Iterable[int], n: int) -> Triple:
    entries = tuple(operator.index(v) for v in raw)
    if len(entries) != 3:
        raise DegenerateTriple(f"expected three vertices, got {entries!r}")
    for v in entries:
        if v < 0 or v >= n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {n}) in triple {entries!r}")
    x, y, z = sorted(entries)
    if x == y or y == z:
        raise DegenerateTriple(f"repeated vertex in triple {entries!r}")
    return (x, y, z)


class TripleSystem:
    """A validated linear triple system, immutable after construction.

    Attributes:
        n: number of vertices; labels are 0..n-1.
        triples: lexicographically sorted tuple of sorted triples.
        pair_table: maps each covered pair (x, y), x < y, to its third vertex.
    """

    __slots__ = ("n", "triples", "pair_table", "_triple_set")

    def __init__(self, n: int, triples: Iterable[Iterable[int]] = ()):
        n = operator.index(n)
        if n < 0:
            raise VertexOutOfRange(f"vertex count must be non-negative, got {n}")
        self.n = n
        normalized = sorted({_normalize_triple(t, n) for t in triples})
        table: dict[Pair, int] = {}
        for x, y, z in normalized:
            for pair, third in (((x, y), z), ((x, z), y), ((y, z), x)):
                if pair in table:
                    raise DuplicatePairCoverage(pair)
                table[pair] = third
        self.triples = tuple(normalized)
        self.pair_table = table
        self._triple_set = frozenset(normalized)

    def third_point(self, x: int, y: int) -> int | None:
        """Return the third vertex of the triple through x and y, or None."""
        x = operator.index(x)
        y = operator.index(y)
        for v in (x, y):
            if v < 0 or v >= self.n:
                raise VertexOutOfRange(f"vertex {v} outside [0, {self.n})")
        if x == y:
            raise SameVertex(f"pair query needs two distinct vertices, got {x} twice")
        return self.pair_table.get((x, y) if x < y else (y, x))

    def has_triple(self, triple: Iterable[int]) -> bool:
        return tuple(sorted(triple)) in self._triple_set

    def is_steiner(self) -> bool:
        """True when every pair of vertices is covered by a triple."""
        return len(self.pair_table) == self.n * (self.n - 1) // 2

    def uncovered_edges(self) -> list[Pair]:
        """All pairs not covered by any triple, in lexicographic order."""
        table = self.pair_table
        return [p for p in combinations(range(self.n), 2) if p not in table]

    def span(self) -> frozenset[int]:
        """The set of vertices that appear in at least one triple."""
        return frozenset(v for t in self.triples for v in t)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TripleSystem):
            return NotImplemented
        return self.n == other.n and self.triples == other.triples

    def __hash__(self) -> int:
        return hash((self.n, self.triples))

    def __repr__(self) -> str:
        return f"TripleSystem(n={self.n}, triples={len(self.triples)})"


def build_system(n: int, triples: Iterable[Iterable[int]] = ()) -> TripleSystem:
    """Validate and construct a linear triple system on vertices 0..n-1.

    Triples may arrive in any entry order and with duplicates; they are
    sorted and deduplicated.  Raises VertexOutOfRange, DegenerateTriple or
    DuplicatePairCoverage (which carries the offending pair) on bad input.
    """
    return TripleSystem(n, triples)
