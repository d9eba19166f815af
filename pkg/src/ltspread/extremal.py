"""Minimum weakly spreading systems at small orders, and ordering
certificates.

The search enumerates candidate systems in a normalized form: the first
triple is {0,1,2}, the second shares exactly one vertex with it, every
later triple meets the union of the earlier ones in at least two vertices,
and fresh vertices always take the smallest unused labels.  Every weakly
spreading system admits such an ordering of its triples (see
ordering_witness), so up to relabeling the enumeration covers them all;
within it, a system of m triples spans at most m+3 vertices, which is what
makes small minima exhaustively checkable.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from itertools import combinations, count
from typing import Iterator

from .closure import is_weakly_spreading
from .core import Triple, TripleSystem, build_system
from .errors import BudgetExceeded, OrderOutOfRange, OutOfRange

__all__ = ["SearchResult", "min_weakly_spreading", "ordering_witness"]


@dataclass(frozen=True)
class SearchResult:
    """Outcome of min_weakly_spreading.

    exhaustive_below is true when every triple count below `minimum` that
    could arithmetically span n vertices was exhaustively refuted by the
    search itself, rather than skipped on the strength of the n-3 lower
    bound.
    """

    n: int
    minimum: int
    witness: TripleSystem
    nodes_explored: int
    exhaustive_below: bool


def _level_candidates(
    n: int, m: int, counter: list[int], budget: int
) -> Iterator[tuple[Triple, ...]]:
    """Yield normalized m-triple candidates spanning [0, n), without
    duplicates.

    counter[0] accumulates explored placements across calls; exceeding
    budget raises BudgetExceeded.  Candidates whose steps all introduce a
    fresh vertex are unique by construction (each vertex >= 5 pins down the
    triple that introduced it); only candidates containing an all-old step
    go through the seen-set.
    """
    if m < 1:
        return
    seen: set[tuple[Triple, ...]] = set()
    triples: list[Triple] = []
    covered: set[tuple[int, int]] = set()

    def pairs_of(t: Triple) -> tuple[tuple[int, int], ...]:
        x, y, z = t
        return ((x, y), (x, z), (y, z))

    def place(t: Triple) -> None:
        triples.append(t)
        covered.update(pairs_of(t))
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded(
                f"node budget {budget} exhausted while scanning {m}-triple systems"
            )

    def unplace(t: Triple) -> None:
        triples.pop()
        covered.difference_update(pairs_of(t))

    def extend(u: int, old_steps: int) -> Iterator[tuple[Triple, ...]]:
        k = len(triples)
        if k == m:
            if u == n:
                cand = tuple(triples)
                if old_steps:
                    if cand in seen:
                        return
                    seen.add(cand)
                yield cand
            return
        if k == 0:
            place((0, 1, 2))
            yield from extend(3, old_steps)
            unplace((0, 1, 2))
            return
        if k == 1:
            if u + m < n:  # T2 adds two fresh vertices, later triples one
                return
            for t in range(3):
                cand = (t, 3, 4)
                place(cand)
                yield from extend(5, old_steps)
                unplace(cand)
            return
        if u + (m - k) < n:
            return  # not enough steps left to span
        for cand in combinations(range(u), 3):
            if all(p not in covered for p in pairs_of(cand)):
                place(cand)
                yield from extend(u, old_steps + 1)
                unplace(cand)
        if u < n:
            for x, y in combinations(range(u), 2):
                if (x, y) not in covered:
                    cand = (x, y, u)
                    place(cand)
                    yield from extend(u + 1, old_steps)
                    unplace(cand)

    yield from extend(0, 0)


def min_weakly_spreading(
    n: int, start_at: int | None = None, budget: int = 50_000_000
) -> SearchResult:
    """Smallest number of triples in a weakly spreading system spanning n
    vertices, for 5 <= n <= 12.

    Scans triple counts m = start_at, start_at+1, ... (default start is the
    proven floor n-3); each level is enumerated completely and the
    lexicographically least passing system is reported, so the witness is
    deterministic.  Pass start_at below the floor to have the search refute
    the smaller counts itself instead of trusting the bound.
    """
    n = operator.index(n)
    if not 5 <= n <= 12:
        raise OrderOutOfRange(f"search supports 5 <= n <= 12, got n={n}")
    floor = n - 3
    first = floor if start_at is None else operator.index(start_at)
    if first < 1:
        raise OutOfRange(f"start_at must be at least 1, got {first}")
    counter = [0]
    for m in count(first):
        best: tuple[Triple, ...] | None = None
        for cand in _level_candidates(n, m, counter, budget):
            if (best is None or cand < best) and is_weakly_spreading(
                build_system(n, cand)
            ):
                best = cand
        if best is not None:
            # counts below ceil(n/3) cannot span n vertices at all, so the
            # scan was exhaustive iff it started at or below that point
            return SearchResult(
                n=n,
                minimum=m,
                witness=build_system(n, best),
                nodes_explored=counter[0],
                exhaustive_below=first <= -(-n // 3),
            )


def ordering_witness(system: TripleSystem) -> tuple[Triple, ...] | None:
    """An ordering of the triples in which the second shares a vertex with
    the first and every later one meets the union of its predecessors in at
    least two vertices; None when no such ordering exists.

    Tries triples in lexicographic order first and backtracks on dead ends,
    so the result is deterministic.  Systems with at most one triple return
    their trivial ordering.
    """
    tris = system.triples
    m = len(tris)
    if m <= 1:
        return tris
    sets = [frozenset(t) for t in tris]
    order: list[int] = []
    used = [False] * m

    def extend(covered: frozenset[int]) -> bool:
        depth = len(order)
        if depth == m:
            return True
        need = 1 if depth == 1 else 2
        for i in range(m):
            if used[i]:
                continue
            if depth == 0 or len(sets[i] & covered) >= need:
                used[i] = True
                order.append(i)
                if extend(covered | sets[i]):
                    return True
                used[i] = False
                order.pop()
        return False

    if extend(frozenset()):
        return tuple(tris[i] for i in order)
    return None
