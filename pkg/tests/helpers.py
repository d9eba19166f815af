"""Shared test utilities: random system generation and naive reference
implementations.

The naive functions deliberately avoid pair_table and every package-side
shortcut: they scan the triple list directly, so they form an independent
route against which the optimized operators are compared.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from ltspread import TripleSystem, build_system


def random_linear_system(rng: random.Random, n: int, fill: float = 0.7) -> TripleSystem:
    """Greedy random linear system on n vertices.

    Shuffles all 3-subsets and keeps each one whose pairs are still free,
    stopping at a random fraction of the achievable count.
    """
    cands = list(combinations(range(n), 3))
    rng.shuffle(cands)
    covered: set[tuple[int, int]] = set()
    triples = []
    budget = max(1, int(fill * rng.random() * n * (n - 1) / 6))
    for x, y, z in cands:
        pairs = ((x, y), (x, z), (y, z))
        if all(p not in covered for p in pairs):
            triples.append((x, y, z))
            covered.update(pairs)
            if len(triples) >= budget:
                break
    return build_system(n, triples)


def neighbourhood_naive(system: TripleSystem, subset) -> set[int]:
    s = set(subset)
    out: set[int] = set()
    for t in system.triples:
        for a, b, c in ((t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])):
            if a in s and b in s and c not in s:
                out.add(c)
    return out


def closure_naive(system: TripleSystem, subset) -> set[int]:
    cur = set(subset)
    while True:
        grow = neighbourhood_naive(system, cur)
        if not grow:
            return cur
        cur |= grow


def spreading_naive(system: TripleSystem):
    """Brute-force spreading check over all non-triple subsets of size >= 3,
    size-ascending then lexicographic; returns (holds, witness)."""
    n = system.n
    full = set(range(n))
    tset = set(system.triples)
    for k in range(3, n + 1):
        for cand in combinations(range(n), k):
            if k == 3 and cand in tset:
                continue
            if closure_naive(system, cand) != full:
                return False, frozenset(cand)
    return True, None


def weakly_spreading_naive(system: TripleSystem):
    full = set(range(system.n))
    for t1, t2 in combinations(system.triples, 2):
        if closure_naive(system, set(t1) | set(t2)) != full:
            return False, (t1, t2)
    return True, None


def strongly_connected_naive(system: TripleSystem):
    """Direct partition-based check: every side U with |U| >= 4 of a proper
    partition must be met by some triple in exactly two vertices."""
    n = system.n
    for k in range(4, n):
        for cand in combinations(range(n), k):
            side = set(cand)
            if not any(len(side.intersection(t)) == 2 for t in system.triples):
                return False, frozenset(cand)
    return True, None


def expander_naive(system: TripleSystem, max_size: int | None = None):
    """Pure-python mirror of expander_deficiency; practical for n <= 15."""
    n = system.n
    if max_size is None:
        max_size = n // 2
    tset = {frozenset(t) for t in system.triples}
    per_size: dict[int, int] = {}
    best = None  # (deficiency, size, tuple)
    min_ratio = None
    for k in range(1, max_size + 1):
        size_min = None
        for cand in combinations(range(n), k):
            nb = len(neighbourhood_naive(system, cand))
            if size_min is None or nb < size_min:
                size_min = nb
            deficiency = nb - (k - 3)
            if best is None or deficiency < best[0]:
                best = (deficiency, k, cand)
            if k >= 3 and frozenset(cand) not in tset:
                ratio = Fraction(nb, k)
                if min_ratio is None or ratio < min_ratio:
                    min_ratio = ratio
        per_size[k] = size_min
    return {
        "min_deficiency": best[0],
        "per_size_min_neighbourhood": per_size,
        "worst_set": frozenset(best[2]),
        "min_ratio": min_ratio,
    }


def is_valid_ordering(sequence) -> bool:
    """Overlap conditions: T2 shares >= 1 vertex with T1, and every later
    triple meets the union of its predecessors in >= 2 vertices."""
    if len(sequence) <= 1:
        return True
    covered = set(sequence[0])
    for idx, t in enumerate(sequence[1:], start=2):
        need = 1 if idx == 2 else 2
        if len(covered.intersection(t)) < need:
            return False
        covered.update(t)
    return True
