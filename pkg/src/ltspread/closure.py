"""Neighbourhood and closure operators, plus the property verifiers.

The closure of a vertex set S keeps adjoining third points: whenever a
covered pair {x, y} lies inside the set and its triple's third vertex z is
outside, z is added.  The spreading-type properties below all ask whether
such propagation from small seeds reaches the whole vertex set.

Witness determinism: every verifier scans its candidate space in
size-ascending, then lexicographic order, and reports the first failure.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, islice
from typing import Iterable, Literal

import numpy as np

from .core import Pair, Triple, TripleSystem
from .errors import (
    BudgetExceeded,
    ModeTooLarge,
    OutOfRange,
    TooLarge,
    VertexOutOfRange,
)

__all__ = [
    "PropertyVerdict",
    "ExpanderReport",
    "neighbourhood",
    "closure",
    "is_spreading",
    "is_weakly_spreading",
    "is_strongly_connected",
    "expander_deficiency",
]


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a property check with a deterministic failure witness.

    witness is present exactly when holds is false: a vertex set for the
    spreading and connectivity checks, a pair of triples for the weak
    variant.  It is the first failing candidate in size-ascending, then
    lexicographic, scan order.
    """

    holds: bool
    witness: frozenset[int] | tuple[Triple, Triple] | None
    checked_count: int

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ExpanderReport:
    """Exhaustive neighbourhood-size statistics over small vertex sets.

    min_deficiency is the minimum of |N(V')| - (|V'| - 3); worst_set is its
    first attainer in size-ascending, then lexicographic, order.  min_ratio
    is min |N(V')| / |V'| over nontrivial sets only (size >= 3 and not a
    triple), or None when no nontrivial set was examined.
    """

    min_deficiency: int
    per_size_min_neighbourhood: dict[int, int]
    worst_set: frozenset[int]
    min_ratio: Fraction | None


def _check_subset(system: TripleSystem, subset: Iterable[int]) -> tuple[int, ...]:
    out = tuple(dict.fromkeys(operator.index(v) for v in subset))
    for v in out:
        if v < 0 or v >= system.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {system.n})")
    return out


def _close(table: dict[Pair, int], seed: Iterable[int]) -> set[int]:
    """Fixed point of third-point propagation starting from seed.

    When a vertex joins, only its pairs against vertices already inside are
    probed, so the whole run costs O(|closure|^2) table lookups.
    """
    queue = list(seed)
    members = set(queue)
    inside: list[int] = []
    for v in queue:
        for w in inside:
            z = table.get((v, w) if v < w else (w, v))
            if z is not None and z not in members:
                members.add(z)
                queue.append(z)
        inside.append(v)
    return members


def neighbourhood(system: TripleSystem, subset: Iterable[int]) -> frozenset[int]:
    """Vertices outside subset completing a covered pair inside it."""
    s = _check_subset(system, subset)
    table = system.pair_table
    inside = set(s)
    out: set[int] = set()
    for x, y in combinations(sorted(s), 2):
        z = table.get((x, y))
        if z is not None and z not in inside:
            out.add(z)
    return frozenset(out)


def closure(system: TripleSystem, subset: Iterable[int]) -> frozenset[int]:
    """Least superset of subset with empty neighbourhood."""
    s = _check_subset(system, subset)
    return frozenset(_close(system.pair_table, s))


def is_spreading(
    system: TripleSystem, mode: Literal["reduced", "brute_force"] = "reduced"
) -> PropertyVerdict:
    """Check that every nontrivial seed closes to the whole vertex set.

    Nontrivial means size at least 3 and not itself a triple of the system.
    Reduced mode only scans non-triple 3-subsets, which is equivalent to the
    full definition: closure is monotone, and by linearity at most one
    3-subset of any 4 vertices is a triple, so every failing set of size
    >= 4 contains a failing non-triple 3-subset.  Brute-force mode scans all
    non-triple subsets of size >= 3 and requires n <= 20.
    """
    if mode not in ("reduced", "brute_force"):
        raise ValueError(f"unknown mode {mode!r}")
    n = system.n
    if n < 3:
        raise OutOfRange(f"spreading needs at least 3 vertices, got n={n}")
    if mode == "brute_force" and n > 20:
        raise ModeTooLarge(f"brute_force scans all subsets; n={n} exceeds 20")
    table = system.pair_table
    full_size = n
    checked = 0
    sizes = (3,) if mode == "reduced" else range(3, n + 1)
    for k in sizes:
        for cand in combinations(range(n), k):
            if k == 3 and system.has_triple(cand):
                continue
            checked += 1
            if len(_close(table, cand)) != full_size:
                return PropertyVerdict(False, frozenset(cand), checked)
    return PropertyVerdict(True, None, checked)


def is_weakly_spreading(system: TripleSystem) -> PropertyVerdict:
    """Check that every pair of distinct triples closes to everything.

    This two-triple form is equivalent to requiring it of every subfamily
    with more than one triple, since closure is monotone.
    """
    table = system.pair_table
    full_size = system.n
    checked = 0
    for t1, t2 in combinations(system.triples, 2):
        checked += 1
        if len(_close(table, t1 + t2)) != full_size:
            return PropertyVerdict(False, (t1, t2), checked)
    return PropertyVerdict(True, None, checked)


def is_strongly_connected(system: TripleSystem) -> PropertyVerdict:
    """Check that every partition side of size >= 4 is met by a triple in
    exactly two vertices.

    A side U with no such triple is exactly a closed set (every covered
    pair inside U has its third point inside), so the check reduces to: no
    proper closed subset of size >= 4 exists.  Any such subset contains a
    4-subset whose closure is again proper and closed, hence scanning
    closures of all 4-subsets is complete, and the minimal failing side is
    the smallest such closure (size-ascending, then lexicographic).
    """
    n = system.n
    if n > 26:
        raise TooLarge(f"strong connectivity check supports n <= 26, got n={n}")
    table = system.pair_table
    checked = 0
    worst: tuple[int, tuple[int, ...]] | None = None
    for cand in combinations(range(n), 4):
        checked += 1
        closed = _close(table, cand)
        if len(closed) != n:
            key = (len(closed), tuple(sorted(closed)))
            if worst is None or key < worst:
                worst = key
    if worst is None:
        return PropertyVerdict(True, None, checked)
    return PropertyVerdict(False, frozenset(worst[1]), checked)


_CHUNK = 1 << 16


def expander_deficiency(
    system: TripleSystem,
    max_size: int | None = None,
    budget: int = 10**8,
) -> ExpanderReport:
    """Enumerate all vertex sets of size 1..max_size and report how far
    neighbourhood sizes sit above |V'| - 3.

    max_size defaults to n // 2, the range of interest for expansion.  The
    planned subset count is checked against budget up front and raises
    BudgetExceeded stating the largest size that still fits.
    """
    n = system.n
    if max_size is None:
        max_size = n // 2
    max_size = min(max_size, n)
    if max_size < 1:
        raise OutOfRange(f"max_size must be at least 1, got {max_size}")
    if n > 63:
        raise TooLarge(f"bitmask enumeration supports n <= 63, got n={n}")

    total = 0
    for k in range(1, max_size + 1):
        total += math.comb(n, k)
        if total > budget:
            raise BudgetExceeded(
                f"enumerating sizes up to {max_size} needs {total}+ subsets "
                f"(budget {budget}); size {k - 1} is the largest that fits"
            )

    # Each covered pair {x, y} with third point z contributes z to N(V')
    # exactly when both of x, y are inside V' and z is not: as bitmasks,
    # mask & (pair | bit_z) == pair.
    pair_specs = []
    for x, y, z in system.triples:
        bx, by, bz = 1 << x, 1 << y, 1 << z
        pair_specs.append((bx | by, bz))
        pair_specs.append((bx | bz, by))
        pair_specs.append((by | bz, bx))
    triple_masks = np.array(
        sorted((1 << x) | (1 << y) | (1 << z) for x, y, z in system.triples),
        dtype=np.int64,
    )

    per_size: dict[int, int] = {}
    best: tuple[int, int, tuple[int, ...]] | None = None  # (deficiency, size, set)
    min_ratio: Fraction | None = None

    for k in range(1, max_size + 1):
        size_min: int | None = None
        combos = combinations(range(n), k)
        while True:
            chunk = list(islice(combos, _CHUNK))
            if not chunk:
                break
            arr = np.fromiter(
                chain.from_iterable(chunk), dtype=np.int64, count=len(chunk) * k
            ).reshape(-1, k)
            masks = np.bitwise_or.reduce(np.left_shift(np.int64(1), arr), axis=1)
            nmask = np.zeros(len(chunk), dtype=np.int64)
            for pair_mask, z_bit in pair_specs:
                hit = (masks & (pair_mask | z_bit)) == pair_mask
                nmask |= np.where(hit, z_bit, 0)
            counts = np.bitwise_count(nmask).astype(np.int64)

            chunk_min = int(counts.min())
            if size_min is None or chunk_min < size_min:
                size_min = chunk_min
            idx = int(np.argmin(counts - (k - 3)))
            deficiency = int(counts[idx]) - (k - 3)
            if best is None or deficiency < best[0]:
                best = (deficiency, k, chunk[idx])

            if k >= 3:
                if k == 3 and len(triple_masks):
                    nontrivial = ~np.isin(masks, triple_masks)
                    ratio_counts = counts[nontrivial]
                else:
                    ratio_counts = counts
                if ratio_counts.size:
                    cand = Fraction(int(ratio_counts.min()), k)
                    if min_ratio is None or cand < min_ratio:
                        min_ratio = cand
        per_size[k] = size_min if size_min is not None else 0

    assert best is not None
    return ExpanderReport(
        min_deficiency=best[0],
        per_size_min_neighbourhood=per_size,
        worst_set=frozenset(best[2]),
        min_ratio=min_ratio,
    )
