"""Generators for the triple-system families, with fixed vertex layouts.

Each generator documents its label layout; two calls with equal parameters
produce identical systems, so serialized output is stable.
"""

from __future__ import annotations

import operator
from itertools import combinations
from typing import Iterable, Sequence

from .core import Triple, TripleSystem, build_system
from .errors import (
    EvenModulus,
    KeepIndexOutOfRange,
    ModulusTooSmall,
    NotOddPrime,
    OrderTooSmall,
)

__all__ = [
    "bose_skolem",
    "spreading_6p3",
    "crowning",
    "cayley_latin",
    "from_latin_square",
    "star_expansion",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(p: int, what: str) -> int:
    p = operator.index(p)
    if p < 3 or p % 2 == 0 or not _is_prime(p):
        raise NotOddPrime(f"{what} requires an odd prime, got {p}")
    return p


def bose_skolem(q: int) -> TripleSystem:
    """Steiner triple system on 3q vertices for odd q >= 3.

    Layout: a_i -> i, b_i -> q+i, c_i -> 2q+i for i in Z_q.  Triples are
    {a_i, b_i, c_i} plus {a_i, a_j, b_k}, {b_i, b_j, c_k}, {c_i, c_j, a_k}
    where k = (i+j)/2 in Z_q, i.e. (i+j)*(q+1)/2 mod q.  Primality of q is
    not needed; only oddness makes halving well-defined.
    """
    q = operator.index(q)
    if q % 2 == 0:
        raise EvenModulus(f"modulus must be odd, got {q}")
    if q < 3:
        raise ModulusTooSmall(f"modulus must be at least 3, got {q}")
    half = (q + 1) // 2
    triples: list[Triple] = [(i, q + i, 2 * q + i) for i in range(q)]
    for i, j in combinations(range(q), 2):
        k = (i + j) * half % q
        triples.append((i, j, q + k))
        triples.append((q + i, q + j, 2 * q + k))
        triples.append((2 * q + i, 2 * q + j, k))
    return build_system(3 * q, triples)


def spreading_6p3(p: int) -> TripleSystem:
    """Spreading system on 6p+3 vertices for an odd prime p.

    Six classes: A = {a_0..a_{p-1}, a}, B, C (each of size p+1) and
    A' = {alpha_0..alpha_{p-1}}, B', C' (each of size p).  Layout:
    a_i -> i, a -> p, b_i -> p+1+i, b -> 2p+1, c_i -> 2p+2+i, c -> 3p+2,
    alpha_i -> 3p+3+i, beta_i -> 4p+3+i, gamma_i -> 5p+3+i.

    Triple families (all indices mod p; i != j where stated):
      black:  {a, a_j, beta_j}, {a_i, a_{2j-i}, beta_j}, and the rotations
              (b with gamma, c with alpha);
      brown:  {alpha_i, alpha_{2j-i}, b_j}, {beta_i, beta_{2j-i}, c_j},
              {gamma_i, gamma_{2j-i}, a_j};
      orange: {a_i, b_j, c_{i+j}}, {alpha_i, beta_j, gamma_{i+j+1}},
              and {a, b, c};
      red:    {a, alpha_j, b_j}, {b, beta_j, c_j}, {c, gamma_j, a_j};
      blue:   {a, gamma_j, c_j}, {b, alpha_j, a_j}, {c, beta_j, b_j}.

    Total count is 5p^2 + 6p + 1.
    """
    p = _require_odd_prime(p, "spreading_6p3")

    def a(i: int) -> int:
        return i % p

    def b(i: int) -> int:
        return p + 1 + i % p

    def c(i: int) -> int:
        return 2 * p + 2 + i % p

    def alpha(i: int) -> int:
        return 3 * p + 3 + i % p

    def beta(i: int) -> int:
        return 4 * p + 3 + i % p

    def gamma(i: int) -> int:
        return 5 * p + 3 + i % p

    hub_a, hub_b, hub_c = p, 2 * p + 1, 3 * p + 2

    triples: list[tuple[int, int, int]] = []
    for j in range(p):
        triples.append((hub_a, a(j), beta(j)))
        triples.append((hub_b, b(j), gamma(j)))
        triples.append((hub_c, c(j), alpha(j)))
        for i in range(p):
            if i != j:
                triples.append((a(i), a(2 * j - i), beta(j)))
                triples.append((b(i), b(2 * j - i), gamma(j)))
                triples.append((c(i), c(2 * j - i), alpha(j)))
                triples.append((alpha(i), alpha(2 * j - i), b(j)))
                triples.append((beta(i), beta(2 * j - i), c(j)))
                triples.append((gamma(i), gamma(2 * j - i), a(j)))
    for i in range(p):
        for j in range(p):
            triples.append((a(i), b(j), c(i + j)))
            triples.append((alpha(i), beta(j), gamma(i + j + 1)))
    triples.append((hub_a, hub_b, hub_c))
    for j in range(p):
        triples.append((hub_a, alpha(j), b(j)))
        triples.append((hub_b, beta(j), c(j)))
        triples.append((hub_c, gamma(j), a(j)))
        triples.append((hub_a, gamma(j), c(j)))
        triples.append((hub_b, alpha(j), a(j)))
        triples.append((hub_c, beta(j), b(j)))
    return build_system(6 * p + 3, triples)


def crowning(system: TripleSystem, keep: Iterable[int] | None = None) -> TripleSystem:
    """Attach a fresh pendant vertex to uncovered edges.

    Uncovered edges are indexed in lexicographic order; keep selects by
    index (default: all).  Fresh vertices are labeled n, n+1, ... following
    that edge order, each forming one new triple with its edge.  When the
    input is spreading, the output is weakly spreading, for any keep set.
    """
    edges = system.uncovered_edges()
    if keep is None:
        chosen = list(range(len(edges)))
    else:
        chosen = sorted({operator.index(i) for i in keep})
        for i in chosen:
            if i < 0 or i >= len(edges):
                raise KeepIndexOutOfRange(
                    f"keep index {i} outside [0, {len(edges)}) uncovered edges"
                )
    triples = list(system.triples)
    fresh = system.n
    for i in chosen:
        x, y = edges[i]
        triples.append((x, y, fresh))
        fresh += 1
    return build_system(fresh, triples)


def cayley_latin(p: int) -> TripleSystem:
    """Tripartite system of the Z_p Cayley table, p an odd prime.

    Rows are 0..p-1, columns p..2p-1, symbols 2p..3p-1; the p^2 triples are
    {i, p+j, 2p+((i+j) mod p)}.  Prime order keeps the table free of
    subsquares, which is what the weak-spreading property rests on.
    """
    p = _require_odd_prime(p, "cayley_latin")
    triples = [(i, p + j, 2 * p + (i + j) % p) for i in range(p) for j in range(p)]
    return build_system(3 * p, triples)


def from_latin_square(square: Sequence[Sequence[int]]) -> TripleSystem:
    """Triple system induced by an arbitrary Latin square.

    square[i][j] is the symbol (0-based) in row i, column j.  Uses the same
    layout as cayley_latin.  Validation only checks linearity via
    build_system; weak spreading should be checked, not assumed, since the
    square may contain subsquares.
    """
    k = len(square)
    triples = [
        (i, k + j, 2 * k + operator.index(square[i][j]))
        for i in range(k)
        for j in range(k)
    ]
    return build_system(3 * k, triples)


def star_expansion(m: int) -> TripleSystem:
    """One triple per edge of the complete graph K_m, m > 3.

    Base vertices are 0..m-1; the edge (i, j), i < j, gets a private vertex
    m + rank(i, j) in lexicographic pair order.  Every pair of triples
    generates at least one further triple, yet the system is not weakly
    spreading.
    """
    m = operator.index(m)
    if m <= 3:
        raise OrderTooSmall(f"star expansion needs a base of more than 3, got {m}")
    triples = [
        (i, j, m + r) for r, (i, j) in enumerate(combinations(range(m), 2))
    ]
    return build_system(m + m * (m - 1) // 2, triples)
