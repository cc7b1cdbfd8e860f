"""General numerical monoid computations.

Length sets are packed into Python ints used as bitsets: bit ``l`` of the
mask for ``n`` is set iff ``n`` has a factorization of length ``l``.  A mask
of 0 marks a gap.  The length table is filled by the recurrence

    mask(0) = 1,    mask(n) = OR_{g <= n} (mask(n - g) << 1),

which never touches individual factorizations.
"""
from __future__ import annotations

import heapq
import math
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from typing import Iterable, Optional, Sequence

from .errors import EmptyInput, GcdNotOne, NotAMember, OracleTooLarge

LengthSet = tuple  # strictly increasing tuple of non-negative ints
FactorizationVector = tuple

DEFAULT_ORACLE_BUDGET = 10**8
ORACLE_BUDGET_ENV = "MONOID_ORACLE_BUDGET"


def mask_to_lengths(mask: int) -> Optional[LengthSet]:
    """Unpack a length mask; ``None`` for a gap."""
    if not mask:
        return None
    out = []
    l = 0
    while mask:
        if mask & 1:
            out.append(l)
        mask >>= 1
        l += 1
    return tuple(out)


def lengths_to_mask(lengths: Iterable[int]) -> int:
    mask = 0
    for l in lengths:
        mask |= 1 << l
    return mask


def min_length(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def max_length(mask: int) -> int:
    return mask.bit_length() - 1


def _apery_dists(m: int, gens: Sequence[int]) -> list:
    """Least element of <gens> in each residue class mod m (None if none).

    Dijkstra over the residues, with an edge r -> r + g (mod m) of weight g
    for every generator.
    """
    dist: list = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    steps = [(g % m, g) for g in gens if g % m]
    while heap:
        dd, r = heapq.heappop(heap)
        if dd != dist[r]:
            continue
        for step, g in steps:
            r2 = r + step
            if r2 >= m:
                r2 -= m
            nd = dd + g
            cur = dist[r2]
            if cur is None or nd < cur:
                dist[r2] = nd
                heapq.heappush(heap, (nd, r2))
    return dist


def _minimize(candidates: Sequence[int]) -> tuple:
    # ascending pass: only smaller generators can sum to g
    kept: list = []
    dist: list = []
    for g in sorted(set(candidates)):
        if kept:
            m = kept[0]
            best = dist[g % m]
            if best is not None and best <= g:
                continue
        kept.append(g)
        dist = _apery_dists(kept[0], kept)
    return tuple(kept)


@dataclass(frozen=True)
class NumericalMonoid:
    """A numerical monoid, stored by its minimal generating set.

    The constructor accepts any generating list and reduces it; use
    :func:`make_monoid` for the same thing from a plain list.
    """

    generators: tuple

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        if not gens:
            raise EmptyInput("empty generator list")
        if any(g <= 0 for g in gens):
            raise ValueError(f"generators must be positive: {gens}")
        if reduce(math.gcd, gens) != 1:
            raise GcdNotOne(f"gcd of {list(gens)} is {reduce(math.gcd, gens)}")
        object.__setattr__(self, "generators", _minimize(gens))

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @cached_property
    def apery(self) -> tuple:
        """Apery set with respect to the smallest generator."""
        return tuple(_apery_dists(self.multiplicity, self.generators))

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __repr__(self):
        return f"NumericalMonoid({list(self.generators)})"


def make_monoid(candidates: Sequence[int]) -> NumericalMonoid:
    if len(candidates) == 0:
        raise EmptyInput("empty generator list")
    return NumericalMonoid(tuple(candidates))


@dataclass(frozen=True)
class LengthTable:
    """Length sets of every n in [0, bound], one bitmask per row."""

    generators: tuple
    masks: tuple = field(repr=False)

    @property
    def bound(self) -> int:
        return len(self.masks) - 1

    def mask(self, n: int) -> int:
        if n < 0:
            return 0
        return self.masks[n]

    def row(self, n: int) -> Optional[LengthSet]:
        return mask_to_lengths(self.mask(n))

    def is_member(self, n: int) -> bool:
        return self.mask(n) != 0

    def min_length(self, n: int) -> int:
        return min_length(self.masks[n])

    def max_length(self, n: int) -> int:
        return max_length(self.masks[n])

    def members(self) -> list:
        return [n for n, m in enumerate(self.masks) if m]

    def to_json_rows(self) -> list:
        """Rows as JSON-ready lists; gaps become ``None``."""
        return [None if not m else list(mask_to_lengths(m)) for m in self.masks]

    def check_invariants(self) -> None:
        masks = self.masks
        assert masks[0] == 1
        for n in range(1, len(masks)):
            if not masks[n]:
                continue
            for g in self.generators:
                if g > n:
                    break
                prev = masks[n - g]
                if prev:
                    assert masks[n] >> (max_length(prev) + 1) & 1, (n, g)


def _fill_masks(gens: Sequence[int], bound: int) -> list:
    masks = [1]
    append = masks.append
    for n in range(1, bound + 1):
        acc = 0
        for g in gens:
            if g > n:
                break
            acc |= masks[n - g]
        append(acc << 1)
    return masks


def build_length_table(S: NumericalMonoid, N: int, check: bool = False) -> LengthTable:
    """Exact length sets of all n <= N by dynamic programming.

    With ``check=True`` the row invariants are asserted after filling.
    """
    if N < 0:
        raise ValueError(f"table bound must be non-negative, got {N}")
    table = LengthTable(S.generators, tuple(_fill_masks(S.generators, N)))
    if check:
        table.check_invariants()
    return table


@lru_cache(maxsize=256)
def _cached_table(gens: tuple, bound: int) -> LengthTable:
    return LengthTable(gens, tuple(_fill_masks(gens, bound)))


def length_table_at_least(S: NumericalMonoid, n: int) -> LengthTable:
    """A cached table covering ``n``; bounds are rounded up to powers of two."""
    bound = 1 << max(6, n.bit_length())
    return _cached_table(S.generators, bound)


def length_set(S: NumericalMonoid, n: int) -> Optional[LengthSet]:
    """L_S(n) as a sorted tuple, or ``None`` when n is not in S."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not contains(S, n):
        return None
    return length_table_at_least(S, n).row(n)


def contains(S: NumericalMonoid, n: int) -> bool:
    if n < 0:
        return False
    best = S.apery[n % S.multiplicity]
    return best is not None and best <= n


def apery_set(S: NumericalMonoid, m: int) -> list:
    """Least element of S in each residue class modulo m."""
    if m <= 0 or not contains(S, m):
        raise NotAMember(f"{m} is not a positive element of {S}")
    if m == S.multiplicity:
        return list(S.apery)
    return _apery_dists(m, S.generators)


def frobenius(S: NumericalMonoid) -> int:
    """Largest integer outside S (-1 when S is all of Z>=0)."""
    return max(S.apery) - S.multiplicity


def oracle_budget() -> int:
    raw = os.environ.get(ORACLE_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_BUDGET


def predicted_oracle_nodes(gens: Sequence[int], n: int) -> int:
    """Exact number of recursion nodes :func:`factorizations` will visit.

    The enumeration chooses every coordinate but the last, so the node count
    is the number of partial vectors over ``gens[:-1]`` with value <= n.
    """
    ways = [1] + [0] * n
    total = 1
    for g in gens[:-1]:
        for s in range(g, n + 1):
            ways[s] += ways[s - g]
        total += sum(ways)
    return total


def factorizations(S: NumericalMonoid, n: int, budget: Optional[int] = None) -> list:
    """Every factorization vector of n, by bounded exhaustive search.

    Independent of the length table; meant for small instances only.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    gens = S.generators
    budget = oracle_budget() if budget is None else budget
    nodes = predicted_oracle_nodes(gens, n)
    if nodes > budget:
        raise OracleTooLarge(f"enumerating {n} in {S} needs {nodes} nodes (budget {budget})")

    k = len(gens)
    out = []
    vec = [0] * k

    def rec(i: int, rem: int) -> None:
        g = gens[i]
        if i == k - 1:
            if rem % g == 0:
                vec[i] = rem // g
                out.append(tuple(vec))
            return
        for z in range(rem // g + 1):
            vec[i] = z
            rec(i + 1, rem - z * g)
        vec[i] = 0

    rec(0, n)
    return out
