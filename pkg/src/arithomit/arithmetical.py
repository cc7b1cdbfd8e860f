"""Closed forms for arithmetical numerical monoids <a, a+d, ..., a+wd>.

Every integer has unique coordinates n = c1*a + c2*d with 0 <= c2 < a.  In
those coordinates n lies in S iff c2 <= c1*w, the maximum factorization
length is c1, and the length set is {c1 - k*d : 0 <= k <= (c1*w - c2)/(a+wd)}.

S_r denotes S with the single generator a + r*d omitted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import GcdNotOne, IndexOutOfRange, InvalidParameters, WTooSmall
from .monoid import LengthSet, NumericalMonoid


@dataclass(frozen=True)
class ArithmeticalMonoid:
    a: int
    d: int
    w: int

    def __post_init__(self):
        a, d, w = self.a, self.d, self.w
        if min(a, d, w) < 1:
            raise InvalidParameters(f"a, d, w must be positive, got ({a}, {d}, {w})")
        if math.gcd(a, d) != 1:
            raise GcdNotOne(f"gcd(a, d) = gcd({a}, {d}) = {math.gcd(a, d)}")
        if w >= a:
            raise InvalidParameters(f"need w < a, got w={w}, a={a}")

    def generator(self, i: int) -> int:
        return self.a + i * self.d

    @property
    def top(self) -> int:
        """Largest generator a + w*d."""
        return self.a + self.w * self.d

    @property
    def generators(self) -> tuple:
        return tuple(self.generator(i) for i in range(self.w + 1))

    def __str__(self):
        return f"<{self.a}, {self.a + self.d}, ..., {self.top}>"


class CanonicalCoords(NamedTuple):
    c1: int
    c2: int


def canonical_coords(M: ArithmeticalMonoid, n: int) -> CanonicalCoords:
    c2 = n * pow(M.d, -1, M.a) % M.a
    c1, rem = divmod(n - c2 * M.d, M.a)
    assert rem == 0
    return CanonicalCoords(c1, c2)


def contains_closed(M: ArithmeticalMonoid, n: int) -> bool:
    if n < 0:
        return False
    c1, c2 = canonical_coords(M, n)
    return c2 <= c1 * M.w


def length_set_closed(M: ArithmeticalMonoid, n: int) -> Optional[LengthSet]:
    """L_S(n) from the coordinates of n, or ``None`` for a gap."""
    if n < 0:
        return None
    c1, c2 = canonical_coords(M, n)
    if c2 > c1 * M.w:
        return None
    kmax = (c1 * M.w - c2) // M.top
    return tuple(c1 - k * M.d for k in range(kmax, -1, -1))


def frobenius_closed(M: ArithmeticalMonoid) -> int:
    a, d, w = M.a, M.d, M.w
    return (-(-(a - 1) // w) - 1) * a + (a - 1) * d


def expand(M: ArithmeticalMonoid) -> NumericalMonoid:
    return NumericalMonoid(M.generators)


def _check_omission(M: ArithmeticalMonoid, G: Iterable[int], lo: int, hi: int) -> frozenset:
    G = frozenset(G)
    bad = sorted(i for i in G if not lo <= i <= hi)
    if bad:
        raise IndexOutOfRange(f"omission indices {bad} outside {{{lo}, ..., {hi}}} for w={M.w}")
    return G


def omit(M: ArithmeticalMonoid, G: Iterable[int]) -> NumericalMonoid:
    """The monoid generated by a + i*d for i in [0, w] not in G."""
    G = _check_omission(M, G, 1, M.w - 1)
    return NumericalMonoid(tuple(M.generator(i) for i in range(M.w + 1) if i not in G))


def _check_r(M: ArithmeticalMonoid, r: int) -> None:
    # for w = 2, S_1 = <a, a+2d> is two-generated and none of the closed forms apply
    if M.w < 3:
        raise WTooSmall(f"single-omission closed forms need w >= 3, got w={M.w}")
    if not 1 <= r <= M.w - 1:
        raise IndexOutOfRange(f"r={r} outside [1, {M.w - 1}]")


def _in_removed(M: ArithmeticalMonoid, r: int, c1: int, c2: int) -> bool:
    """Whether n = c1*a + c2*d lies in S but not in S_r."""
    a, d, w = M.a, M.d, M.w
    if 1 < r < w - 1:
        return c1 * a + c2 * d == M.generator(r)
    if r == 1 and c2 == 1 and w * c1 <= M.top:
        return True
    if r == w - 1 and c2 == c1 * w - 1 and w * c1 <= a:
        return True
    return False


def sr_length_set(M: ArithmeticalMonoid, r: int, n: int) -> Optional[LengthSet]:
    """Closed-form length set of n in S_r; ``None`` when n is not in S_r.

    Membership is settled first, then the extreme length is dropped: the
    maximum for r = 1 when n = d (mod a), the minimum for r = w-1 when
    n = -d (mod a + w*d).
    """
    _check_r(M, r)
    full = length_set_closed(M, n)
    if full is None:
        return None
    c1, c2 = canonical_coords(M, n)
    if _in_removed(M, r, c1, c2):
        return None
    out = full
    if r == 1 and (n - M.d) % M.a == 0:
        out = out[:-1]
    if r == M.w - 1 and (n + M.d) % M.top == 0:
        out = out[1:]
    return out or None


def sr_removed_elements(M: ArithmeticalMonoid, r: int, bound: Optional[int] = None) -> list:
    """All elements of S \\ S_r in increasing order, capped at ``bound``."""
    _check_r(M, r)
    a, d, w = M.a, M.d, M.w
    found = set()
    if 1 < r < w - 1:
        found.add(M.generator(r))
    if r == 1:
        # c2 = 1 requires c1 >= 1 for membership
        c1 = 1
        while w * c1 <= M.top:
            found.add(c1 * a + d)
            c1 += 1
    if r == w - 1:
        c1 = 1
        while w * c1 <= a:
            found.add(c1 * a + (c1 * w - 1) * d)
            c1 += 1
    out = sorted(found)
    if bound is not None:
        out = [n for n in out if n <= bound]
    return out


def congruence_equivalence(M: ArithmeticalMonoid, n: int) -> tuple:
    """The two conditions n = -d (mod a+wd) and c1*w = c2+1 (mod a+wd).

    They always agree; both are returned so callers can check that.
    """
    c1, c2 = canonical_coords(M, n)
    return ((n + M.d) % M.top == 0, (c1 * M.w - c2 - 1) % M.top == 0)
