"""Decision procedures for omitting generators of an arithmetical monoid.

Throughout, S = <a, a+d, ..., a+wd> and S' is S with the generators
a + i*d, i in G, removed.  Two monoids have the same set of length sets when
{L_S(n) : n in S} = {L_S'(n) : n in S'}.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from ._parallel import pmap
from .arithmetical import (
    ArithmeticalMonoid,
    expand,
    frobenius_closed,
    omit,
    sr_length_set,
    sr_removed_elements,
    _check_omission,
    _check_r,
)
from .errors import WTooSmall
from .monoid import (
    NumericalMonoid,
    build_length_table,
    frobenius,
    length_table_at_least,
    min_length,
)


class Shortcut(str, enum.Enum):
    NONE = "none"
    LEN_BOUND = "len_bound"
    FROB_BOUND = "frob_bound"
    SINGLE_MIDDLE = "single_middle"
    SINGLE_EDGE = "single_edge"


@dataclass(frozen=True)
class OmissionVerdict:
    """Answers for one omission set.

    ``None`` in ``lengths_equal`` or ``frobenius_equal`` means the question
    was not asked.  ``length_witness`` is the smallest element whose length
    set (in S or in S') is not a length set of the other monoid;
    ``frobenius_witness`` is the larger of the two Frobenius numbers.
    """

    lengths_equal: Optional[bool] = None
    frobenius_equal: Optional[bool] = None
    length_shortcut: Shortcut = Shortcut.NONE
    frobenius_shortcut: Shortcut = Shortcut.NONE
    length_witness: Optional[int] = None
    frobenius_witness: Optional[int] = None

    @property
    def shortcut_used(self) -> Shortcut:
        if self.lengths_equal is not None and self.length_shortcut is not Shortcut.NONE:
            return self.length_shortcut
        return self.frobenius_shortcut

    def merge(self, other: "OmissionVerdict") -> "OmissionVerdict":
        """Combine a lengths-only verdict with a Frobenius-only one."""
        pick = lambda x, y: x if x is not None else y
        return OmissionVerdict(
            lengths_equal=pick(self.lengths_equal, other.lengths_equal),
            frobenius_equal=pick(self.frobenius_equal, other.frobenius_equal),
            length_shortcut=self.length_shortcut if self.lengths_equal is not None else other.length_shortcut,
            frobenius_shortcut=(
                self.frobenius_shortcut if self.frobenius_equal is not None else other.frobenius_shortcut
            ),
            length_witness=pick(self.length_witness, other.length_witness),
            frobenius_witness=pick(self.frobenius_witness, other.frobenius_witness),
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["length_shortcut"] = self.length_shortcut.value
        out["frobenius_shortcut"] = self.frobenius_shortcut.value
        out["shortcut_used"] = self.shortcut_used.value
        return out


def threshold(M: ArithmeticalMonoid) -> int:
    """(w-3)(a+wd): above it, S and S_* have the same elements and length sets."""
    return (M.w - 3) * M.top


def middle_indices(M: ArithmeticalMonoid) -> tuple:
    return tuple(range(2, M.w - 1))


@dataclass(frozen=True)
class FullSide:
    """Data about S shared by every omission set of M.

    ``small`` maps each length set of S with minimum <= w-3 to its first
    element; ``known`` holds every length set realized up to ``reach``,
    enough to decide membership in the set of length sets of S for any
    length set met below the threshold.
    """

    small: dict
    known: frozenset
    reach: int


def _first_occurrences(masks, bound: int, cutoff: Optional[int] = None) -> dict:
    out: dict = {}
    for n in range(bound + 1):
        m = masks[n]
        if m and m not in out and (cutoff is None or min_length(m) <= cutoff):
            out[m] = n
    return out


@lru_cache(maxsize=64)
def full_side_collection(M: ArithmeticalMonoid) -> FullSide:
    N = threshold(M)
    # a length set with minimum l is only realized by n <= l*(a+wd), and
    # every element n <= N has minimum length <= N // a
    reach = max(N, (N // M.a) * M.top)
    masks = length_table_at_least(expand(M), reach).masks
    return FullSide(
        small=_first_occurrences(masks, N, M.w - 3),
        known=frozenset(masks[: reach + 1]),
        reach=reach,
    )


def _check_middle(M: ArithmeticalMonoid, G: Iterable[int]) -> frozenset:
    if M.w < 4:
        raise WTooSmall(f"need w >= 4, got w={M.w}")
    return _check_omission(M, G, 2, M.w - 2)


def decide_length_sets_equal(
    M: ArithmeticalMonoid,
    G: Iterable[int],
    use_shortcut: bool = True,
    s_collection: Optional[FullSide] = None,
) -> OmissionVerdict:
    """Exact test of whether omitting G preserves the set of length sets.

    G must lie in {2, ..., w-2}.  Every n in S with m_S(n) >= w-2 lies in
    S' with the same length set, so only elements n <= (w-3)(a+wd) can
    differ.  The two monoids agree iff

    * every length set of S' at n <= (w-3)(a+wd) is a length set of S, and
    * every length set of S with minimum <= w-3 occurs in S' at some
      n <= (w-3)(a+wd).

    Filtering the S' side by its own minimum length instead is not enough:
    for <17, ..., 25> with {2, ..., 6} omitted, 105 has length set {6} in
    the smaller monoid and no element of S has that length set.
    """
    G = _check_middle(M, G)
    a, w = M.a, M.w
    if use_shortcut and a >= w * w - 3 * w:
        return OmissionVerdict(lengths_equal=True, length_shortcut=Shortcut.LEN_BOUND)
    if not G:
        return OmissionVerdict(lengths_equal=True)
    if s_collection is None:
        s_collection = full_side_collection(M)
    N = threshold(M)
    gens = tuple(M.generator(i) for i in range(w + 1) if i not in G)
    other = _first_occurrences(length_table_at_least(NumericalMonoid(gens), N).masks, N)
    diff = [n for m, n in other.items() if m not in s_collection.known]
    diff += [n for m, n in s_collection.small.items() if m not in other]
    if not diff:
        return OmissionVerdict(lengths_equal=True)
    return OmissionVerdict(lengths_equal=False, length_witness=min(diff))


def decide_frobenius_equal(
    M: ArithmeticalMonoid, G: Iterable[int], use_shortcut: bool = True
) -> OmissionVerdict:
    G = _check_omission(M, G, 1, M.w - 1)
    a, w = M.a, M.w
    middle = all(2 <= i <= w - 2 for i in G)
    if use_shortcut and middle and a > w * w - 3 * w + 1:
        return OmissionVerdict(frobenius_equal=True, frobenius_shortcut=Shortcut.FROB_BOUND)
    f_full = frobenius(expand(M))
    f_omit = frobenius(omit(M, G))
    if f_full == f_omit:
        return OmissionVerdict(frobenius_equal=True)
    return OmissionVerdict(frobenius_equal=False, frobenius_witness=max(f_full, f_omit))


def _first_edge_witness(M: ArithmeticalMonoid) -> int:
    """An element of S_1 whose length set is not a length set of S.

    Elements n = c1*a + d with c1*w = t*(a+wd) and t >= 2 work.
    """
    a, d, w = M.a, M.d, M.w
    step = M.top // math.gcd(w, M.top)
    c1 = step
    while c1 * w <= M.top:
        c1 += step
    return c1 * a + d


def _edge_length_witness(M: ArithmeticalMonoid, r: int) -> Optional[int]:
    n = _first_edge_witness(M)
    if r == 1:
        return n
    # the same length set reappears in S_{w-1} within 3d of n
    target = sr_length_set(M, 1, n)
    for delta in (0, -1, 1, -2, 2, -3, 3):
        m = n + delta * M.d
        if m >= 0 and sr_length_set(M, r, m) == target:
            return m
    return None


def classify_single_omission(M: ArithmeticalMonoid, r: int) -> OmissionVerdict:
    """Closed-form verdict for omitting the single generator a + r*d.

    Only the middle omissions 1 < r < w-1 keep the set of length sets.
    Since S_r differs from S by the finite set S \\ S_r,
    F(S_r) = max(F(S), max(S \\ S_r)).  For w = 2, S_1 = <a, a+2d> and the
    two-generator formula ab - a - b applies (no Frobenius number when a is
    even).
    """
    if M.w == 2 and r == 1:
        a, b = M.a, M.a + 2 * M.d
        return OmissionVerdict(
            lengths_equal=False,
            frobenius_equal=False,
            length_shortcut=Shortcut.SINGLE_EDGE,
            frobenius_shortcut=Shortcut.SINGLE_EDGE,
            frobenius_witness=a * b - a - b if a % 2 else None,
        )
    _check_r(M, r)
    f_full = frobenius_closed(M)
    f_omit = max(f_full, max(sr_removed_elements(M, r)))
    frob = dict(
        frobenius_equal=f_omit == f_full,
        frobenius_witness=None if f_omit == f_full else f_omit,
    )
    if 1 < r < M.w - 1:
        return OmissionVerdict(
            lengths_equal=True,
            length_shortcut=Shortcut.SINGLE_MIDDLE,
            frobenius_shortcut=Shortcut.SINGLE_MIDDLE,
            **frob,
        )
    return OmissionVerdict(
        lengths_equal=False,
        length_shortcut=Shortcut.SINGLE_EDGE,
        frobenius_shortcut=Shortcut.SINGLE_EDGE,
        length_witness=_edge_length_witness(M, r),
        **frob,
    )


def frobenius_trichotomy(M: ArithmeticalMonoid, r: int) -> bool:
    """Whether F(S_r) = F(S) by the divisibility rule.

    Middle omissions keep F, omitting a+d always raises it, and omitting
    a+(w-1)d raises it iff w | a, or w | a-1 and d < a.  The middle case
    assumes a + r*d < F(S), which can fail when a = w + 1; prefer
    :func:`classify_single_omission`.
    """
    _check_r(M, r)
    a, d, w = M.a, M.d, M.w
    if 1 < r < w - 1:
        return True
    if r == 1:
        return False
    return not (a % w == 0 or ((a - 1) % w == 0 and d < a))


def length_set_witness(A: NumericalMonoid, B: NumericalMonoid, window: int) -> Optional[int]:
    """Smallest n <= window in A whose length set is no length set of B.

    An element of B with length set L lies in [max(L)*min(B), min(L)*max(B)],
    so one table of B up to min(L)*max(B) decides each L exactly.
    """
    table_a = length_table_at_least(A, window)
    masks_a = table_a.masks[: window + 1]
    seen = {}
    for n, m in enumerate(masks_a):
        if m and m not in seen:
            seen[m] = n
    if not seen:
        return None
    reach = max(min_length(m) for m in seen) * B.generators[-1]
    set_b = set(length_table_at_least(B, reach).masks[: reach + 1])
    missing = [n for m, n in seen.items() if m not in set_b]
    return min(missing) if missing else None


def compare_length_collections(
    A: NumericalMonoid, B: NumericalMonoid, window: int
) -> Optional[tuple]:
    """Brute comparison of length-set collections over elements <= window.

    Returns ``None`` when every length set of either monoid seen in the
    window is a length set of the other, else ``(n, side)`` for the
    smallest offending element, side 0 for A and 1 for B.
    """
    found = []
    wa = length_set_witness(A, B, window)
    if wa is not None:
        found.append((wa, 0))
    wb = length_set_witness(B, A, window)
    if wb is not None:
        found.append((wb, 1))
    return min(found) if found else None


@dataclass
class BoundaryReport:
    bound: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"bound": self.bound, "checked": self.checked, "failures": self.failures}


def check_boundary_lenset_match(M: ArithmeticalMonoid, N: int) -> BoundaryReport:
    """Match every length set of S_1 and S_{w-1} below N to one within 3d.

    Failures are recorded as ``[monoid_index, n]`` with monoid_index 1 or w-1.
    """
    if M.w < 3:
        raise WTooSmall(f"need w >= 3, got w={M.w}")
    reach = 3 * M.d
    first = build_length_table(omit(M, {1}), N + reach).masks
    last = build_length_table(omit(M, {M.w - 1}), N + reach).masks
    report = BoundaryReport(bound=N)
    for label, here, there in ((1, first, last), (M.w - 1, last, first)):
        for n in range(N + 1):
            m = here[n]
            if not m:
                continue
            report.checked += 1
            lo, hi = max(0, n - reach), n + reach
            if not any(there[k] == m for k in range(lo, hi + 1)):
                report.failures.append([label, n])
    return report


@dataclass(frozen=True)
class TightnessRow:
    w: int
    d: int
    largest_bad_a: Optional[int]
    bad_count: int
    scanned: int

    @property
    def upper_bound(self) -> int:
        return self.w * self.w - 3 * self.w + 1

    def to_dict(self) -> dict:
        out = asdict(self)
        out["upper_bound"] = self.upper_bound
        return out


def _tightness_cell(cell: tuple) -> TightnessRow:
    w, d = cell
    largest = None
    bad = scanned = 0
    for a in range(w + 1, w * w - 3 * w + 2):
        if math.gcd(a, d) != 1:
            continue
        M = ArithmeticalMonoid(a, d, w)
        scanned += 1
        if frobenius(expand(M)) != frobenius(omit(M, middle_indices(M))):
            bad += 1
            largest = a
    return TightnessRow(w, d, largest, bad, scanned)


def tightness_scan(w_range: Iterable[int], d_range: Iterable[int], threads: int = 1) -> list:
    """Largest a with F(S) != F(S_*) for each (w, d), scanning a up to w^2-3w+1.

    Larger a cannot differ, so the scan stops there.
    """
    w_range, d_range = list(w_range), list(d_range)
    if any(w < 6 for w in w_range):
        warnings.warn("tightness_scan with w < 6: the near-tightness pattern is only expected for w >= 6")
    if any(w < 4 for w in w_range):
        raise WTooSmall("tightness_scan needs w >= 4 so that S_* is defined")
    cells = [(w, d) for w in w_range for d in d_range]
    return pmap(_tightness_cell, cells, threads)
