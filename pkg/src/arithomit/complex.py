"""The family of omission sets that preserve the set of length sets.

For S = <a, a+d, ..., a+wd> the ground set is {2, ..., w-2}.  Whether the
family is closed under subsets is open, so construction evaluates every
subset unless ``fast`` mode is requested.
"""
from __future__ import annotations

import itertools
import logging
import math
import warnings
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable

from ._parallel import pmap
from .arithmetical import ArithmeticalMonoid
from .errors import WTooSmall
from .omission import (
    decide_length_sets_equal,
    full_side_collection,
    middle_indices,
)

log = logging.getLogger(__name__)


def _to_bits(subset: Iterable[int]) -> int:
    bits = 0
    for i in subset:
        bits |= 1 << i
    return bits


def _from_bits(bits: int) -> tuple:
    return tuple(i for i in range(bits.bit_length()) if bits >> i & 1)


def _maximal(family: list) -> list:
    return [x for x in family if not any(x != y and x & y == x for y in family)]


def _minimal(family: list) -> list:
    return [x for x in family if not any(x != y and x & y == y for y in family)]


def _sort_key(subset: tuple):
    return (len(subset), subset)


@dataclass
class OmissionComplex:
    a: int
    d: int
    w: int
    ground_set: tuple
    faces: list
    nonfaces: list
    maximal_faces: list = field(default_factory=list)
    minimal_nonfaces: list = field(default_factory=list)
    downward_closed: bool = True
    violations: list = field(default_factory=list)
    shortcut: bool = False
    pruned: int = 0

    def is_face(self, subset: Iterable[int]) -> bool:
        return tuple(sorted(subset)) in set(self.faces)

    def to_dict(self) -> dict:
        return {
            "ground_set": list(self.ground_set),
            "maximal_faces": [list(f) for f in self.maximal_faces],
            "minimal_nonfaces": [list(f) for f in self.minimal_nonfaces],
            "downward_closed": self.downward_closed,
            "violations": [[list(f), list(g)] for f, g in self.violations],
        }

    def summary(self) -> dict:
        return {
            "a": self.a,
            "d": self.d,
            "w": self.w,
            "downward_closed": self.downward_closed,
            "faces": len(self.faces),
            "maximal_faces": len(self.maximal_faces),
            "minimal_nonfaces": len(self.minimal_nonfaces),
            "violations": [[list(f), list(g)] for f, g in self.violations],
        }


def _is_face(M: ArithmeticalMonoid, use_shortcut: bool, s_collection, subset: tuple) -> bool:
    return bool(decide_length_sets_equal(M, subset, use_shortcut, s_collection).lengths_equal)


def build_complex(
    M: ArithmeticalMonoid,
    use_shortcut: bool = True,
    fast: bool = False,
    threads: int = 1,
) -> OmissionComplex:
    """Evaluate every omission set in {2, ..., w-2} and summarize the result.

    ``fast`` skips supersets of known non-faces (they are recorded as
    non-faces without evaluation), which can hide a failure of downward
    closure; leave it off when that question matters.
    """
    if M.w < 4:
        raise WTooSmall(f"need w >= 4, got w={M.w}")
    ground = middle_indices(M)
    subsets = [c for k in range(len(ground) + 1) for c in itertools.combinations(ground, k)]
    shortcut = use_shortcut and M.a >= M.w * M.w - 3 * M.w
    s_collection = None if shortcut else full_side_collection(M)

    pruned = 0
    if fast:
        verdicts = []
        bad: list = []
        for s in subsets:
            bits = _to_bits(s)
            if any(b & bits == b for b in bad):
                verdicts.append(False)
                pruned += 1
                continue
            ok = _is_face(M, use_shortcut, s_collection, s)
            if not ok:
                bad.append(bits)
            verdicts.append(ok)
    else:
        verdicts = pmap(partial(_is_face, M, use_shortcut, s_collection), subsets, threads)

    faces = [s for s, ok in zip(subsets, verdicts) if ok]
    nonfaces = [s for s, ok in zip(subsets, verdicts) if not ok]
    C = OmissionComplex(M.a, M.d, M.w, ground, faces, nonfaces, shortcut=shortcut, pruned=pruned)
    face_bits = [_to_bits(s) for s in faces]
    nonface_bits = [_to_bits(s) for s in nonfaces]
    C.maximal_faces = sorted((_from_bits(b) for b in _maximal(face_bits)), key=_sort_key)
    C.minimal_nonfaces = sorted((_from_bits(b) for b in _minimal(nonface_bits)), key=_sort_key)
    C.violations = downward_closure_violations(C)
    C.downward_closed = not C.violations
    return C


def downward_closure_violations(C: OmissionComplex) -> list:
    """Pairs (face, subset) where the subset of a face is not a face."""
    out = []
    nonface_bits = [(_to_bits(s), s) for s in C.nonfaces]
    for f in C.faces:
        fb = _to_bits(f)
        for nb, s in nonface_bits:
            if nb != fb and nb & fb == nb:
                out.append((f, s))
    return out


def faces_below(maximal_faces: Iterable[Iterable[int]]) -> set:
    """All subsets of the given faces."""
    out = set()
    for f in maximal_faces:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            out.update(itertools.combinations(f, k))
    return out


def faces_avoiding(ground_set: Iterable[int], minimal_nonfaces: Iterable[Iterable[int]]) -> set:
    """Subsets of the ground set containing none of the given non-faces."""
    ground = tuple(sorted(ground_set))
    blocked = [_to_bits(s) for s in minimal_nonfaces]
    out = set()
    for k in range(len(ground) + 1):
        for c in itertools.combinations(ground, k):
            bits = _to_bits(c)
            if not any(b & bits == b for b in blocked):
                out.add(c)
    return out


def _survey_cell(cell: tuple, fast: bool = False) -> dict:
    a, d, w = cell
    return build_complex(ArithmeticalMonoid(a, d, w), fast=fast).summary()


def survey_cells(a_range: Iterable[int], d_range: Iterable[int], w_range: Iterable[int]) -> list:
    """Valid (a, d, w) triples: gcd(a, d) = 1 and 4 <= w < a."""
    return [
        (a, d, w)
        for w in w_range
        for d in d_range
        for a in a_range
        if w >= 4 and w < a and math.gcd(a, d) == 1
    ]


def complex_survey(
    a_range: Iterable[int],
    d_range: Iterable[int],
    w_range: Iterable[int],
    fast: bool = False,
    threads: int = 1,
) -> list:
    """Build the complex of every valid cell and report its summary.

    Any failure of downward closure is logged and raised as a warning, since
    it would be a counterexample worth a manual look.
    """
    a_range, d_range, w_range = list(a_range), list(d_range), list(w_range)
    cells = survey_cells(a_range, d_range, w_range)
    rows = pmap(partial(_survey_cell, fast=fast), cells, threads)
    for row in rows:
        if not row["downward_closed"]:
            msg = (
                f"NOT DOWNWARD CLOSED: a={row['a']} d={row['d']} w={row['w']}; "
                f"(face, missing subset) pairs: {row['violations']}"
            )
            log.error(msg)
            warnings.warn(msg)
    return rows
