import math
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithomit import (
    EmptyInput,
    GcdNotOne,
    NotAMember,
    OracleTooLarge,
    apery_set,
    build_length_table,
    contains,
    factorizations,
    frobenius,
    length_set,
    make_monoid,
)
from arithomit.monoid import lengths_to_mask, mask_to_lengths, predicted_oracle_nodes

from conftest import brute_factorizations, brute_members

S11 = make_monoid(range(11, 19))


def test_make_monoid_keeps_minimal_list():
    assert make_monoid([6, 9, 20]).generators == (6, 9, 20)


def test_make_monoid_drops_representable():
    assert make_monoid(list(range(11, 19)) + [23]).generators == tuple(range(11, 19))


def test_make_monoid_errors():
    with pytest.raises(GcdNotOne):
        make_monoid([4, 6, 8, 10])
    with pytest.raises(EmptyInput):
        make_monoid([])
    with pytest.raises(ValueError):
        make_monoid([0, 3])


def test_make_monoid_unsorted_duplicates():
    assert make_monoid([9, 6, 20, 6, 15, 12]).generators == (6, 9, 20)


@given(st.lists(st.integers(1, 40), min_size=1, max_size=6))
def test_make_monoid_is_minimal_and_idempotent(cands):
    if reduce(math.gcd, cands) != 1:
        return
    S = make_monoid(cands)
    assert make_monoid(list(S.generators)).generators == S.generators
    gens = S.generators
    for i, g in enumerate(gens):
        others = gens[:i] + gens[i + 1 :]
        assert g not in brute_members(others, g)
    # generates the same monoid
    assert brute_members(gens, 120) == brute_members(sorted(set(cands)), 120)


def test_length_table_examples():
    T = build_length_table(S11, 36, check=True)
    assert T.row(0) == (0,)
    assert T.row(36) == (2, 3)
    assert T.row(10) is None
    assert T.row(34) == (2, 3)
    assert T.bound == 36


def test_length_table_json_rows():
    T = build_length_table(make_monoid([2, 3]), 5)
    assert T.to_json_rows() == [[0], None, [1], [1], [2], [2]]


def test_length_set_examples():
    assert length_set(S11, 11) == (1,)
    assert length_set(S11, 36) == (2, 3)
    assert length_set(S11, 34) == (2, 3)
    assert length_set(S11, 21) is None
    assert length_set(S11, 0) == (0,)


def test_contains_examples():
    assert not contains(make_monoid([6, 9, 20]), 43)
    assert contains(make_monoid([6, 9, 20]), 0)
    assert not contains(S11, 21)
    assert not contains(S11, -11)


def test_factorizations_examples():
    # 36 = 2*18 = 3*12 = 11+12+13 = 2*11+14
    expected = [
        (0, 0, 0, 0, 0, 0, 0, 2),
        (0, 3, 0, 0, 0, 0, 0, 0),
        (1, 1, 1, 0, 0, 0, 0, 0),
        (2, 0, 0, 1, 0, 0, 0, 0),
    ]
    assert sorted(factorizations(S11, 36)) == expected
    assert factorizations(S11, 0) == [(0,) * 8]
    assert factorizations(S11, 5) == []


def test_factorizations_budget():
    with pytest.raises(OracleTooLarge):
        factorizations(S11, 300, budget=1000)


def test_factorizations_budget_env(monkeypatch):
    monkeypatch.setenv("MONOID_ORACLE_BUDGET", "10")
    with pytest.raises(OracleTooLarge):
        factorizations(S11, 100)


def test_predicted_nodes_is_exact():
    calls = 0
    gens = (3, 5, 7)
    n = 40
    # count partial vectors over (3, 5) with value <= 40, plus the root
    for z0 in range(n // 3 + 1):
        calls += 1
        for z1 in range((n - 3 * z0) // 5 + 1):
            calls += 1
    assert predicted_oracle_nodes(gens, n) == calls + 1


def test_apery_examples():
    assert apery_set(make_monoid([2, 3]), 2) == [0, 3]
    assert apery_set(make_monoid([6, 9, 20]), 6) == [0, 49, 20, 9, 40, 29]
    assert apery_set(S11, 11)[0] == 0
    assert apery_set(make_monoid([6, 9, 20]), 9) == [
        min(x for x in brute_members([6, 9, 20], 200) if x % 9 == r) for r in range(9)
    ]
    with pytest.raises(NotAMember):
        apery_set(S11, 21)
    with pytest.raises(NotAMember):
        apery_set(S11, 0)


def test_frobenius_examples():
    assert frobenius(make_monoid([6, 9, 20])) == 43
    assert frobenius(make_monoid([2, 3])) == 1
    assert frobenius(S11) == 21
    assert frobenius(make_monoid([1, 5])) == -1


def test_mask_roundtrip():
    assert mask_to_lengths(lengths_to_mask([0, 3, 4])) == (0, 3, 4)
    assert mask_to_lengths(0) is None


gen_lists = st.lists(st.integers(2, 25), min_size=2, max_size=4, unique=True).filter(
    lambda g: math.gcd(*g) == 1
)


@settings(max_examples=60, deadline=None)
@given(gen_lists, st.integers(0, 300))
def test_oracle_agreement(gens, n):
    S = make_monoid(gens)
    fs = factorizations(S, n)
    lengths = tuple(sorted({sum(f) for f in fs})) or None
    assert length_set(S, n) == lengths
    for f in fs:
        assert sum(z * g for z, g in zip(f, S.generators)) == n
    assert len(set(fs)) == len(fs)


@settings(max_examples=40, deadline=None)
@given(gen_lists)
def test_gap_structure_and_apery(gens):
    S = make_monoid(gens)
    F = frobenius(S)
    members = brute_members(S.generators, F + 2 * S.generators[-1])
    assert F not in members or F == -1
    assert all(n in members for n in range(F + 1, F + 2 * S.generators[-1]))
    assert all(contains(S, n) == (n in members) for n in range(F + 2 * S.generators[-1]))
    m = S.generators[0]
    for r, x in enumerate(apery_set(S, m)):
        assert x % m == r
        assert contains(S, x)
        assert not contains(S, x - m) or x == 0


@settings(max_examples=30, deadline=None)
@given(gen_lists, st.integers(0, 150), st.integers(0, 150))
def test_additivity(gens, n1, n2):
    S = make_monoid(gens)
    T = build_length_table(S, 300, check=True)
    if T.is_member(n1) and T.is_member(n2):
        assert T.max_length(n1) + T.max_length(n2) in T.row(n1 + n2)


def test_brute_factorizations_match_on_small_case():
    gens = (4, 7, 9)
    S = make_monoid(gens)
    for n in range(60):
        assert sorted(factorizations(S, n)) == brute_factorizations(gens, n)
