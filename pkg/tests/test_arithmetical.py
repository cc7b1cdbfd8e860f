import pytest

from arithomit import (
    ArithmeticalMonoid,
    GcdNotOne,
    IndexOutOfRange,
    InvalidParameters,
    WTooSmall,
    build_length_table,
    canonical_coords,
    congruence_equivalence,
    contains,
    contains_closed,
    expand,
    frobenius,
    frobenius_closed,
    length_set_closed,
    omit,
    sr_length_set,
    sr_removed_elements,
)

from conftest import arith_grid, brute_lengths, brute_members


def test_constructor_validation():
    with pytest.raises(GcdNotOne):
        ArithmeticalMonoid(6, 4, 2)
    with pytest.raises(InvalidParameters):
        ArithmeticalMonoid(5, 1, 5)
    with pytest.raises(InvalidParameters):
        ArithmeticalMonoid(5, 0, 2)


def test_canonical_coords(m11):
    assert canonical_coords(m11, 36) == (3, 3)
    assert canonical_coords(m11, 11) == (1, 0)
    assert canonical_coords(ArithmeticalMonoid(23, 3, 11), 56) == (1, 11)
    c1, c2 = canonical_coords(ArithmeticalMonoid(23, 3, 11), -7)
    assert c1 * 23 + c2 * 3 == -7 and 0 <= c2 < 23


def test_contains_closed(m11):
    assert not contains_closed(m11, 21)
    assert contains_closed(m11, 36)
    assert contains_closed(m11, 0)
    assert not contains_closed(m11, -18)


def test_length_set_closed(m11):
    assert length_set_closed(m11, 36) == (2, 3) == brute_lengths(m11.generators, 36)
    assert length_set_closed(m11, 11) == (1,)
    assert length_set_closed(m11, 34) == (2, 3) == brute_lengths(m11.generators, 34)
    assert length_set_closed(m11, 21) is None


def test_frobenius_closed():
    assert frobenius_closed(ArithmeticalMonoid(11, 1, 7)) == 21
    assert frobenius_closed(ArithmeticalMonoid(14, 1, 7)) == 27
    assert frobenius_closed(ArithmeticalMonoid(2, 1, 1)) == 1
    members = brute_members(range(14, 22), 200)
    assert max(n for n in range(200) if n not in members) == 27


def test_expand():
    assert expand(ArithmeticalMonoid(23, 3, 11)).generators == tuple(range(23, 57, 3))
    assert expand(ArithmeticalMonoid(51, 2, 8)).generators == tuple(range(51, 68, 2))
    assert expand(ArithmeticalMonoid(11, 1, 7)).generators == tuple(range(11, 19))


def test_omit(m11):
    assert omit(m11, {3}).generators == (11, 12, 13, 15, 16, 17, 18)
    assert omit(m11, set()).generators == expand(m11).generators
    M = ArithmeticalMonoid(23, 3, 11)
    assert omit(M, range(2, 10)).generators == (23, 26, 53, 56)
    with pytest.raises(IndexOutOfRange):
        omit(m11, {0})
    with pytest.raises(IndexOutOfRange):
        omit(m11, {7})


def test_sr_length_set(m11):
    assert sr_length_set(m11, 3, 36) == (2, 3)
    assert sr_length_set(m11, 1, 34) == (2,)
    assert sr_length_set(m11, 1, 36) == (2, 3)
    assert sr_length_set(m11, 3, 14) is None
    with pytest.raises(IndexOutOfRange):
        sr_length_set(m11, 7, 36)
    with pytest.raises(WTooSmall):
        sr_length_set(ArithmeticalMonoid(5, 1, 2), 1, 10)


def test_sr_length_set_against_brute_force(m11):
    gens = omit(m11, {1}).generators
    for n in range(0, 80):
        assert sr_length_set(m11, 1, n) == brute_lengths(gens, n), n


def test_sr_removed_elements(m11):
    assert sr_removed_elements(m11, 3) == [14]
    assert sr_removed_elements(m11, 1) == [12, 23]
    assert 41 in sr_removed_elements(ArithmeticalMonoid(14, 1, 7), 6)
    assert sr_removed_elements(m11, 1, bound=20) == [12]


def test_congruence_equivalence(m11):
    assert congruence_equivalence(m11, 17) == (True, True)
    assert congruence_equivalence(m11, 36) == (False, False)
    M = ArithmeticalMonoid(23, 3, 11)
    assert congruence_equivalence(M, M.top - M.d) == (True, True)


SMALL_GRID = list(arith_grid(25, 4, 2))


@pytest.mark.parametrize("M", SMALL_GRID[::7], ids=str)
def test_closed_forms_vs_dp(M):
    N = 4 * M.top
    T = build_length_table(expand(M), N, check=True)
    for n in range(N + 1):
        L = length_set_closed(M, n)
        assert contains_closed(M, n) == T.is_member(n) == contains(expand(M), n)
        assert L == T.row(n)
        if L is not None:
            c1, c2 = canonical_coords(M, n)
            assert max(L) == c1
            assert len(L) == (c1 * M.w - c2) // M.top + 1
    assert frobenius_closed(M) == frobenius(expand(M))


@pytest.mark.parametrize("M", [M for M in SMALL_GRID if M.w >= 3][::5], ids=str)
def test_sr_closed_forms_vs_dp(M):
    for r in range(1, M.w):
        Sr = omit(M, {r})
        N = max(3 * M.top, frobenius(Sr) + 1)
        T = build_length_table(Sr, N)
        for n in range(N + 1):
            assert sr_length_set(M, r, n) == T.row(n), (r, n)
        S_members = build_length_table(expand(M), N)
        diff = [n for n in range(N + 1) if S_members.is_member(n) != T.is_member(n)]
        assert diff == sr_removed_elements(M, r)


@pytest.mark.parametrize("M", SMALL_GRID[::3], ids=str)
def test_congruence_equivalence_grid(M):
    for n in range(10 * M.top + 1):
        x, y = congruence_equivalence(M, n)
        assert x == y
