from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as hs

from sqwu import steenrod as st


def milnor_dim(d: int) -> int:
    """Partitions of d into parts 2^k - 1: the dimension of A in degree d."""
    parts = [2**k - 1 for k in range(1, 12) if 2**k - 1 <= max(d, 1)]
    ways = [1] + [0] * d
    for p in parts:
        for x in range(p, d + 1):
            ways[x] += ways[x - p]
    return ways[d]


@pytest.mark.parametrize("x", range(0, 40))
def test_binomial_parity_matches_math_comb(x):
    for y in range(0, 42):
        want = math.comb(x, y) % 2 if y <= x else 0
        assert st.binom_mod2(x, y) == want


def test_binomial_negative_arguments_are_zero():
    assert st.binom_mod2(-1, 0) == 0
    assert st.binom_mod2(3, -2) == 0


@pytest.mark.parametrize("d", range(0, 30))
def test_admissible_count_matches_milnor_basis(d):
    mons = st.admissible_monomials(d)
    assert len(mons) == milnor_dim(d)
    assert all(st.is_admissible(I) and sum(I) == d for I in mons)
    assert mons == sorted(mons, reverse=True)


@pytest.mark.parametrize("lhs, rhs", [
    ("Sq2 Sq2", "Sq3 Sq1"),
    ("Sq2 Sq3", "Sq5 + Sq4 Sq1"),
    ("Sq4 Sq3", "Sq5 Sq2"),
    ("Sq1 Sq1", "0"),
    ("Sq3 Sq2", "0"),
    ("Sq4 Sq4", "Sq7 Sq1 + Sq6 Sq2"),
])
def test_small_identities(lhs, rhs):
    assert st.normalize(st.parse(lhs)) == st.normalize(st.parse(rhs))


def test_adem_pair_range_is_enforced():
    with pytest.raises(st.OutOfAdemRange):
        st.adem_pair(4, 2)


def test_excess_rejects_inadmissible():
    assert st.excess((4, 2, 1)) == 1
    with pytest.raises(st.NonAdmissibleInput):
        st.excess((1, 2))


@pytest.mark.parametrize("text, pos", [("Sq0", 0), ("Sq2 Sqx", 4), ("Sq2 +", 5), ("+ Sq1", 0), ("Sq-3", 0)])
def test_parse_errors_name_a_position(text, pos):
    with pytest.raises(st.SqParseError) as info:
        st.parse(text)
    assert info.value.position == pos


def test_format_round_trip():
    e = st.normalize(st.parse("Sq4 Sq2 Sq9 + Sq1 + 1"))
    assert st.normalize(st.parse(st.format_element(e))) == e
    assert st.format_element(frozenset()) == "0"


monomials = hs.lists(hs.integers(1, 12), min_size=1, max_size=5).filter(lambda I: sum(I) <= 24)
elements = hs.lists(monomials, max_size=4)


@given(monomials, hs.integers(0, 2**32))
def test_confluence_random_strategy(I, seed):
    rng = random.Random(seed)
    assert st.normalize_with([I], rng.choice) == st.normalize(tuple(I))


@given(monomials)
def test_confluence_rightmost_strategy(I):
    assert st.normalize_with([I], lambda bad: bad[-1]) == st.normalize(tuple(I))


@given(elements)
def test_idempotent_and_admissible(e):
    n = st.normalize(e)
    assert st.normalize(n) == n
    assert all(st.is_admissible(I) for I in n)


@given(elements, elements)
def test_linear(a, b):
    assert st.normalize(a + b) == st.add(st.normalize(a), st.normalize(b))


@given(monomials, monomials)
def test_compose_is_associative_with_normalize(I, J):
    assert st.compose(st.normalize(tuple(I)), st.normalize(tuple(J))) == st.normalize(tuple(I) + tuple(J))
