from __future__ import annotations

import math

import pytest

from sqwu import gf2, thom
from sqwu.tables import TABLE4_DIMS, TABLE4_WORDS


@pytest.fixture(scope="module")
def mw():
    return thom.build_mspinc()


@pytest.mark.parametrize("n", range(-6, 10))
def test_generalized_binomial(n):
    for t in range(0, 8):
        num = 1
        for i in range(t):
            num *= n - i
        assert thom.generalized_binom_mod2(n, t) == (num // math.factorial(t)) % 2


def test_wu_formula_on_low_classes():
    assert thom.sq(1, thom.w(2)) == thom.w(3)
    # Sq2 w2 = w2^2, Sq1 w4 = w5 (w1 = 0), Sq2 w4 = w2 w4 + w6
    assert thom.sq(2, thom.w(2)) == thom.mul(thom.w(2), thom.w(2))
    assert thom.sq(1, thom.w(4)) == thom.w(5)
    assert thom.sq(2, thom.w(4)) == thom.add(thom.mul(thom.w(2), thom.w(4)), thom.w(6))


def test_dims_and_listed_bases(mw):
    assert {d: mw.dim(d) for d in range(0, 9)} == TABLE4_DIMS
    for d, words in TABLE4_WORDS.items():
        vecs = [thom.thom_vector(mw, t)[1] for t in words]
        assert gf2.rank(vecs) == len(words) == mw.dim(d)


@pytest.mark.parametrize("text", ["Sq1 U", "Sq3 U", "Sq5 U", "Sq5 Sq2 U", "Sq4 Sq3 U", "Sq1 U4", "Sq3 U4"])
def test_vanishing_classes(mw, text):
    assert thom.thom_vector(mw, text)[1] == 0


def test_window_is_a_module(mw):
    assert mw.adem_failures() == []


def test_zero_substitution_agrees_below_nine():
    exact = thom.SpincRing(9, "exact")
    zero = thom.SpincRing(9, "zero")
    assert [exact.dim(d) for d in range(9)] == [zero.dim(d) for d in range(9)]
    assert exact.reduce(thom.w(9), 9) == exact.reduce(thom.mul(thom.w(2), thom.w(7)), 9)
    assert zero.reduce(thom.w(9), 9) == frozenset()


def test_universal_wu_classes():
    v = thom.wu_total(8, thom.SpincRing())
    assert thom.format_poly(v[4]) == "w2^2 + w4"
    assert thom.format_poly(v[6]) == "w2 w4"
    assert v[1] == v[3] == v[5] == frozenset()
    # in BSO the w3^2 term survives
    assert thom.format_poly(thom.wu_total(6)[6]) == "w2 w4 + w3^2"


def test_bad_mode():
    with pytest.raises(ValueError):
        thom.SpincRing(4, "approximate")
