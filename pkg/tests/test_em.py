from __future__ import annotations

import warnings

import pytest

from sqwu import em
from sqwu import steenrod as st
from sqwu.tables import TABLE1_DIMS, TABLE2_DIMS, TABLE2_DIMS_M2


def l(*J: int) -> em.EMClass:
    return em.generator(tuple(J))


def test_unstable_square_and_vanishing():
    assert em.unstable_act(4, l(), 4) == em.times(l(), l())
    assert em.unstable_act(5, l(), 4) == frozenset()


def test_cartan_on_a_product():
    x = em.times(l(), l(1))
    assert em.unstable_act(1, x, 12) == em.times(l(1), l(1))


def test_excess_decides_generator_square_or_zero():
    # excess(Sq3 Sq1) = 2
    assert em.evaluate((3, 1), 2) == em.times(l(1), l(1))
    assert em.evaluate((3, 1), 3) == l(3, 1)
    assert em.evaluate((3, 1), 1) == frozenset()


@pytest.mark.parametrize("d, dim", [(11, 0), (12, 1), (13, 1), (14, 1), (15, 2), (24, 7)])
def test_em_basis_small(d, dim):
    assert len(em.em_basis(12, d)) == dim


def test_em_basis_degree_27():
    basis = em.em_basis(12, 27)
    pairs = [mon for mon in basis if len(mon) == 2]
    assert sorted(pairs) == sorted([((), (3,)), ((), (2, 1)), ((1,), (2,))])
    singles = [mon[0] for mon in basis if len(mon) == 1]
    assert singles == [J for J in st.admissible_monomials(15) if st.excess(J) < 12]
    assert len(basis) == 12


def test_em_basis_ceiling():
    with pytest.raises(em.WindowExceeded):
        em.em_basis(4, 30, ceiling=20)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_kernel_dims(m):
    assert {j: len(em.kernel_basis(m, j)) for j in range(1, 10)} == TABLE1_DIMS


def test_kernel_basis_first_rows():
    assert [b.text for b in em.kernel_basis(3, 1)] == ["Sq13"]
    assert [b.label for b in em.kernel_basis(3, 2)] == ["a2"]


@pytest.mark.parametrize("m", [3, 4, 5])
def test_coker_dims(m):
    assert {j: len(em.coker_basis(m, j)) for j in range(2, 10)} == {j: TABLE2_DIMS[j] for j in range(2, 10)}


def test_coker_m2_needs_a_choice():
    with pytest.raises(em.UnsupportedM):
        em.coker_basis(2, 9)
    assert len(em.coker_basis(2, 9, include_cube=False)) == TABLE2_DIMS_M2[9]
    full = em.coker_basis(2, 9, include_cube=True)
    assert len(full) == TABLE2_DIMS[9]
    assert [c.label for c in full if c.nonstandard] == ["l^3"]


def test_small_m_rejected():
    with pytest.raises(em.UnsupportedM):
        em.kernel_basis(1, 3)
    with pytest.raises(em.UnsupportedM):
        em.coker_basis(1, 3)


def test_window_warning_and_limit():
    with pytest.warns(UserWarning):
        em.kernel_basis(3, 10, window=12)
    with pytest.raises(em.WindowExceeded):
        em.kernel_basis(3, 10)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        em.kernel_basis(3, 9)


def test_psi_star_kills_high_excess():
    assert em.psi_star((13,), 3) == frozenset()
    assert em.psi_star((11, 1), 3) == l(11, 1)
    with pytest.raises(em.StabilityViolation):
        em.psi_star((13,), 3, r=10)


def test_relation_sq1_on_g2_vanishes():
    assert em.coker_word(3, (1,), "g2") == frozenset()


def test_relation_sq5_g2_matches_sq3sq1_g3():
    assert em.coker_word(3, (5,), "g2") == em.coker_word(3, (3, 1), "g3")
