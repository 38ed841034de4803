from __future__ import annotations

import pytest

from sqwu import cpsi, em
from sqwu.amodule import DimensionMismatch, is_constant, is_zero
from sqwu.tables import TABLE3_DIMS, TABLE3_DIMS_M2, TABLE3_WORDS


@pytest.fixture(scope="module")
def cp3():
    return cpsi.build_cpsi(3)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_dims(m):
    cp = cpsi.build_cpsi(m)
    assert {j: cp.dim(j) for j in range(1, 10)} == TABLE3_DIMS


def test_m2_dims_both_conventions():
    no_cube = cpsi.build_cpsi(2, include_cube=False)
    cube = cpsi.build_cpsi(2, include_cube=True)
    assert {j: no_cube.dim(j) for j in range(1, 10)} == TABLE3_DIMS_M2
    assert {j: cube.dim(j) for j in range(1, 10)} == TABLE3_DIMS
    with pytest.raises(em.UnsupportedM):
        cpsi.build_cpsi(2)


def test_window_basis_is_the_listed_basis(cp3):
    for j in range(1, 10):
        assert sorted(cp3.window.basis[j]) == sorted(TABLE3_WORDS[j])


def test_sq1_a1_is_g2(cp3):
    assert cp3.element("Sq1 a1")[1] == cp3.element("g2")[1]


@pytest.mark.parametrize("lhs, rhs", [
    ("Sq3 a2", None),
    ("Sq3 Sq1 a2", "Sq5 a1 + Sq4 g2 + Sq2 Sq1 g3"),
    ("Sq4 Sq2 a2", "Sq5 Sq2 a1 + Sq4 Sq1 g3"),
    ("Sq4 Sq1 a2", "Sq5 a2"),
    ("Sq5 Sq1 a2", None),
    ("Sq5 Sq2 a2", None),
])
def test_derived_relations(cp3, lhs, rhs):
    d, v = cp3.element(lhs)
    want = cp3.element(rhs)[1] if rhs else cp3.window.zero()
    assert v == want and is_constant(v)


def test_sq4_a4_correction_is_parametric_and_in_the_cokernel(cp3):
    d, v = cp3.element(cpsi.sq4a4_text(3))
    assert d == 8 and not is_constant(v)
    labels = cp3.window.basis[8]
    for part in v:
        for b in range(part.bit_length()):
            if part >> b & 1:
                assert labels[b].split()[-1].startswith("g")


def test_only_one_pin_choice_matters():
    good = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)
            if cpsi.dims_for_pins(3, (x, y, z)) == [TABLE3_DIMS[j] for j in range(1, 10)]]
    assert good == [(0, 1, 0), (1, 1, 0)]


def test_wrong_pins_raise_dimension_mismatch():
    with pytest.raises(DimensionMismatch) as info:
        cpsi.build_cpsi(3, pins=(0, 0, 0))
    assert info.value.degree == 7


def test_structure(cp3):
    assert cpsi.block_triangular(cp3) == []
    assert cp3.window.adem_failures() == []


def test_kernel_relations_generate():
    for d in range(1, 10):
        ker, _ = cpsi.kernel_of_stable_map(3, d)
        span = cpsi.a_span(cpsi.alpha_relations(3), d)
        assert cpsi.same_span(ker, span) if ker or span else True


def test_sq5_g2_relation_holds_in_window(cp3):
    d, v = cp3.element("Sq3 Sq1 g3 + Sq5 g2")
    assert is_zero(v)
