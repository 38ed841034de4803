from __future__ import annotations

import pytest

from sqwu import amodule as am
from sqwu.amodule import ModuleWindow, PresentedModule, Relation, parse_free


def test_affine_scaling_rules():
    p1 = (0, 1, 0)
    p2 = (0, 0, 1)
    one = (1, 0, 0)
    assert am.scale(one, (0b11, 0b01, 0)) == (0b11, 0b01, 0)
    assert am.scale(p1, (0b10, 0, 0)) == (0, 0b10, 0)
    assert am.scale(p1, (0, 0b1, 0)) == (0, 0b1, 0)  # p1^2 = p1
    with pytest.raises(am.ParameterNonlinearity):
        am.scale(p1, (0, 0, 0b1))
    assert am.evaluate((0b001, 0b010, 0b100), 0b11) == 0b111
    assert am.is_constant((0b1, 0, 0)) and not am.is_constant(p2)


def test_affine_echelon_refuses_parameter_pivots():
    e = am.AffineEchelon(1)
    assert e.add((0b10, 0))
    with pytest.raises(am.ParameterDependentRank):
        e.add((0, 0b1))


def test_parse_free_normalizes():
    assert parse_free("Sq2 Sq2 a1") == parse_free("Sq3 Sq1 a1")
    assert parse_free("Sq1 Sq1 a1") == frozenset()


def test_free_module_quotient_dimensions():
    # F2[x]/(x^3) with |x| = 1 as a module over A on one generator: Sq1 x = x^2
    pm = PresentedModule({"x": 1}, 3)
    pm.add_relation(Relation(3, parse_free("Sq2 x")))
    assert [pm.dim(d) for d in (1, 2, 3)] == [1, 1, 0]


def test_window_act_and_adem():
    # H*(RP^2) as a window: x in degree 1, x^2 in degree 2, Sq1 x = x^2
    w = ModuleWindow({1: ["x"], 2: ["x^2"]}, {(1, 0, 1): (1,)})
    assert w.act(1, 1, (1,)) == (1,)
    with pytest.raises(am.WindowExceeded):
        w.act(1, 2, (1,))
    assert w.adem_failures() == []


def test_smash_dims_and_cartan():
    left = ModuleWindow({0: ["U"], 2: ["wU"]}, {(0, 0, 2): (1,)})
    right = ModuleWindow({1: ["a"], 2: ["Sa"]}, {(1, 0, 1): (1,)})
    s = am.smash(left, right, 4)
    assert s.dims(range(0, 5)) == [0, 1, 1, 1, 1]
    # Sq2 (U . a) = wU . a
    d, v = 1, am.tensor_vector(left, 0, 1, right, 1, (1,), s)
    assert s.format(3, s.act(2, d, v)) == "wU . a"
