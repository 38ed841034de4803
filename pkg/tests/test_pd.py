from __future__ import annotations

import json

import pytest

from sqwu import corpus, pd
from sqwu import steenrod as st


def rp(n: int) -> pd.PDAlgebra:
    return corpus.rp(n)


def test_rp2_validates():
    assert pd.validate(rp(2)).passed


def test_zero_fundamental_is_rejected():
    a = pd.PDAlgebra("rp2", 2, [("x", 1)], [("x^3", "0")], {"x": {1: "x*x"}}, fundamental=0)
    rep = pd.validate(a)
    assert not rep.passed
    bad = rep.by_id("pd.nondegenerate")
    assert bad and not bad[0].passed and bad[0].degree == 0


def test_non_poincare_algebra_is_rejected():
    # F2[x, y]/(x^2, y^2, xy) is not a duality algebra
    a = pd.PDAlgebra("wedge", 2, [("x", 1), ("y", 1)], [("x^2", "0"), ("y^2", "0"), ("x*y", "0")])
    assert not pd.validate(a).passed


def test_hp2_validates_and_wu():
    h = corpus.hp2()
    assert pd.validate(h).passed
    prof = pd.wu_classes(h)
    assert prof.total_v() == h.one() ^ h.generator("u")
    assert prof.w[4] == h.generator("u")


def test_bad_adem_input_is_caught():
    # Sq2 on a degree-3 class must satisfy Sq1 Sq2 = Sq3; here it does not
    a = pd.PDAlgebra("bad", 6, [("x", 3)], [("x^3", "0")], {"x": {2: "0", 1: "0"}})
    assert not pd.validate(a).passed


def test_product_wu_on_rp2_squared():
    a = pd.product(rp(2), rp(2), "rp2xrp2", {"x": "y"})
    prof = pd.wu_classes(a)
    assert prof.v[1] == a.element("x + y")
    assert prof.v[2] == a.element("x*y")


def test_sphere_product_has_trivial_wu():
    a = pd.product(corpus.sphere(2), corpus.sphere(2), rename={"s": "t"})
    assert pd.wu_classes(a).total_v() == a.one()


@pytest.mark.parametrize("name", ["rp6", "rp10", "cp3", "rp5xrp5", "cp4xcp5"])
def test_wu_is_basis_independent(name):
    a = corpus.load(name)
    for k in range(a.top + 1):
        dim = a.dim(k)
        if dim:
            assert pd.wu_class(a, k, list(reversed(range(dim)))) == pd.wu_class(a, k)


def test_point_is_accepted():
    p = corpus.point()
    assert pd.validate(p).passed
    assert pd.wu_classes(p).total_v() == p.one()


def test_v2k_skips_non_spinc():
    rep = pd.check_v2k(rp(2))
    assert [c.status for c in rep.checks] == ["skipped"]
    assert "SkippedNotSpinc" in rep.checks[0].detail
    assert rep.passed


def test_v2k_on_cp3_and_hp2():
    assert pd.check_v2k(corpus.cp(3)).passed
    assert pd.check_v2k(corpus.hp2()).passed


def test_main_identity_degree_gate():
    with pytest.raises(pd.BadDegreeConfig):
        pd.main_identity(rp(9))
    with pytest.raises(pd.BadDegreeConfig):
        pd.main_identity(pd.PDAlgebra(
            "odd", 10, [("x", 1)], [("x^11", "0")], {"x": {1: "x*x"}}, spinc=True,
            torsion_degree=3, torsion=["x^3"]))


def test_main_identity_vacuous_and_on_products():
    cp5 = corpus.cp(5)
    assert pd.main_identity(cp5).passed
    rep = pd.main_identity(corpus.load("rp5xrp5"))
    assert rep.passed and len(rep.checks) == 8


def test_rank_identity_adem_step_and_form():
    rep = pd.rank_identity(corpus.load("rp5xrp5"))
    assert rep.passed
    assert st.normalize((4, 6)) == frozenset({(10,), (8, 2)})


def test_json_round_trip_and_errors(tmp_path):
    a = corpus.load("cp4xcp5")
    b = pd.from_json(json.loads(json.dumps(a.to_json())))
    assert b.to_json() == a.to_json()
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(pd.PDInputError):
        pd.load(bad)
    with pytest.raises(pd.PDInputError):
        pd.from_json({"top": 2, "generators": [{"g": "x", "deg": 1}], "relations": [["z", "z", 0]]})
    with pytest.raises(pd.PDInputError):
        pd.from_json({"generators": []})


def test_schema_example_parses():
    h = pd.from_json({"name": "HP2", "top": 8, "spinc": True, "generators": [{"g": "u", "deg": 4}],
                      "relations": [["u", "u", "u", 0]], "sq": {"u": {"4": "u*u"}},
                      "torsion": {"degree": 4, "basis": []}})
    assert pd.validate(h).passed
