from __future__ import annotations

import pytest

from sqwu import fmap
from sqwu.amodule import is_zero

# smash dims in relative degrees 0..9; the source free module has 32 generators
SMASH_DIMS = [0, 1, 2, 4, 7, 12, 18, 29, 44, 66]


@pytest.fixture(scope="module")
def fm():
    return fmap.build_f(3)


def test_source_generators():
    assert len(fmap.F_IMAGES) == 32
    counts = {}
    for name in fmap.F_IMAGES:
        d = fmap.generator_degree(name)
        counts[d] = counts.get(d, 0) + 1
    assert [counts[d] for d in range(1, 9)] == [1, 1, 2, 2, 4, 5, 8, 9]


def test_generator_degree_parse():
    assert fmap.generator_degree("l7_3") == 7
    with pytest.raises(ValueError):
        fmap.generator_degree("x7")


def test_smash_dims(fm):
    assert fm.target.dims(range(0, 10)) == SMASH_DIMS


def test_xi_has_seven_terms_and_dies(fm):
    words = fmap.xi()
    assert len(words) == 7
    assert is_zero(fm.apply(words))


def test_generator_images_are_parameter_free(fm):
    dependent = sorted(g for g, (_, img) in fm.images.items() if any(img[1:]))
    assert dependent == []


def test_effective_parameters_and_assignments():
    vectors = [(0, 0b1, 0b1, 0), (0, 0, 0, 0b10)]
    keep = fmap.effective_parameters(vectors, 3)
    assert keep == [0, 2]
    assert fmap.assignments(keep) == [0, 0b1, 0b100, 0b101]
    assert fmap.format_assignment(0b101, ["p1", "p2", "p3"]) == "p1+p3"


def test_parametric_check_warns_when_only_some_assignments_pass():
    c = fmap._parametric_check("x", "anchor", 5, {0: 1, 1: 2}, lambda r: r == 1, ["p1"], "ctx")
    assert c.status == "warn" and c.passed and c.parameter_independent is False
    assert c.data["failing_assignments"] == ["p1"]


def test_restricted_generators_fail_surjectivity():
    rep = fmap.verify_fxi(3, generators=["l1"], degrees_surj=range(1, 4))
    by_degree = {c.degree: c.passed for c in rep.by_id("fxi.surjectivity")}
    assert by_degree[1] and not by_degree[2]
