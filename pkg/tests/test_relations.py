from __future__ import annotations

import pytest

from sqwu import em
from sqwu.relations import verify_relations


@pytest.mark.parametrize("m, cube", [(2, False), (2, True), (3, None), (4, None), (5, None)])
def test_suite_passes(m, cube):
    rep = verify_relations(m, cube)
    assert rep.passed, [(c.id, c.detail) for c in rep.failures()]


def test_m2_needs_choice():
    with pytest.raises(em.UnsupportedM):
        verify_relations(2)


def test_delta_follows_parity():
    odd = verify_relations(3).by_id("kernel.sq4a4")[0]
    even = verify_relations(4).by_id("kernel.sq4a4")[0]
    assert "d_m=1" in odd.detail and "d_m=0" in even.detail


def test_sq4a4_correction_is_flagged_parameter_dependent():
    c = verify_relations(3).by_id("cpsi.sq4a4")[0]
    assert c.passed and c.parameter_independent is False
