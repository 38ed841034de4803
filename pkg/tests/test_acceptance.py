"""Acceptance criteria 1-10; each prints one PASS/FAIL line with its runtime.

Run directly (``python tests/test_acceptance.py``) or under pytest; the lines are
printed even when pytest captures output.
"""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import pytest

from sqwu import corpus, pd
from sqwu import steenrod as st
from sqwu.fmap import verify_fxi
from sqwu.relations import adem_identities, reduction_identities, verify_relations
from sqwu.report import VerificationReport
from sqwu.reproduce import first_mismatch, table
from sqwu.suites import verify_wu
from sqwu.tables import TABLE1_DIMS, TABLE2_DIMS, TABLE2_DIMS_M2, TABLE3_DIMS, TABLE4_DIMS

HERE = Path(__file__).resolve().parent


def _dims(tab: dict) -> dict[int, int]:
    return {row["j"]: row["dim"] for row in tab["rows"]}


def c1() -> tuple[bool, str]:
    rep = VerificationReport("adem")
    adem_identities(rep)
    return rep.passed, f"{len(rep.checks)} identities"


def c2() -> tuple[bool, str]:
    ok = all(_dims(table(1, m)) == TABLE1_DIMS and first_mismatch(table(1, m)) is None for m in (3, 4, 5))
    return ok, "m = 3, 4, 5"


def c3() -> tuple[bool, str]:
    want = {j: TABLE2_DIMS[j] for j in range(2, 10)}
    ok = all(_dims(table(2, m)) == want and first_mismatch(table(2, m)) is None for m in (3, 4, 5))
    m2 = table(2, 2, include_cube=False)
    ok_m2 = _dims(m2) == {j: TABLE2_DIMS_M2[j] for j in range(2, 10)} and first_mismatch(m2) is None
    return ok and ok_m2, f"m = 3, 4, 5; m = 2 row 9 = {_dims(m2)[9]} without the cube"


def c4() -> tuple[bool, str]:
    t3, t4 = table(3, 3), table(4)
    ok = (_dims(t3) == TABLE3_DIMS and _dims(t4) == TABLE4_DIMS
          and first_mismatch(t3) is None and first_mismatch(t4) is None)
    return ok, "dims and listed bases"


def c5() -> tuple[bool, str]:
    reps = [verify_relations(2, False), verify_relations(3), verify_relations(4)]
    fails = [c.id for r in reps for c in r.failures()]
    n = sum(len(r.checks) for r in reps)
    return not fails, f"{n} checks over m = 2, 3, 4" + (f"; failing {fails[:4]}" if fails else "")


def c6() -> tuple[bool, str]:
    rep = verify_fxi(3)
    ids = {c.id for c in rep.checks}
    flagged = all(c.parameter_independent is not None for c in rep.checks)
    ok = rep.passed and ids == {"fxi.xi_in_kernel", "fxi.surjectivity", "fxi.kernel"} and flagged
    indep = all(c.parameter_independent for c in rep.checks)
    return ok, f"{len(rep.checks)} checks, parameter-independent: {indep}"


def c7() -> tuple[bool, str]:
    rep = VerificationReport("reduction")
    reduction_identities(rep)
    return rep.passed and len(rep.checks) == 9, f"{len(rep.checks)} identities"


def c8() -> tuple[bool, str]:
    ok = True
    for n in range(1, 11):
        a = corpus.rp(n)
        prof = pd.wu_classes(a)
        x = a.generator("x")
        for k in range(n + 1):
            direct = a.evaluate(a.sq(k, a.power(x, n - k)))
            ok &= prof.v[k] == (a.power(x, k) if direct else 0)
        w = 0
        for k in range(n + 1):
            if st.binom_mod2(n + 1, k):
                w ^= a.power(x, k)
        ok &= prof.total_w() == w
    h = corpus.hp2()
    ok &= pd.wu_classes(h).total_v() == h.one() ^ h.generator("u")
    rep = verify_wu()
    mult = rep.by_id("wu.multiplicative")
    v12 = rep.by_id("wu.v12_product")
    ok &= rep.passed and bool(mult) and bool(v12)
    return ok, f"{len(mult)} product pairs, {len(v12)} eighteen-dimensional factors"


def c9() -> tuple[bool, str]:
    count, ok = 0, True
    for a in corpus.load_all().values():
        if not a.spinc:
            continue
        count += 1
        ok &= pd.check_v2k(a).passed and pd.check_bsqv(a).passed
    return ok, f"{count} spin^c algebras"


def c10() -> tuple[bool, str]:
    selection = [
        "tests/test_steenrod.py",
        "tests/test_gf2.py",
        "tests/test_pd.py::test_zero_fundamental_is_rejected",
        "tests/test_pd.py::test_non_poincare_algebra_is_rejected",
        "tests/test_report.py::test_byte_stable",
    ]
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *selection],
                          cwd=HERE.parent, capture_output=True, text=True)
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    return proc.returncode == 0, tail


CRITERIA = [
    (1, "Adem identity suite", c1, 1.0),
    (2, "kernel table dims", c2, 1.0),
    (3, "cokernel table dims", c3, 1.0),
    (4, "mapping-cone and Thom tables", c4, 5.0),
    (5, "relation suite", c5, 10.0),
    (6, "f* surjectivity and kernel", c6, 60.0),
    (7, "reduction identities", c7, 1.0),
    (8, "Wu oracle suite", c8, 10.0),
    (9, "Sq1 v2k and Sq3 v4n on spin^c corpus", c9, 5.0),
    (10, "property suites", c10, 60.0),
]


def evaluate(number: int, name: str, fn, limit: float) -> tuple[bool, str]:
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    line = (f"criterion {number:>2} {'PASS' if ok and within else 'FAIL'}  {name}: {detail}"
            f"  [{elapsed:.2f}s, limit {limit:g}s]")
    return ok and within, line


@pytest.mark.parametrize("number, name, fn, limit", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, name, fn, limit, capsys):
    ok, line = evaluate(number, name, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
