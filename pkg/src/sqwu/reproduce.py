"""Rebuild the four reference tables and compare them to the golden values."""

from __future__ import annotations

from typing import Any

from . import em, gf2, thom
from .cpsi import build_cpsi
from .tables import (KERNEL_WORDS, TABLE1_DIMS, TABLE4_DIMS, TABLE4_WORDS, coker_words,
                     table2_dims, table3_dims, table3_words)


def _rank_in(vectors: list[frozenset], universe: list) -> int:
    index = {x: k for k, x in enumerate(universe)}
    rows = []
    for s in vectors:
        v = 0
        for x in s:
            if x not in index:
                return -1
            v ^= 1 << index[x]
        rows.append(v)
    return gf2.rank(rows)


def table1(m: int) -> list[dict[str, Any]]:
    rows = []
    for j in range(1, 10):
        basis = em.kernel_basis(m, j)
        words = KERNEL_WORDS[j]
        images = [em.kernel_image(m, *em.parse_word(w)) for w in words]
        r = _rank_in(images, [b.monomial for b in basis])
        rows.append({"j": j, "dim": len(basis), "expected": TABLE1_DIMS[j],
                     "basis": [b.text for b in basis], "listed_basis": words,
                     "listed_basis_ok": r == len(basis) == len(words)})
    return rows


def table2(m: int, include_cube: bool = False) -> list[dict[str, Any]]:
    rows = []
    expected = table2_dims(m, include_cube)
    for j in range(2, 10):
        basis = em.coker_basis(m, j, include_cube=include_cube)
        words = coker_words(m, j, include_cube)
        images = []
        for w in words:
            K, g = em.parse_word(w)
            images.append(em.coker_word(m, K, g, include_cube))
        r = _rank_in(images, [c.factors for c in basis])
        row = {"j": j, "dim": len(basis), "expected": expected[j],
               "basis": [c.text + (" (nonstandard)" if c.nonstandard else "") for c in basis],
               "listed_basis": words, "listed_basis_ok": r == len(basis) == len(words)}
        rows.append(row)
    return rows


def table3(m: int, include_cube: bool = False) -> list[dict[str, Any]]:
    cp = build_cpsi(m, include_cube, check=False)
    expected = table3_dims(m, include_cube)
    rows = []
    for j in range(1, 10):
        basis = cp.window.basis[j]
        words = table3_words(m, j, include_cube)
        rows.append({"j": j, "dim": len(basis), "expected": expected[j], "basis": basis,
                     "listed_basis": words, "listed_basis_ok": sorted(basis) == sorted(words)})
    return rows


def table4() -> list[dict[str, Any]]:
    mw = thom.build_mspinc(check=False)
    rows = []
    for j in range(0, 9):
        basis = mw.basis[j]
        words = TABLE4_WORDS.get(j, [])
        vecs = [thom.thom_vector(mw, w)[1] for w in words]
        ok = gf2.rank(vecs) == len(basis) == len(words)
        rows.append({"j": j, "dim": len(basis), "expected": TABLE4_DIMS[j], "basis": basis,
                     "listed_basis": words, "listed_basis_ok": ok})
    return rows


def table(which: int, m: int = 3, include_cube: bool = False) -> dict[str, Any]:
    if which == 1:
        rows = table1(m)
    elif which == 2:
        rows = table2(m, include_cube)
    elif which == 3:
        rows = table3(m, include_cube)
    elif which == 4:
        rows = table4()
    else:
        raise ValueError(f"no table {which}")
    out: dict[str, Any] = {"table": which, "rows": rows}
    if which != 4:
        out = {"m": m, **out}
    if which in (2, 3) and m == 2:
        out["include_cube"] = include_cube
    return out


def first_mismatch(tab: dict[str, Any]) -> tuple[int, int] | None:
    for row in tab["rows"]:
        if row["dim"] != row["expected"] or not row["listed_basis_ok"]:
            return tab["table"], row["j"]
    return None
