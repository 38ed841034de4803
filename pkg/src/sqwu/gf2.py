"""GF(2) linear algebra on Python int bitsets.

A vector is an ``int`` whose bit k is the coordinate on basis element k.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def bits(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def parity(v: int) -> int:
    return bin(v).count("1") & 1


class Echelon:
    """Incremental row echelon form that remembers how each row was built.

    ``add`` returns True when the vector was independent of everything seen
    so far.  Pivots are the highest set bit, so callers steer pivot choice by
    how they assign bit positions.
    """

    def __init__(self) -> None:
        self.rows: dict[int, tuple[int, int]] = {}  # pivot -> (row, combination)
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> tuple[int, int]:
        """Return (residue free of pivot bits, combination of added vectors used)."""
        combo = 0
        out = 0
        while v:
            top = v.bit_length() - 1
            hit = self.rows.get(top)
            if hit is None:
                out |= 1 << top
                v ^= 1 << top
            else:
                v ^= hit[0]
                combo ^= hit[1]
        return out, combo

    def add(self, v: int) -> bool:
        tag = 1 << self.count
        self.count += 1
        residue, combo = self.reduce(v)
        if not residue:
            return False
        top = residue.bit_length() - 1
        self.rows[top] = (residue, combo ^ tag)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0

    def express(self, v: int) -> int | None:
        """Combination (bitmask over added vectors) summing to v, or None."""
        residue, combo = self.reduce(v)
        return None if residue else combo

    def pivots(self) -> set[int]:
        return set(self.rows)


def rank(vectors: Iterable[int]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


def in_span(v: int, vectors: Iterable[int]) -> bool:
    e = Echelon()
    for w in vectors:
        e.add(w)
    return e.contains(v)


def nullspace(vectors: Sequence[int]) -> list[int]:
    """Basis of {x : sum of vectors[i] over bits i of x == 0}."""
    e = Echelon()
    out = []
    for i, v in enumerate(vectors):
        residue, combo = e.reduce(v)
        if residue:
            top = residue.bit_length() - 1
            e.rows[top] = (residue, combo ^ (1 << i))
        else:
            out.append(combo ^ (1 << i))
        e.count += 1
    return out


def solve(rows: Sequence[int], rhs: Sequence[int], ncols: int) -> int | None:
    """Solve A x = b where row i of A is ``rows[i]`` (bits over ncols unknowns).

    Returns one solution as a bitmask, or None if inconsistent.
    """
    aug = [(r & ((1 << ncols) - 1)) | (int(b) << ncols) for r, b in zip(rows, rhs)]
    pivot_rows: list[tuple[int, int]] = []
    for row in aug:
        for col, prow in pivot_rows:
            if row >> col & 1:
                row ^= prow
        low = row & ((1 << ncols) - 1)
        if not low:
            if row >> ncols & 1:
                return None
            continue
        col = low.bit_length() - 1
        pivot_rows = [(c, p ^ row if p >> col & 1 else p) for c, p in pivot_rows]
        pivot_rows.append((col, row))
    x = 0
    for col, prow in pivot_rows:
        if prow >> ncols & 1:
            x |= 1 << col
    return x


def transpose(rows: Sequence[int], ncols: int) -> list[int]:
    cols = [0] * ncols
    for i, r in enumerate(rows):
        for c in bits(r):
            cols[c] |= 1 << i
    return cols
