"""Stiefel-Whitney polynomials, the Spin^c quotient and its Thom module.

A monomial in w_2, w_3, ... is a sorted tuple of indices, e.g. (2, 2, 4) is
w_2^2 w_4; a polynomial is a frozenset of monomials.  w_1 is identically zero
(oriented bundles).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import gf2
from .amodule import DimensionMismatch, ModuleWindow, const
from .tables import TABLE4_DIMS

WMonomial = tuple[int, ...]
Poly = frozenset

ONE: Poly = frozenset({()})
#: Thom-module degrees materialized (relative to the Thom class)
TOP = 9


def generalized_binom_mod2(n: int, t: int) -> int:
    """Parity of binom(n, t) for any integer n and t >= 0 (falling-factorial form)."""
    if t < 0:
        return 0
    if n >= 0:
        return int(n & t == t) if n >= t else 0
    # binom(-a, t) = (-1)^t binom(a + t - 1, t)
    a = -n
    return int((a + t - 1) & t == t)


def w(i: int) -> Poly:
    if i == 0:
        return ONE
    if i == 1:
        return frozenset()
    return frozenset({(i,)})


def mul(x: Iterable[WMonomial], y: Iterable[WMonomial]) -> Poly:
    out: set = set()
    for a in x:
        for b in y:
            out ^= {tuple(sorted(a + b))}
    return frozenset(out)


def add(*ps: Iterable[WMonomial]) -> Poly:
    out: set = set()
    for p in ps:
        out ^= set(p)
    return frozenset(out)


def degree(mon: WMonomial) -> int:
    return sum(mon)


@lru_cache(maxsize=None)
def sq_w(k: int, m: int) -> Poly:
    """Sq^k w_m by Wu's formula with w_1 = 0."""
    if k == 0:
        return w(m)
    if k > m or m == 1:
        return frozenset()
    out: set = set()
    for t in range(k + 1):
        if generalized_binom_mod2(k - m, t):
            out ^= set(mul(w(k - t), w(m + t)))
    return frozenset(out)


@lru_cache(maxsize=None)
def sq_monomial(k: int, mon: WMonomial) -> Poly:
    if not mon:
        return ONE if k == 0 else frozenset()
    head, rest = mon[0], mon[1:]
    out: set = set()
    for a in range(min(k, head) + 1):
        left = sq_w(a, head)
        if left:
            right = sq_monomial(k - a, rest)
            if right:
                out ^= set(mul(left, right))
    return frozenset(out)


def sq(k: int, p: Iterable[WMonomial]) -> Poly:
    out: set = set()
    for mon in p:
        out ^= set(sq_monomial(k, mon))
    return frozenset(out)


def sq_word(K: Iterable[int], p: Iterable[WMonomial]) -> Poly:
    out = frozenset(p)
    for k in reversed(tuple(K)):
        out = sq(k, out)
    return out


def monomials(d: int, allowed: Iterable[int]) -> list[WMonomial]:
    gens = sorted(set(allowed))
    out: list[WMonomial] = []

    def grow(start: int, left: int, acc: list[int]) -> None:
        if left == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            if g > left:
                break
            acc.append(g)
            grow(idx, left - g, acc)
            acc.pop()

    grow(0, d, [])
    return sorted(out, key=lambda mon: tuple(-x for x in reversed(mon)))


def spinc_ideal_generators(top: int = TOP) -> list[Poly]:
    """x_1 = w_3 and x_{r+1} = Sq^{2^r} x_r, while in degree <= top."""
    gens = [w(3)]
    r = 1
    while True:
        nxt = sq(1 << r, gens[-1])
        if not nxt or degree(next(iter(nxt))) > top:
            break
        gens.append(nxt)
        r += 1
    return gens


def is_excluded(i: int) -> bool:
    """True for w_1 and w_{2^r + 1}, the generators absent from the Spin^c ring."""
    return i == 1 or (i >= 3 and (i - 1) & (i - 2) == 0)


class SpincRing:
    """H*(BSpin^c) through degree ``top``.

    ``mode="exact"`` quotients H*(BSO) by the ideal generated by the x_r.
    ``mode="zero"`` simply sets the excluded generators to zero, which agrees
    with the exact ring only in degrees where no x_r has further terms.
    """

    def __init__(self, top: int = TOP, mode: str = "exact") -> None:
        if mode not in ("exact", "zero"):
            raise ValueError(f"unknown mode {mode!r}")
        self.top = top
        self.mode = mode
        self.all_gens = list(range(2, top + 1))
        self.basis: dict[int, list[WMonomial]] = {}
        self._echelon: dict[int, gf2.Echelon] = {}
        self._index: dict[int, dict[WMonomial, int]] = {}
        ideal = spinc_ideal_generators(top)
        for d in range(top + 1):
            mons = monomials(d, self.all_gens)
            # monomials free of excluded generators get the low bits, so they survive
            mons.sort(key=lambda mon: any(is_excluded(i) for i in mon))
            self._index[d] = {mon: k for k, mon in enumerate(mons)}
            e = gf2.Echelon()
            if mode == "exact":
                for x in ideal:
                    xd = degree(next(iter(x)))
                    if xd > d:
                        continue
                    for cof in monomials(d - xd, self.all_gens):
                        e.add(self._vec(mul({cof}, x), d))
            else:
                for mon in mons:
                    if any(is_excluded(i) for i in mon):
                        e.add(1 << self._index[d][mon])
            self._echelon[d] = e
            self.basis[d] = [mons[b] for b in range(len(mons)) if b not in e.rows]

    def _vec(self, p: Iterable[WMonomial], d: int) -> int:
        idx = self._index[d]
        v = 0
        for mon in p:
            v ^= 1 << idx[mon]
        return v

    def reduce(self, p: Iterable[WMonomial], d: int) -> Poly:
        residue, _ = self._echelon[d].reduce(self._vec(p, d))
        mons = list(self._index[d])
        return frozenset(mons[b] for b in gf2.bits(residue))

    def dim(self, d: int) -> int:
        return len(self.basis[d])


def format_poly(p: Iterable[WMonomial]) -> str:
    terms = []
    for mon in sorted(p, key=lambda mon: (degree(mon), mon)):
        if not mon:
            terms.append("1")
            continue
        parts = []
        for i in sorted(set(mon)):
            e = mon.count(i)
            parts.append(f"w{i}" + (f"^{e}" if e > 1 else ""))
        terms.append(" ".join(parts))
    return " + ".join(terms) if terms else "0"


def thom_sq(k: int, b: Iterable[WMonomial]) -> Poly:
    """Sq^k(b U) / U = sum_a Sq^a b * w_{k-a}."""
    out: set = set()
    for a in range(k + 1):
        out ^= set(mul(sq(a, b), w(k - a)))
    return frozenset(out)


def thom_sq_word(K: Iterable[int], b: Iterable[WMonomial]) -> Poly:
    out = frozenset(b)
    for k in reversed(tuple(K)):
        out = thom_sq(k, out)
    return out


NAMED = {"U": (), "U4": (2, 2), "U81": (2, 2, 2, 2), "U82": (4, 4)}


def named_class(text: str) -> Poly:
    """``"Sq4 Sq2 U"`` or ``"U4"`` as a polynomial multiple of U (unreduced)."""
    parts = text.split()
    K = [int(p[2:]) for p in parts[:-1]]
    base = NAMED[parts[-1]]
    return thom_sq_word(K, {base})


def label(mon: WMonomial) -> str:
    return (format_poly({mon}) + " U") if mon else "U"


@dataclass
class ThomWindow(ModuleWindow):
    """A ModuleWindow whose basis is monomials of ``ring`` times the Thom class."""

    ring: SpincRing | None = None


def build_mspinc(top: int = TOP, mode: str = "exact", check: bool = True) -> ThomWindow:
    """The Thom module H*(MSpin^c) on relative degrees 0..top."""
    ring = SpincRing(top, mode)
    basis = {d: [label(mon) for mon in ring.basis[d]] for d in range(top + 1)}
    if check:
        for d, expected in TABLE4_DIMS.items():
            if d <= top and ring.dim(d) != expected:
                raise DimensionMismatch(d, ring.dim(d), expected, "Thom module")
    action = {}
    for d in range(top + 1):
        for k, mon in enumerate(ring.basis[d]):
            for i in range(1, top - d + 1):
                img = ring.reduce(thom_sq(i, {mon}), d + i)
                pos = {b: n for n, b in enumerate(ring.basis[d + i])}
                v = 0
                for b in img:
                    v |= 1 << pos[b]
                action[(d, k, i)] = const(v, 0)
    return ThomWindow(basis, action, 0, ring=ring)


def thom_vector(window: ThomWindow, text: str) -> tuple[int, int]:
    """Degree and basis bitmask of a named Thom class like ``"Sq2 U4"``."""
    ring = window.ring
    p = named_class(text)
    if not p:
        parts = text.split()
        d = sum(int(x[2:]) for x in parts[:-1]) + degree(NAMED[parts[-1]])
        return d, 0
    d = degree(next(iter(p)))
    pos = {b: n for n, b in enumerate(ring.basis[d])}
    v = 0
    for b in ring.reduce(p, d):
        v |= 1 << pos[b]
    return d, v


def wu_total(top: int, ring: SpincRing | None = None) -> dict[int, Poly]:
    """Universal Wu classes v_k from w = Sq(v), i.e. v_k = w_k + sum_{i>=1} Sq^i v_{k-i}."""
    v: dict[int, Poly] = {0: ONE}
    for k in range(1, top + 1):
        acc: set = set(w(k))
        for i in range(1, k + 1):
            acc ^= set(sq(i, v[k - i]))
        p = frozenset(acc)
        v[k] = ring.reduce(p, k) if ring is not None else p
    return v
