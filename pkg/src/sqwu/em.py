"""Unstable cohomology of K(Z/2, n) and the suspension map into it.

A polynomial generator Sq^J l_n (J admissible, excess < n) is labelled by the
tuple J; a monomial in the generators is a sorted tuple of such labels and a
class is a frozenset of monomials.  The stable classes Sq^I l_r live in the
Steenrod algebra itself, so the kernel side is handled with ``steenrod``.

Degrees here are relative: a kernel class of degree 4m+j is reported with
its j, and r (the large stable dimension) never appears.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from . import steenrod as st
from .steenrod import Monomial
from .tables import COKER_WORDS, KERNEL_WORDS

EMMonomial = tuple[Monomial, ...]
EMClass = frozenset

#: largest j for which the tables are cross-checked against reference values
REFERENCE_WINDOW = 9


class WindowExceeded(ValueError):
    pass


class StabilityViolation(ValueError):
    pass


class UnsupportedM(ValueError):
    pass


def generator_degree(J: Monomial, n: int) -> int:
    return n + st.degree(J)


def monomial_degree(mon: EMMonomial, n: int) -> int:
    return sum(generator_degree(J, n) for J in mon)


def _gen_key(J: Monomial) -> tuple:
    return (st.degree(J), tuple(-x for x in J))


def canonical(mon: Iterable[Monomial]) -> EMMonomial:
    return tuple(sorted(mon, key=_gen_key))


def times(x: EMClass, y: EMClass) -> EMClass:
    out: set = set()
    for a in x:
        for b in y:
            out ^= {canonical(a + b)}
    return frozenset(out)


def generator(J: Monomial = ()) -> EMClass:
    return frozenset({(tuple(J),)})


@lru_cache(maxsize=None)
def evaluate(I: Monomial, n: int) -> EMClass:
    """Sq^I l_n for admissible I, written in the polynomial generators."""
    if not I:
        return generator(())
    e = st.excess(I)
    if e < n:
        return generator(I)
    if e == n:
        inner = evaluate(I[1:], n)
        return times(inner, inner)
    return frozenset()


@lru_cache(maxsize=None)
def _sq_generator(i: int, J: Monomial, n: int) -> EMClass:
    if i == 0:
        return generator(J)
    d = generator_degree(J, n)
    if i > d:
        return frozenset()
    if i == d:
        return frozenset({canonical((J, J))})
    out: set = set()
    for I in st.normalize((i,) + J):
        out ^= evaluate(I, n)
    return frozenset(out)


@lru_cache(maxsize=None)
def _sq_monomial(i: int, mon: EMMonomial, n: int) -> EMClass:
    if not mon:
        return frozenset({()}) if i == 0 else frozenset()
    head, rest = mon[0], mon[1:]
    out: set = set()
    for a in range(i + 1):
        left = _sq_generator(a, head, n)
        if not left:
            continue
        right = _sq_monomial(i - a, rest, n)
        if right:
            out ^= times(left, right)
    return frozenset(out)


def unstable_act(i: int, x: Iterable[EMMonomial], n: int) -> EMClass:
    """Sq^i on a class of H*(K(Z/2, n)) via the Cartan formula."""
    out: set = set()
    for mon in x:
        out ^= _sq_monomial(i, canonical(mon), n)
    return frozenset(out)


def act_word(K: Monomial, x: Iterable[EMMonomial], n: int) -> EMClass:
    out = frozenset(x)
    for i in reversed(K):
        out = unstable_act(i, out, n)
    return out


def em_generators(n: int, d: int) -> list[Monomial]:
    """Labels J of the polynomial generators of degree exactly d."""
    if d < n:
        return []
    return [J for J in st.admissible_monomials(d - n) if st.excess(J) < n]


def em_basis(n: int, d: int, ceiling: int | None = None) -> list[EMMonomial]:
    """All monomials of degree d in the polynomial generators of H*(K(Z/2, n))."""
    if n <= 0:
        raise ValueError("n must be positive")
    if ceiling is not None and d > ceiling:
        raise WindowExceeded(f"degree {d} exceeds window ceiling {ceiling}")
    gens = [J for k in range(n, d + 1) for J in em_generators(n, k)]
    gens.sort(key=_gen_key)
    out: list[EMMonomial] = []

    def grow(start: int, remaining: int, acc: list[Monomial]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            gd = generator_degree(g, n)
            if gd > remaining:
                continue
            acc.append(g)
            grow(idx, remaining - gd, acc)
            acc.pop()

    if d == 0:
        return [()]
    grow(0, d, [])
    return sorted(out, key=lambda mon: [_gen_key(J) for J in mon])


def psi_star(I: Monomial, m: int, r: int | None = None) -> EMClass:
    """Image of Sq^I l_r under the suspension map, desuspended into degree 4m.

    Zero exactly when excess(I) > 4m.  ``r`` is optional; when supplied it
    must be in the stable range.
    """
    I = st.mono(*I)
    if r is not None and r <= st.degree(I):
        raise StabilityViolation(f"r={r} is not above degree {st.degree(I)}")
    return evaluate(I, 4 * m)


# -- the kernel of the suspension map -------------------------------------


def alpha(m: int, k: int) -> Monomial:
    """alpha_k = Sq^{4m+k} l_r for k in {1, 2, 4, 8}."""
    return (4 * m + k,)


@dataclass(frozen=True)
class KernelBasisElement:
    monomial: Monomial
    j: int
    label: str

    @property
    def text(self) -> str:
        return st.format_monomial(self.monomial)


ALPHA_DEGREES = {"a1": 1, "a2": 2, "a4": 4, "a8": 8}
GAMMA_DEGREES = {f"g{j}": j for j in range(2, 10)} | {"g71": 7, "g81": 8, "g91": 9}


def parse_word(text: str) -> tuple[Monomial, str]:
    """``"Sq4 Sq2 a1"`` -> ((4, 2), "a1")."""
    parts = text.split()
    if not parts:
        raise ValueError("empty word")
    ops = []
    for p in parts[:-1]:
        if not p.startswith("Sq"):
            raise ValueError(f"bad operation {p!r} in {text!r}")
        ops.append(int(p[2:]))
    return st.mono(*ops), parts[-1]


def format_word(K: Monomial, g: str) -> str:
    return " ".join([f"Sq{k}" for k in K] + [g])


def _kernel_label(m: int, I: Monomial) -> str:
    for k in (1, 2, 4, 8):
        if I == alpha(m, k):
            return f"a{k}"
    j = st.degree(I) - 4 * m
    for word in KERNEL_WORDS.get(j, []):
        K, g = parse_word(word)
        if st.normalize(K + alpha(m, int(g[1:]))) == frozenset({I}):
            return word
    return f"{st.format_monomial(I)} l_r"


def _check_window(j: int, window: int) -> None:
    if j > window:
        raise WindowExceeded(f"j={j} exceeds window {window}")
    if j > REFERENCE_WINDOW:
        warnings.warn(f"j={j} is beyond the range with reference cross-checks", stacklevel=3)


def kernel_basis(m: int, j: int, window: int = REFERENCE_WINDOW) -> list[KernelBasisElement]:
    """Admissible I of degree 4m+j with excess > 4m, descending lex."""
    if m < 2:
        raise UnsupportedM("m must be at least 2")
    _check_window(j, window)
    out = []
    for I in st.admissible_monomials(4 * m + j):
        if st.excess(I) > 4 * m:
            out.append(KernelBasisElement(I, j, _kernel_label(m, I)))
    return out


def kernel_image(m: int, K: Monomial, g: str) -> st.Element:
    """The stable class Sq^K alpha_g as an element of the Steenrod algebra."""
    return st.normalize(tuple(K) + alpha(m, int(g[1:])))


# -- the cokernel ----------------------------------------------------------


@dataclass(frozen=True)
class CokerBasisElement:
    factors: EMMonomial
    j: int
    label: str
    nonstandard: bool = field(default=False)

    @property
    def text(self) -> str:
        return " * ".join(f"{st.format_monomial(J)} l" if J else "l" for J in self.factors)


def _pair_label(factors: EMMonomial) -> str | None:
    if len(factors) != 2 or factors[0] != ():
        return None
    J = factors[1]
    if len(J) == 1:
        return f"g{J[0] + 1}"
    if len(J) == 2 and J[1] == 1:
        return f"g{J[0] + 2}1"
    return None


def coker_basis(m: int, j: int, include_cube: bool | None = None,
                window: int = REFERENCE_WINDOW) -> list[CokerBasisElement]:
    """Basis of the cokernel of the suspension map in relative degree j.

    Pairs of distinct polynomial generators of K(Z/2, 4m) whose operations
    have total degree j-1.  For m = 2 the cube l^3 also lands in j = 9, so
    there the caller must choose: ``include_cube=False`` drops it (the
    default convention), ``True`` appends it flagged as nonstandard.
    """
    if m < 2:
        raise UnsupportedM("m must be at least 2")
    _check_window(j, window)
    if include_cube is None:
        if _cube_in_window(m, j):
            raise UnsupportedM(f"m={m}, j={j} contains the cube l^3; pass include_cube explicitly")
        include_cube = False
    n = 4 * m
    out = []
    if j < 2:
        return out
    total = j - 1
    gens = {d: em_generators(n, n + d) for d in range(total + 1)}
    for d1 in range(total // 2 + 1):
        d2 = total - d1
        if d1 < d2:
            pairs = [(a, b) for a in gens[d1] for b in gens[d2]]
        else:
            pairs = list(combinations(gens[d1], 2))
        for a, b in pairs:
            f = canonical((a, b))
            out.append(CokerBasisElement(f, j, _pair_label(f) or ""))
    out.sort(key=lambda c: [_gen_key(J) for J in c.factors])
    if include_cube:
        for mon in em_basis(n, 2 * n + total):
            if len(mon) == 3:
                out.append(CokerBasisElement(mon, j, "l^3" if mon == ((),) * 3 else "", nonstandard=True))
    return out


def _cube_in_window(m: int, j: int) -> bool:
    # l^3 sits in relative degree 4m + 1; only m = 2 reaches it for j <= 9
    return j == 4 * m + 1


def project_coker(x: Iterable[EMMonomial], include_cube: bool = False) -> EMClass:
    """Drop monomials in the image of the suspension map (g^(2^k)) and, unless
    asked otherwise, monomials of polynomial degree three or more."""
    out: set = set()
    for mon in x:
        if len(set(mon)) == 1 and len(mon) & (len(mon) - 1) == 0:
            continue
        if len(mon) >= 3 and not include_cube:
            continue
        out ^= {mon}
    return frozenset(out)


def gamma_class(m: int, name: str) -> EMClass:
    """gamma_j = l * Sq^{j-1} l and gamma_{j1} = l * Sq^{j-2} Sq^1 l (unprojected)."""
    n = 4 * m
    if len(name) == 3:
        j = int(name[1])
        J = (j - 2, 1)
    else:
        j = int(name[1:])
        J = (j - 1,)
    return times(generator(()), evaluate(J, n))


def coker_act(i: int, c: Iterable[EMMonomial], m: int, include_cube: bool = False) -> EMClass:
    """Sq^i on a cokernel class (pairs of generators), projected to the cokernel."""
    return project_coker(unstable_act(i, c, 4 * m), include_cube)


def coker_word(m: int, K: Monomial, g: str, include_cube: bool = False) -> EMClass:
    out = project_coker(gamma_class(m, g), include_cube)
    for i in reversed(K):
        out = coker_act(i, out, m, include_cube)
    return out


def format_class(x: Iterable[EMMonomial]) -> str:
    mons = sorted(x, key=lambda mon: [_gen_key(J) for J in mon])
    if not mons:
        return "0"
    parts = []
    for mon in mons:
        if not mon:
            parts.append("1")
            continue
        parts.append(" * ".join(f"({st.format_monomial(J)} l)" if J else "l" for J in mon))
    return " + ".join(parts)
