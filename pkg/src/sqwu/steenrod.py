"""Arithmetic in the mod 2 Steenrod algebra.

Monomials Sq^{i_1} ... Sq^{i_k} are plain tuples of positive integers and an
element of the algebra is a ``frozenset`` of such tuples (every coefficient
is 1 over F2, so addition is symmetric difference).  The empty tuple is the
unit.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Callable, Iterable, Sequence

Monomial = tuple[int, ...]
Element = frozenset

#: largest exponent accepted anywhere; keeps runaway inputs from exhausting memory
MAX_EXPONENT = 1 << 16

ZERO: Element = frozenset()
ONE: Element = frozenset({()})


class NonAdmissibleInput(ValueError):
    pass


class OutOfAdemRange(ValueError):
    pass


class SqParseError(ValueError):
    """Raised for malformed ``Sq<k>`` text; ``position`` is the token offset."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


def binom_mod2(x: int, y: int) -> int:
    """Parity of binom(x, y); zero when an argument is negative or x < y."""
    if x < 0 or y < 0 or x < y:
        return 0
    # Lucas: binom(x, y) is odd iff the bits of y are a subset of those of x
    return int(x & y == y)


def mono(*exponents: int) -> Monomial:
    """Build a monomial, eliding Sq^0 factors."""
    out = []
    for e in exponents:
        e = int(e)
        if e < 0:
            raise ValueError(f"negative Steenrod exponent {e}")
        if e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} exceeds ceiling {MAX_EXPONENT}")
        if e:
            out.append(e)
    return tuple(out)


def degree(I: Sequence[int]) -> int:
    return sum(I)


def is_admissible(I: Sequence[int]) -> bool:
    return all(I[j] >= 2 * I[j + 1] for j in range(len(I) - 1))


def excess(I: Sequence[int]) -> int:
    """Excess 2 i_1 - d(I) of an admissible monomial."""
    if not is_admissible(I):
        raise NonAdmissibleInput(f"{tuple(I)} is not admissible")
    if not I:
        return 0
    return 2 * I[0] - sum(I)


def adem_pair(a: int, b: int) -> Element:
    """Admissible expansion of Sq^a Sq^b for 0 < a < 2b."""
    if not 0 < a < 2 * b:
        raise OutOfAdemRange(f"Sq^{a} Sq^{b} is not in the Adem range 0 < a < 2b")
    terms = set()
    for c in range(a // 2 + 1):
        if binom_mod2(b - 1 - c, a - 2 * c):
            terms ^= {mono(a + b - c, c)}
    return frozenset(terms)


def first_inadmissible(I: Sequence[int]) -> int | None:
    for j in range(len(I) - 1):
        if I[j] < 2 * I[j + 1]:
            return j
    return None


def _rewrite_once(I: Monomial, j: int) -> Element:
    out: set = set()
    for t in adem_pair(I[j], I[j + 1]):
        out ^= {I[:j] + t + I[j + 2:]}
    return frozenset(out)


@lru_cache(maxsize=None)
def _normal_monomial(I: Monomial) -> Element:
    j = first_inadmissible(I)
    if j is None:
        return frozenset({I})
    out: set = set()
    for t in _rewrite_once(I, j):
        out ^= _normal_monomial(t)
    return frozenset(out)


def normalize(e: Iterable[Sequence[int]] | Sequence[int]) -> Element:
    """Admissible normal form of an element (or of a single monomial).

    Rewrites the leftmost inadmissible pair first; the cache is keyed by the
    exponent tuple and is only an accelerator.
    """
    if isinstance(e, tuple) and all(isinstance(x, int) for x in e):
        return _normal_monomial(mono(*e))
    out: set = set()
    for I in e:
        out ^= _normal_monomial(mono(*I))
    return frozenset(out)


def normalize_with(e: Iterable[Sequence[int]], choose: Callable[[list[int]], int]) -> Element:
    """Normal form using ``choose`` to pick which inadmissible pair to rewrite.

    Uncached; exists so confluence can be tested against ``normalize``.
    """
    todo = [mono(*I) for I in e]
    out: set = set()
    while todo:
        I = todo.pop()
        bad = [j for j in range(len(I) - 1) if I[j] < 2 * I[j + 1]]
        if not bad:
            out ^= {I}
            continue
        todo.extend(_rewrite_once(I, choose(bad)))
    return frozenset(out)


def add(*elements: Iterable[Monomial]) -> Element:
    out: set = set()
    for e in elements:
        out ^= set(e)
    return frozenset(out)


def compose(x: Iterable[Monomial], y: Iterable[Monomial]) -> Element:
    """Product x*y in the Steenrod algebra, in normal form."""
    out: set = set()
    for I in x:
        for J in y:
            out ^= _normal_monomial(tuple(I) + tuple(J))
    return frozenset(out)


def admissible_monomials(d: int, max_first: int | None = None) -> list[Monomial]:
    """All admissible monomials of degree d, in descending lex order."""
    return list(_admissible(d, d if max_first is None else max_first))


@lru_cache(maxsize=None)
def _admissible(d: int, cap: int) -> tuple[Monomial, ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, cap), 0, -1):
        for rest in _admissible(d - first, first // 2):
            out.append((first,) + rest)
    return tuple(out)


def term_key(I: Monomial) -> tuple:
    return (sum(I), I)


def sorted_terms(e: Iterable[Monomial]) -> list[Monomial]:
    return sorted(e, key=term_key, reverse=True)


def format_monomial(I: Sequence[int]) -> str:
    return " ".join(f"Sq{i}" for i in I) if I else "1"


def format_element(e: Iterable[Monomial]) -> str:
    terms = sorted_terms(e)
    if not terms:
        return "0"
    return " + ".join(format_monomial(I) for I in terms)


_TOKEN = re.compile(r"\S+")


def parse(text: str) -> Element:
    """Parse ``Sq4 Sq2 Sq9 + Sq1`` style text (``0`` and ``1`` allowed as terms).

    The result is the formal sum, not yet normalized.
    """
    terms: list[list[int]] = [[]]
    seen_factor = [False]
    for match in _TOKEN.finditer(text):
        tok, pos = match.group(), match.start()
        if tok == "+":
            if not seen_factor[-1]:
                raise SqParseError("empty term", tok, pos)
            terms.append([])
            seen_factor.append(False)
            continue
        m = re.fullmatch(r"Sq\^?\{?(-?\d+)\}?", tok)
        if m is None:
            if tok in ("0", "1") and not seen_factor[-1]:
                seen_factor[-1] = True
                if tok == "0":
                    terms[-1] = None  # type: ignore[call-overload]
                continue
            raise SqParseError("unrecognized token", tok, pos)
        k = int(m.group(1))
        if k <= 0:
            raise SqParseError("exponent must be positive", tok, pos)
        if k > MAX_EXPONENT:
            raise SqParseError("exponent exceeds ceiling", tok, pos)
        if terms[-1] is None:
            raise SqParseError("factor after literal 0", tok, pos)
        terms[-1].append(k)
        seen_factor[-1] = True
    if not seen_factor[-1]:
        raise SqParseError("empty expression" if len(terms) == 1 else "trailing '+'", text, len(text))
    out: set = set()
    for t in terms:
        if t is not None:
            out ^= {tuple(t)}
    return frozenset(out)
