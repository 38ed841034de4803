"""Graded modules over the Steenrod algebra in a finite degree window.

Vectors carry unknown F2 parameters affinely: an ``Affine`` is a tuple
``(base, q_1, ..., q_P)`` of bitsets meaning ``base + sum_k p_k q_k``.  The
machinery never multiplies two distinct parameters; if a computation would,
it raises ``ParameterNonlinearity`` rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import gf2
from . import steenrod as st
from .steenrod import Monomial

Affine = tuple[int, ...]
Word = tuple[Monomial, str]


class DimensionMismatch(ValueError):
    def __init__(self, degree: int, got: int, expected: int, what: str = "window"):
        super().__init__(f"{what}: dimension {got} at degree {degree}, expected {expected}")
        self.degree = degree
        self.got = got
        self.expected = expected


class WindowExceeded(ValueError):
    pass


class ParameterNonlinearity(ArithmeticError):
    pass


class ParameterDependentRank(ArithmeticError):
    pass


def zero(nparams: int) -> Affine:
    return (0,) * (nparams + 1)


def const(v: int, nparams: int) -> Affine:
    return (v,) + (0,) * nparams


def is_zero(v: Affine) -> bool:
    return not any(v)


def is_constant(v: Affine) -> bool:
    return not any(v[1:])


def xor(a: Affine, b: Affine) -> Affine:
    return tuple(x ^ y for x, y in zip(a, b))


def support(v: Affine) -> int:
    out = 0
    for x in v:
        out |= x
    return out


def scale(coeff: Affine, v: Affine) -> Affine:
    """Product of an affine scalar (tuple of bits) with an affine vector."""
    c0, cs = coeff[0], coeff[1:]
    out = list(v) if c0 else [0] * len(v)
    if any(cs):
        if not is_constant(v):
            live = [k for k, c in enumerate(cs) if c]
            vq = [k for k, q in enumerate(v[1:]) if q]
            if any(k != l for k in live for l in vq):
                raise ParameterNonlinearity("product of two distinct parameters")
        for k, c in enumerate(cs):
            if c:
                # p_k * (b + p_k q_k) = p_k (b + q_k)
                out[k + 1] ^= v[0] ^ v[k + 1]
    return tuple(out)


def coefficient(v: Affine, bit: int) -> Affine:
    return tuple((x >> bit) & 1 for x in v)


def evaluate(v: Affine, assignment: int) -> int:
    """Specialize the parameters (bit k of ``assignment`` is p_{k+1})."""
    out = v[0]
    for k, q in enumerate(v[1:]):
        if assignment >> k & 1:
            out ^= q
    return out


class AffineEchelon:
    """Row echelon form for affine vectors whose pivots do not depend on parameters."""

    def __init__(self, nparams: int) -> None:
        self.nparams = nparams
        self.rows: dict[int, Affine] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Affine) -> Affine:
        v = tuple(v)
        while True:
            hits = [b for b in gf2.bits(support(v)) if b in self.rows]
            if not hits:
                return v
            top = max(hits)
            # pivot rows carry nothing above their pivot, so this terminates
            v = xor(v, scale(coefficient(v, top), self.rows[top]))

    def add(self, v: Affine) -> bool:
        r = self.reduce(v)
        if is_zero(r):
            return False
        top = support(r).bit_length() - 1
        if not (r[0] >> top & 1) or any(q >> top & 1 for q in r[1:]):
            raise ParameterDependentRank(f"leading coefficient at bit {top} depends on parameters")
        self.rows[top] = r
        return True


def free_act(i: int, word: Word) -> frozenset:
    """Sq^i on the free-module word Sq^I g, as a set of words."""
    I, g = word
    if i == 0:
        return frozenset({word})
    return frozenset((J, g) for J in st.normalize((i,) + I))


def free_act_word(K: Sequence[int], words: Iterable[Word]) -> frozenset:
    out = frozenset(words)
    for i in reversed(tuple(K)):
        nxt: set = set()
        for w in out:
            nxt ^= free_act(i, w)
        out = frozenset(nxt)
    return out


def format_word(word: Word) -> str:
    I, g = word
    return " ".join([f"Sq{k}" for k in I] + [g])


def parse_word(text: str) -> Word:
    parts = text.split()
    if not parts:
        raise ValueError("empty word")
    ops = []
    for p in parts[:-1]:
        if not p.startswith("Sq"):
            raise ValueError(f"bad operation {p!r} in {text!r}")
        ops.append(int(p[2:]))
    return st.mono(*ops), parts[-1]


def parse_free(text: str) -> frozenset:
    """``"Sq4 a4 + Sq7 a1"`` -> set of normalized words."""
    out: set = set()
    for term in text.split("+"):
        K, g = parse_word(term.strip())
        out ^= free_act_word(K, {((), g)})
    return frozenset(out)


@dataclass
class Relation:
    degree: int
    base: frozenset
    params: tuple = ()
    name: str = ""


class PresentedModule:
    """Free module on named generators modulo A-submodules of relations.

    ``closed`` relations are taken as-is in their degree (the caller promises
    their span is already closed under the action); ``relations`` are
    multiplied by every admissible Sq^I that fits in the window.

    ``order(word)`` fixes bit positions within a degree; pivots are the
    highest bits, so words the caller wants as quotient basis should sort first.
    """

    def __init__(self, generators: dict[str, int], top: int, nparams: int = 0,
                 order: Callable[[Word], tuple] | None = None) -> None:
        self.generators = dict(generators)
        self.top = top
        self.nparams = nparams
        self.order = order or (lambda w: (st.degree(w[0]) + self.generators[w[1]], w[1], w[0]))
        self.words: dict[int, list[Word]] = {}
        self.index: dict[int, dict[Word, int]] = {}
        for d in range(0, top + 1):
            ws = [(I, g) for g, gd in self.generators.items() if gd <= d
                  for I in st.admissible_monomials(d - gd)]
            ws.sort(key=self.order)
            self.words[d] = ws
            self.index[d] = {w: k for k, w in enumerate(ws)}
        self.closed: list[Relation] = []
        self.relations: list[Relation] = []
        self._echelons: dict[int, AffineEchelon] | None = None

    def word_degree(self, word: Word) -> int:
        return st.degree(word[0]) + self.generators[word[1]]

    def vector(self, words: Iterable[Word], d: int) -> int:
        idx = self.index[d]
        v = 0
        for w in words:
            v ^= 1 << idx[w]
        return v

    def affine(self, base: Iterable[Word], params: Sequence[Iterable[Word]], d: int) -> Affine:
        parts = [self.vector(base, d)] + [0] * self.nparams
        for k, p in enumerate(params):
            parts[k + 1] = self.vector(p, d)
        return tuple(parts)

    def words_of(self, v: int, d: int) -> list[Word]:
        return [self.words[d][b] for b in gf2.bits(v)]

    def add_closed(self, rel: Relation) -> None:
        self.closed.append(rel)
        self._echelons = None

    def add_relation(self, rel: Relation) -> None:
        self.relations.append(rel)
        self._echelons = None

    def relation_vectors(self, d: int) -> list[Affine]:
        out = []
        for rel in self.closed:
            if rel.degree == d:
                out.append(self.affine(rel.base, rel.params, d))
        for rel in self.relations:
            if rel.degree > d:
                continue
            for K in st.admissible_monomials(d - rel.degree):
                base = free_act_word(K, rel.base)
                params = [free_act_word(K, p) for p in rel.params]
                out.append(self.affine(base, params, d))
        return out

    def echelon(self, d: int) -> AffineEchelon:
        if self._echelons is None:
            self._echelons = {}
        if d not in self._echelons:
            e = AffineEchelon(self.nparams)
            for v in self.relation_vectors(d):
                e.add(v)
            self._echelons[d] = e
        return self._echelons[d]

    def quotient_bits(self, d: int) -> list[int]:
        piv = self.echelon(d).rows
        return [b for b in range(len(self.words[d])) if b not in piv]

    def dim(self, d: int) -> int:
        return len(self.words[d]) - self.echelon(d).rank

    def reduce(self, v: Affine, d: int) -> Affine:
        return self.echelon(d).reduce(v)

    def to_window(self, labels: dict[int, list[Word]] | None = None) -> "ModuleWindow":
        """Quotient as a ModuleWindow on the non-pivot words."""
        degrees = [d for d in range(self.top + 1) if self.words[d]]
        basis: dict[int, list[str]] = {}
        positions: dict[int, list[int]] = {}
        for d in degrees:
            qb = self.quotient_bits(d)
            positions[d] = qb
            basis[d] = [format_word(self.words[d][b]) for b in qb]
        action: dict[tuple[int, int, int], Affine] = {}
        for d in degrees:
            for k, b in enumerate(positions[d]):
                w = self.words[d][b]
                for i in range(1, self.top - d + 1):
                    if d + i not in positions:
                        continue
                    img = free_act(i, w)
                    v = self.reduce(self.affine(img, [], d + i), d + i)
                    action[(d, k, i)] = _compress(v, positions[d + i])
        return ModuleWindow(basis, action, self.nparams)

    def element(self, text: str) -> tuple[int, Affine]:
        """Reduce a free-module expression to the quotient (in word bits)."""
        words = parse_free(text)
        if not words:
            raise ValueError(f"{text!r} is zero in the free module")
        d = self.word_degree(next(iter(words)))
        return d, self.reduce(self.affine(words, [], d), d)


def _compress(v: Affine, positions: Sequence[int]) -> Affine:
    """Re-index bits listed in ``positions`` to 0..len-1 (others must be clear)."""
    where = {b: k for k, b in enumerate(positions)}
    out = []
    for x in v:
        y = 0
        for b in gf2.bits(x):
            y |= 1 << where[b]
        out.append(y)
    return tuple(out)


@dataclass
class ModuleWindow:
    """Finite graded F2 module with a Steenrod action table.

    ``action[(d, k, i)]`` is Sq^i of basis element k in degree d, an affine
    vector over the basis of degree d + i.  Missing entries with i > 0 are zero.
    """

    basis: dict[int, list[str]]
    action: dict[tuple[int, int, int], Affine]
    nparams: int = 0
    parameter_names: list[str] = field(default_factory=list)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.basis)

    @property
    def top(self) -> int:
        return max(self.basis)

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, []))

    def dims(self, degrees: Iterable[int]) -> list[int]:
        return [self.dim(d) for d in degrees]

    def zero(self) -> Affine:
        return zero(self.nparams)

    def basis_vector(self, d: int, label: str) -> Affine:
        return const(1 << self.basis[d].index(label), self.nparams)

    def act(self, i: int, d: int, v: Affine) -> Affine:
        if i == 0:
            return tuple(v)
        if d + i not in self.basis:
            if d + i > self.top:
                raise WindowExceeded(f"Sq{i} from degree {d} leaves the window")
            return self.zero()
        out = self.zero()
        for k in gf2.bits(support(v)):
            img = self.action.get((d, k, i))
            if img is None or is_zero(img):
                continue
            out = xor(out, scale(coefficient(v, k), img))
        return out

    def act_word(self, K: Sequence[int], d: int, v: Affine) -> Affine:
        for i in reversed(tuple(K)):
            v = self.act(i, d, v)
            d += i
        return v

    def format(self, d: int, v: Affine) -> str:
        labels = self.basis.get(d, [])

        def part(x: int) -> str:
            terms = [labels[b] for b in gf2.bits(x)]
            return " + ".join(terms) if terms else "0"

        terms = [part(v[0])] if v[0] else []
        for k, q in enumerate(v[1:]):
            if q:
                name = self.parameter_names[k] if k < len(self.parameter_names) else f"p{k + 1}"
                terms.append(f"{name}*({part(q)})")
        return " + ".join(terms) if terms else "0"

    def adem_failures(self, span: int | None = None) -> list[tuple[int, int, int, int]]:
        """(degree, basis index, a, b) where Sq^a Sq^b disagrees with its Adem expansion."""
        bad = []
        top = self.top
        for d in self.degrees:
            for k in range(self.dim(d)):
                v = const(1 << k, self.nparams)
                for total in range(2, top - d + 1):
                    if span is not None and total > span:
                        break
                    for b in range(1, total):
                        a = total - b
                        if not a < 2 * b:
                            continue
                        lhs = self.act(a, d + b, self.act(b, d, v))
                        rhs = self.zero()
                        for J in st.adem_pair(a, b):
                            rhs = xor(rhs, self.act_word(J, d, v))
                        if lhs != rhs:
                            bad.append((d, k, a, b))
        return bad

    def span_of(self, generators: Iterable[tuple[int, Affine]], d: int) -> list[Affine]:
        """Images Sq^K g landing in degree d for the given (degree, vector) generators."""
        out = []
        for gd, g in generators:
            if gd > d:
                continue
            for K in st.admissible_monomials(d - gd):
                out.append(self.act_word(K, gd, g))
        return out


def smash(left: ModuleWindow, right: ModuleWindow, top: int) -> ModuleWindow:
    """Tensor product with the Cartan action, truncated at degree ``top``.

    ``left`` must be parameter-free.
    """
    if left.nparams:
        raise ValueError("left factor must be parameter-free")
    nparams = right.nparams
    basis: dict[int, list[str]] = {}
    pairs: dict[int, list[tuple[int, int, int, int]]] = {}
    for d in range(top + 1):
        items = []
        for a in left.degrees:
            b = d - a
            if b not in right.basis:
                continue
            for i in range(left.dim(a)):
                for j in range(right.dim(b)):
                    items.append((a, i, b, j))
        if items:
            pairs[d] = items
            basis[d] = [f"{left.basis[a][i]} . {right.basis[b][j]}" for a, i, b, j in items]
    index = {d: {p: k for k, p in enumerate(items)} for d, items in pairs.items()}
    action: dict[tuple[int, int, int], Affine] = {}
    for d, items in pairs.items():
        for k, (a, i, b, j) in enumerate(items):
            for s in range(1, top - d + 1):
                out = zero(nparams)
                for t in range(s + 1):
                    if a + t > left.top or b + s - t > right.top:
                        continue
                    x = left.act(t, a, const(1 << i, 0))[0]
                    if not x:
                        continue
                    y = right.act(s - t, b, const(1 << j, nparams))
                    if is_zero(y):
                        continue
                    for ii in gf2.bits(x):
                        parts = []
                        for q in y:
                            z = 0
                            for jj in gf2.bits(q):
                                z |= 1 << index[d + s][(a + t, ii, b + s - t, jj)]
                            parts.append(z)
                        out = xor(out, tuple(parts))
                action[(d, k, s)] = out
    return ModuleWindow(basis, action, nparams, list(right.parameter_names))


def tensor_vector(left: ModuleWindow, ld: int, x: int, right: ModuleWindow,
                  rd: int, y: Affine, target: ModuleWindow) -> Affine:
    """The vector x (x) y in ``target`` = smash(left, right)."""
    labels = {lab: k for k, lab in enumerate(target.basis[ld + rd])}
    out = []
    for q in y:
        z = 0
        for ii in gf2.bits(x):
            for jj in gf2.bits(q):
                z |= 1 << labels[f"{left.basis[ld][ii]} . {right.basis[rd][jj]}"]
        out.append(z)
    return tuple(out)
