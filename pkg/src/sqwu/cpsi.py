"""The mapping-cone module: stable kernel generators a1, a2, a4, a8 glued to
the cokernel generators g2..g9, g71, g81, g91 through pinned relations.

The Sq^4 a4 relation is only known up to an element of the cokernel in
degree 8; that element is carried as thirteen unknown parameters, one per
basis word of that row.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import em
from . import gf2
from . import steenrod as st
from .amodule import (DimensionMismatch, ModuleWindow, PresentedModule, Relation,
                      format_word, free_act_word, parse_free, parse_word)
from .tables import COKER_WORDS, table3_dims, table3_words

ALPHAS = {"a1": 1, "a2": 2, "a4": 4, "a8": 8}
GAMMAS = dict(em.GAMMA_DEGREES)
TOP = 9

#: basis words of the degree-8 cokernel row; the unknown correction ranges over their span
CORRECTION_WORDS = COKER_WORDS[8]
PARAMETER_NAMES = [f"p{k + 1}" for k in range(len(CORRECTION_WORDS))]


def delta(m: int) -> int:
    return m % 2


def sq4a4_text(m: int) -> str:
    return "Sq4 a4 + Sq7 a1 + Sq6 a2" + (" + a8" if delta(m) else "")


def is_gamma(word) -> bool:
    return word[1].startswith("g")


@dataclass
class CPsi:
    m: int
    include_cube: bool
    presented: PresentedModule
    window: ModuleWindow
    pins: tuple[int, int, int]

    def element(self, text: str) -> tuple[int, tuple[int, ...]]:
        """A free-module expression reduced into the window basis."""
        d, v = self.presented.element(text)
        return d, _to_window(self.presented, v, d)

    def dim(self, j: int) -> int:
        return self.window.dim(j)


def _to_window(pm: PresentedModule, v, d: int):
    where = {b: k for k, b in enumerate(pm.quotient_bits(d))}
    out = []
    for x in v:
        y = 0
        for b in gf2.bits(x):
            y |= 1 << where[b]
        out.append(y)
    return tuple(out)


def phi_vector(m: int, word, d: int, index: dict, include_cube: bool) -> int:
    K, g = word
    v = 0
    for mon in em.coker_word(m, K, g, include_cube):
        v ^= 1 << index[mon]
    return v


def gamma_kernel(m: int, include_cube: bool) -> dict[int, list[frozenset]]:
    """Per degree, a basis of the kernel of the free gamma-module onto the cokernel."""
    out = {}
    for d in range(2, TOP + 1):
        basis = [c.factors for c in em.coker_basis(m, d, include_cube=include_cube)]
        index = {f: k for k, f in enumerate(basis)}
        words = [(I, g) for g, gd in GAMMAS.items() if gd <= d for I in st.admissible_monomials(d - gd)]
        images = [phi_vector(m, w, d, index, include_cube) for w in words]
        out[d] = [frozenset(words[k] for k in gf2.bits(c)) for c in gf2.nullspace(images)]
    return out


def _order(m: int, include_cube: bool):
    preferred = {}
    for j in range(1, TOP + 1):
        for k, text in enumerate(table3_words(m, j, include_cube)):
            preferred[parse_word(text)] = k
    generators = {**ALPHAS, **GAMMAS}

    def key(word):
        # cokernel block sits below the kernel block; preferred words lowest within each
        block = 0 if is_gamma(word) else 1
        rank = preferred.get(word)
        return (block, rank is None, rank if rank is not None else 0,
                word[1], tuple(-x for x in word[0]), generators[word[1]])

    return key


def presented_cpsi(m: int, include_cube: bool = False, pins: tuple[int, int, int] = (0, 1, 0),
                   parametric: bool = True) -> PresentedModule:
    """The presentation; ``pins`` are the coefficients (x, y, z) of
    Sq2 g2, Sq1 g3 and g4 in the Sq3 a1 + Sq2 a2 relation."""
    if m < 2:
        raise em.UnsupportedM("m must be at least 2")
    nparams = len(CORRECTION_WORDS) if parametric else 0
    pm = PresentedModule({**ALPHAS, **GAMMAS}, TOP, nparams, order=_order(m, include_cube))
    for d, rels in gamma_kernel(m, include_cube).items():
        for r in rels:
            pm.add_closed(Relation(d, r, name="coker"))
    pm.add_relation(Relation(2, parse_free("Sq1 a1 + g2"), name="sq1a1"))
    x, y, z = pins
    text = "Sq3 a1 + Sq2 a2"
    text += " + Sq2 g2" * x + " + Sq1 g3" * y + " + g4" * z
    pm.add_relation(Relation(4, parse_free(text), name="sq3a1"))
    params = tuple(parse_free(w) for w in CORRECTION_WORDS) if parametric else ()
    pm.add_relation(Relation(8, parse_free(sq4a4_text(m)), params, name="sq4a4"))
    return pm


def build_cpsi(m: int, include_cube: bool | None = None, pins: tuple[int, int, int] = (0, 1, 0),
               parametric: bool = True, check: bool = True) -> CPsi:
    """Assemble the module on relative degrees 1..9 and check its dimensions against the reference values."""
    if include_cube is None:
        if m == 2:
            raise em.UnsupportedM("m=2 needs an explicit include_cube choice")
        include_cube = False
    pm = presented_cpsi(m, include_cube, pins, parametric)
    if check:
        expected = table3_dims(m, include_cube)
        for j in range(1, TOP + 1):
            got = pm.dim(j)
            if got != expected[j]:
                raise DimensionMismatch(j, got, expected[j], "mapping-cone module")
    window = pm.to_window()
    window.parameter_names = PARAMETER_NAMES[: pm.nparams]
    return CPsi(m, include_cube, pm, window, pins)


def dims_for_pins(m: int, pins: tuple[int, int, int], include_cube: bool = False) -> list[int] | None:
    """Dimensions 1..9 for a choice of pins; None when the presentation is inconsistent."""
    try:
        pm = presented_cpsi(m, include_cube, pins)
        return [pm.dim(j) for j in range(1, TOP + 1)]
    except ArithmeticError:
        return None


def kernel_of_stable_map(m: int, d: int) -> tuple[list[frozenset], int]:
    """Kernel of Free(a1,a2,a4,a8) -> A . l in degree d, and the image rank."""
    words = [(I, g) for g, gd in ALPHAS.items() if gd <= d for I in st.admissible_monomials(d - gd)]
    target = {I: k for k, I in enumerate(st.admissible_monomials(4 * m + d))}
    images = []
    for I, g in words:
        v = 0
        for J in st.normalize(I + em.alpha(m, ALPHAS[g])):
            v ^= 1 << target[J]
        images.append(v)
    null = gf2.nullspace(images)
    return [frozenset(words[k] for k in gf2.bits(c)) for c in null], gf2.rank(images)


def alpha_relations(m: int) -> list[tuple[int, frozenset]]:
    return [(2, parse_free("Sq1 a1")), (4, parse_free("Sq3 a1 + Sq2 a2")),
            (8, parse_free(sq4a4_text(m)))]


def gamma_relations() -> list[tuple[int, frozenset]]:
    return [(3, parse_free("Sq1 g2")), (7, parse_free("Sq3 Sq1 g3 + Sq5 g2")),
            (9, parse_free("Sq5 Sq1 g3"))]


def a_span(rels: list[tuple[int, frozenset]], d: int) -> list[frozenset]:
    out = []
    for e, r in rels:
        if e <= d:
            for K in st.admissible_monomials(d - e):
                out.append(free_act_word(K, r))
    return out


def _bitvec(words, index) -> int:
    v = 0
    for w in words:
        v ^= 1 << index[w]
    return v


def same_span(a: list[frozenset], b: list[frozenset]) -> bool:
    universe = sorted({w for s in a + b for w in s})
    index = {w: k for k, w in enumerate(universe)}
    va = [_bitvec(s, index) for s in a]
    vb = [_bitvec(s, index) for s in b]
    r = gf2.rank(va)
    return r == gf2.rank(vb) == gf2.rank(va + vb)


def label_words(cp: CPsi, j: int) -> list[str]:
    return list(cp.window.basis.get(j, []))


def block_triangular(cp: CPsi) -> list[tuple[int, str, int]]:
    """(degree, label, i) where Sq^i of a cokernel word leaves the cokernel block."""
    bad = []
    w = cp.window
    for d in w.degrees:
        for k, lab in enumerate(w.basis[d]):
            if not lab.split()[-1].startswith("g"):
                continue
            for i in range(1, TOP - d + 1):
                img = w.act(i, d, w.basis_vector(d, lab))
                labels = w.basis[d + i]
                for part in img:
                    for b in gf2.bits(part):
                        if not labels[b].split()[-1].startswith("g"):
                            bad.append((d, lab, i))
    return bad


__all__ = [
    "CPsi", "build_cpsi", "presented_cpsi", "dims_for_pins", "kernel_of_stable_map",
    "alpha_relations", "gamma_relations", "a_span", "same_span", "block_triangular",
    "gamma_kernel", "delta", "format_word", "CORRECTION_WORDS", "PARAMETER_NAMES",
]
