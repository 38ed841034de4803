"""Finite Poincare-duality algebras over F2 with a Steenrod action.

An algebra is given by generators, polynomial relations, the action of Sq^k
on generators and (optionally) a declared subspace standing in for the mod 2
reductions of integral torsion.  Everything above the top degree is zero.

Elements are Python ints: bit b is the coefficient of global basis monomial b.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Any, Iterable

from . import gf2
from . import steenrod as st
from .report import PLUMBING, Check, VerificationReport

Exps = tuple[int, ...]


class PDInputError(ValueError):
    pass


class SingularSystem(ArithmeticError):
    pass


class BadDegreeConfig(ValueError):
    pass


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_']*")


def _monomials(degs: list[int], d: int) -> list[Exps]:
    out: list[Exps] = []
    n = len(degs)

    def grow(i: int, left: int, acc: list[int]) -> None:
        if i == n:
            if left == 0:
                out.append(tuple(acc))
            return
        for e in range(left // degs[i] + 1):
            acc.append(e)
            grow(i + 1, left - e * degs[i], acc)
            acc.pop()

    if n == 0:
        return [()] if d == 0 else []
    grow(0, d, [])
    return out


class PDAlgebra:
    """Graded-commutative F2 algebra truncated above ``top``."""

    def __init__(self, name: str, top: int, generators: list[tuple[str, int]],
                 relations: Iterable[tuple[str, str]] = (), sq: dict[str, dict[int, str]] | None = None,
                 spinc: bool = False, torsion_degree: int | None = None,
                 torsion: Iterable[str] = (), fundamental: int | None = None) -> None:
        self.name = name
        self.top = int(top)
        if self.top < 0:
            raise PDInputError("top must be nonnegative")
        self.spinc = bool(spinc)
        self.gens = [(str(g), int(d)) for g, d in generators]
        names = [g for g, _ in self.gens]
        if len(set(names)) != len(names):
            raise PDInputError("duplicate generator name")
        for g, d in self.gens:
            if not _NAME.fullmatch(g):
                raise PDInputError(f"bad generator name {g!r}")
            if d <= 0:
                raise PDInputError(f"generator {g} must have positive degree")
        self.gindex = {g: i for i, (g, _) in enumerate(self.gens)}
        self.degs = [d for _, d in self.gens]
        self.relation_text = [(str(a), str(b)) for a, b in relations]
        self.relations = [self.parse_poly(a) ^ self.parse_poly(b) for a, b in self.relation_text]
        for r in self.relations:
            if len({self.mono_degree(e) for e in r}) > 1:
                raise PDInputError("relation is not homogeneous")
        self._build_quotient()
        self.sq_text = {g: {int(k): str(v) for k, v in ops.items()} for g, ops in (sq or {}).items()}
        for g, ops in self.sq_text.items():
            if g not in self.gindex:
                raise PDInputError(f"Steenrod action given for unknown generator {g!r}")
            for k, v in ops.items():
                if k < 0:
                    raise PDInputError("negative Steenrod index")
        self._sq_gen: dict[tuple[int, int], int] = {}
        for i, (g, d) in enumerate(self.gens):
            for k, text in self.sq_text.get(g, {}).items():
                val = self.reduce_poly(self.parse_poly(text))
                if val and any(self.degree_of_bit(b) != d + k for b in gf2.bits(val)):
                    raise PDInputError(f"Sq{k} {g} = {text} has the wrong degree")
                self._sq_gen[(k, i)] = val
        self.torsion_degree = torsion_degree
        self.torsion = [self.element(t) for t in torsion]
        for t in self.torsion:
            if t and torsion_degree is not None and any(self.degree_of_bit(b) != torsion_degree for b in gf2.bits(t)):
                raise PDInputError("torsion class outside the declared degree")
        # evaluation on the top degree; ``fundamental`` is a mask over that degree's basis
        top_bits = self.degree_bits(self.top)
        if fundamental is None:
            fundamental = 1 if len(top_bits) == 1 else 0
        self.fundamental = (int(fundamental) << top_bits[0]) if top_bits else 0
        self._mul_cache: dict[tuple[int, int], int] = {}
        self.sq_basis = lru_cache(maxsize=None)(self._sq_basis)
        self._sq_mono = lru_cache(maxsize=None)(self._sq_mono_impl)

    # -- ring structure -------------------------------------------------

    def mono_degree(self, e: Exps) -> int:
        return sum(x * d for x, d in zip(e, self.degs))

    def parse_poly(self, text: str | int) -> set[Exps]:
        """``"x*x*y + x^3 + 1"`` -> set of exponent vectors (F2 sum)."""
        text = str(text).strip()
        out: set[Exps] = set()
        if text == "0":
            return out
        for term in text.split("+"):
            term = term.strip()
            if not term:
                raise PDInputError(f"empty term in {text!r}")
            e = [0] * len(self.gens)
            if term != "1":
                for factor in term.split("*"):
                    factor = factor.strip()
                    base, _, power = factor.partition("^")
                    if base not in self.gindex:
                        raise PDInputError(f"unknown generator {base!r} in {text!r}")
                    try:
                        p = int(power) if power else 1
                    except ValueError:
                        raise PDInputError(f"bad exponent in {factor!r}") from None
                    if p < 0:
                        raise PDInputError(f"negative exponent in {factor!r}")
                    e[self.gindex[base]] += p
            out ^= {tuple(e)}
        return out

    def _build_quotient(self) -> None:
        self.mons: dict[int, list[Exps]] = {}
        self.mindex: dict[int, dict[Exps, int]] = {}
        self.echelons: dict[int, gf2.Echelon] = {}
        self.basis: list[Exps] = []
        self.offset: dict[int, int] = {}
        self.bdeg: list[int] = []
        for d in range(self.top + 1):
            mons = sorted(_monomials(self.degs, d), reverse=True)
            self.mons[d] = mons
            self.mindex[d] = {e: k for k, e in enumerate(mons)}
            ech = gf2.Echelon()
            for r in self.relations:
                rd = self.mono_degree(next(iter(r))) if r else None
                if rd is None or rd > d:
                    continue
                for c in _monomials(self.degs, d - rd):
                    v = 0
                    for e in r:
                        v ^= 1 << self.mindex[d][tuple(a + b for a, b in zip(c, e))]
                    ech.add(v)
            self.echelons[d] = ech
            self.offset[d] = len(self.basis)
            for k, e in enumerate(mons):
                if k not in ech.rows:
                    self.basis.append(e)
                    self.bdeg.append(d)
        self.bindex = {e: k for k, e in enumerate(self.basis)}
        self.offset[self.top + 1] = len(self.basis)

    def degree_bits(self, d: int) -> list[int]:
        if d < 0 or d > self.top:
            return []
        return list(range(self.offset[d], self.offset[d + 1]))

    def dim(self, d: int) -> int:
        return len(self.degree_bits(d))

    def degree_of_bit(self, b: int) -> int:
        return self.bdeg[b]

    def degree_mask(self, d: int) -> int:
        bits = self.degree_bits(d)
        return ((1 << len(bits)) - 1) << bits[0] if bits else 0

    def component(self, x: int, d: int) -> int:
        return x & self.degree_mask(d)

    def reduce_poly(self, poly: Iterable[Exps]) -> int:
        by_degree: dict[int, int] = {}
        for e in poly:
            d = self.mono_degree(e)
            if d > self.top:
                continue
            by_degree[d] = by_degree.get(d, 0) ^ (1 << self.mindex[d][e])
        out = 0
        for d, v in by_degree.items():
            residue, _ = self.echelons[d].reduce(v)
            mons = self.mons[d]
            for b in gf2.bits(residue):
                out ^= 1 << self.bindex[mons[b]]
        return out

    def element(self, text: str) -> int:
        return self.reduce_poly(self.parse_poly(text))

    def one(self) -> int:
        return self.reduce_poly({(0,) * len(self.gens)})

    def generator(self, g: str) -> int:
        e = [0] * len(self.gens)
        e[self.gindex[g]] = 1
        return self.reduce_poly({tuple(e)})

    def mul_basis(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        hit = self._mul_cache.get(key)
        if hit is None:
            e = tuple(x + y for x, y in zip(self.basis[a], self.basis[b]))
            hit = self.reduce_poly({e})
            self._mul_cache[key] = hit
        return hit

    def mul(self, x: int, y: int) -> int:
        out = 0
        ys = gf2.bits(y)
        for a in gf2.bits(x):
            da = self.bdeg[a]
            for b in ys:
                if da + self.bdeg[b] <= self.top:
                    out ^= self.mul_basis(a, b)
        return out

    def power(self, x: int, n: int) -> int:
        out = self.one()
        for _ in range(n):
            out = self.mul(out, x)
        return out

    # -- Steenrod action -------------------------------------------------

    def sq_generator(self, k: int, i: int) -> int:
        d = self.degs[i]
        e = [0] * len(self.gens)
        # declared values win so that validate can catch unstable input
        if (k, i) in self._sq_gen:
            return self._sq_gen[(k, i)]
        if k == 0:
            e[i] = 1
            return self.reduce_poly({tuple(e)})
        if k > d:
            return 0
        if k == d:
            e[i] = 2
            return self.reduce_poly({tuple(e)})
        return self._sq_gen.get((k, i), 0)

    def _sq_mono_impl(self, k: int, e: Exps) -> int:
        if self.mono_degree(e) + k > self.top:
            return 0
        i = next((j for j, x in enumerate(e) if x), None)
        if i is None:
            return self.one() if k == 0 else 0
        rest = list(e)
        rest[i] -= 1
        rest_t = tuple(rest)
        out = 0
        for a in range(min(k, self.degs[i]) + 1):
            left = self.sq_generator(a, i)
            if not left:
                continue
            right = self._sq_mono(k - a, rest_t)
            if right:
                out ^= self.mul(left, right)
        return out

    def _sq_basis(self, k: int, b: int) -> int:
        return self._sq_mono(k, self.basis[b])

    def sq(self, k: int, x: int) -> int:
        out = 0
        for b in gf2.bits(x):
            out ^= self.sq_basis(k, b)
        return out

    def sq_word(self, K: Iterable[int], x: int) -> int:
        for k in reversed(tuple(K)):
            x = self.sq(k, x)
        return x

    def sq_total(self, x: int) -> int:
        out = 0
        for k in range(self.top + 1):
            out ^= self.sq(k, x)
        return out

    def evaluate(self, x: int) -> int:
        return gf2.parity(x & self.fundamental)

    def pairing(self, x: int, y: int) -> int:
        return self.evaluate(self.mul(x, y))

    # -- text ------------------------------------------------------------

    def format_monomial(self, e: Exps) -> str:
        parts = []
        for (g, _), x in zip(self.gens, e):
            parts.extend([g] * x)
        return "*".join(parts) if parts else "1"

    def format(self, x: int) -> str:
        if not x:
            return "0"
        return " + ".join(self.format_monomial(self.basis[b]) for b in gf2.bits(x))

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "top": self.top,
            "spinc": self.spinc,
            "generators": [{"g": g, "deg": d} for g, d in self.gens],
            "relations": [_relation_json(a, b) for a, b in self.relation_text],
            "sq": {g: {str(k): v for k, v in sorted(ops.items())} for g, ops in self.sq_text.items()},
        }
        if self.torsion_degree is not None:
            out["torsion"] = {"degree": self.torsion_degree, "basis": [self.format(t) for t in self.torsion]}
        return out


def _relation_json(lhs: str, rhs: str) -> list:
    if "+" in lhs:
        return [lhs, 0 if rhs == "0" else rhs]
    factors = []
    for f in lhs.split("*"):
        base, _, power = f.strip().partition("^")
        factors.extend([base] * (int(power) if power else 1))
    return factors + [0 if rhs == "0" else rhs]


def from_json(data: dict[str, Any]) -> PDAlgebra:
    try:
        gens = [(g["g"], g["deg"]) for g in data.get("generators", [])]
        rels = []
        for r in data.get("relations", []):
            if not isinstance(r, list) or len(r) < 2:
                raise PDInputError(f"relation {r!r} needs factors and a value")
            rels.append(("*".join(str(x) for x in r[:-1]), str(r[-1])))
        tors = data.get("torsion") or {}
        return PDAlgebra(
            name=str(data.get("name", "")),
            top=int(data["top"]),
            generators=gens,
            relations=rels,
            sq={g: {int(k): v for k, v in ops.items()} for g, ops in data.get("sq", {}).items()},
            spinc=bool(data.get("spinc", False)),
            torsion_degree=tors.get("degree"),
            torsion=tors.get("basis", []),
            fundamental=data.get("fundamental"),
        )
    except (KeyError, TypeError) as exc:
        raise PDInputError(f"malformed algebra description: {exc}") from exc


def load(path: str | Path) -> PDAlgebra:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PDInputError(f"{path}: {exc}") from exc
    return from_json(data)


# -- constructions ----------------------------------------------------------


def product(a: PDAlgebra, b: PDAlgebra, name: str | None = None,
            rename: dict[str, str] | None = None) -> PDAlgebra:
    """Tensor product; clashing generator names of ``b`` get a numeric suffix."""
    taken = {g for g, _ in a.gens}
    rename = dict(rename or {})
    for g, _ in b.gens:
        if g in rename:
            continue
        new, k = g, 2
        while new in taken:
            new, k = f"{g}{k}", k + 1
        rename[g] = new
        taken.add(new)

    def sub(text: str) -> str:
        return _NAME.sub(lambda m: rename.get(m.group(0), m.group(0)), text)

    gens = a.gens + [(rename[g], d) for g, d in b.gens]
    rels = a.relation_text + [(sub(x), sub(y)) for x, y in b.relation_text]
    sq = {g: dict(v) for g, v in a.sq_text.items()}
    for g, ops in b.sq_text.items():
        sq[rename[g]] = {k: sub(v) for k, v in ops.items()}
    return PDAlgebra(name or f"{a.name}x{b.name}", a.top + b.top, gens, rels, sq,
                     spinc=a.spinc and b.spinc)


def tensor_element(a: PDAlgebra, x: int, b: PDAlgebra, y: int, ab: PDAlgebra) -> int:
    """x (x) y inside ``ab = product(a, b)`` (generators of a come first)."""
    out = 0
    for i in gf2.bits(x):
        for j in gf2.bits(y):
            out ^= ab.reduce_poly({a.basis[i] + b.basis[j]})
    return out


# -- Wu classes -----------------------------------------------------------


@dataclass
class WuProfile:
    v: dict[int, int]
    w: dict[int, int]

    def total_v(self) -> int:
        out = 0
        for x in self.v.values():
            out ^= x
        return out

    def total_w(self) -> int:
        out = 0
        for x in self.w.values():
            out ^= x
        return out


def wu_class(a: PDAlgebra, k: int, order: list[int] | None = None) -> int:
    """Solve <v_k x> = <Sq^k x> over H^{n-k}; ``order`` permutes the degree-k basis."""
    n = a.top
    if k < 0 or k > n:
        return 0
    cols = a.degree_bits(k)
    if order is not None:
        cols = [cols[i] for i in order]
    tests = a.degree_bits(n - k)
    if not cols:
        for x in tests:
            if a.evaluate(a.sq(k, 1 << x)):
                raise SingularSystem(f"no Wu class in degree {k}")
        return 0
    rows, rhs = [], []
    for x in tests:
        row = 0
        for c, b in enumerate(cols):
            if a.pairing(1 << b, 1 << x):
                row |= 1 << c
        rows.append(row)
        rhs.append(a.evaluate(a.sq(k, 1 << x)))
    sol = gf2.solve(rows, rhs, len(cols))
    if sol is None:
        raise SingularSystem(f"Wu system in degree {k} is inconsistent")
    if gf2.rank(rows) != len(cols):
        raise SingularSystem(f"Wu system in degree {k} is underdetermined")
    out = 0
    for c in gf2.bits(sol):
        out |= 1 << cols[c]
    return out


def wu_classes(a: PDAlgebra) -> WuProfile:
    v = {k: wu_class(a, k) for k in range(a.top + 1)}
    w = {}
    for k in range(a.top + 1):
        acc = 0
        for i in range(k + 1):
            acc ^= a.sq(i, v[k - i])
        w[k] = acc
    return WuProfile(v, w)


# -- verification ---------------------------------------------------------


def validate(a: PDAlgebra) -> VerificationReport:
    rep = VerificationReport("validate", {"algebra": a.to_json()})
    n = a.top
    rep.add(Check("pd.top_dim", PLUMBING, a.dim(n) == 1, f"dim H^{n} = {a.dim(n)}", degree=n))
    for k in range(n + 1):
        rows = []
        left, right = a.degree_bits(k), a.degree_bits(n - k)
        for x in left:
            row = 0
            for c, y in enumerate(right):
                if a.pairing(1 << x, 1 << y):
                    row |= 1 << c
            rows.append(row)
        r = gf2.rank(rows)
        ok = r == len(left) == len(right)
        if not ok:
            rep.add(Check("pd.nondegenerate", "Poincare duality pairing", False,
                          f"rank {r} on {len(left)} x {len(right)}", degree=k))
    if not rep.by_id("pd.nondegenerate"):
        rep.add(Check("pd.nondegenerate", "Poincare duality pairing", True, "all degrees"))

    bad_unstable = []
    for b in range(len(a.basis)):
        d = a.bdeg[b]
        for k in range(d, n - d + 1):
            val = a.sq(k, 1 << b)
            expect = a.mul(1 << b, 1 << b) if k == d else 0
            if val != expect:
                bad_unstable.append((d, a.format_monomial(a.basis[b]), k))
    rep.add(Check("pd.unstable", "unstable condition Sq^k x = x^2 or 0", not bad_unstable,
                  _first(bad_unstable)))

    bad_adem = []
    for b in range(len(a.basis)):
        d = a.bdeg[b]
        for total in range(2, n - d + 1):
            for j in range(1, total):
                i = total - j
                if i >= 2 * j:
                    continue
                lhs = a.sq(i, a.sq(j, 1 << b))
                rhs = 0
                for J in st.adem_pair(i, j):
                    rhs ^= a.sq_word(J, 1 << b)
                if lhs != rhs:
                    bad_adem.append((d, a.format_monomial(a.basis[b]), i, j))
    rep.add(Check("pd.adem", "Adem relations on the algebra", not bad_adem, _first(bad_adem)))

    bad_cartan = []
    for x in range(len(a.basis)):
        for y in range(x, len(a.basis)):
            dx, dy = a.bdeg[x], a.bdeg[y]
            if dx + dy > n or dx == 0 or dy == 0:
                continue
            xy = a.mul(1 << x, 1 << y)
            for k in range(1, n - dx - dy + 1):
                rhs = 0
                for i in range(k + 1):
                    rhs ^= a.mul(a.sq(i, 1 << x), a.sq(k - i, 1 << y))
                if a.sq(k, xy) != rhs:
                    bad_cartan.append((a.format_monomial(a.basis[x]), a.format_monomial(a.basis[y]), k))
    rep.add(Check("pd.cartan", "Cartan formula", not bad_cartan, _first(bad_cartan)))

    bad_ideal = []
    for r in a.relations:
        if not r:
            continue
        rd = a.mono_degree(next(iter(r)))
        for dc in range(0, n - rd + 1):
            for c in _monomials(a.degs, dc):
                for k in range(1, n - rd - dc + 1):
                    val = 0
                    for e in r:
                        val ^= a._sq_mono(k, tuple(x + y for x, y in zip(c, e)))
                    if val:
                        bad_ideal.append((a.format_monomial(c), k))
    rep.add(Check("pd.well_defined", "Steenrod action preserves the relation ideal", not bad_ideal,
                  _first(bad_ideal)))

    if a.spinc:
        ok = rep.passed
        if ok:
            prof = wu_classes(a)
            w1, w3 = prof.w.get(1, 0), prof.w.get(3, 0)
            rep.add(Check("pd.spinc_w1_w3", "w1 = w3 = 0 for spin^c", not w1 and not w3,
                          f"w1 = {a.format(w1)}, w3 = {a.format(w3)}"))
        rep.notes.append("spin^c is attested by the input; only w1 = w3 = 0 is checkable mod 2")
    return rep


def _first(items: list) -> str:
    if not items:
        return ""
    return f"{len(items)} failure(s), first {items[0]}"


def _skipped(rep: VerificationReport, cid: str, anchor: str) -> VerificationReport:
    rep.add(Check(cid, anchor, False, "SkippedNotSpinc: input is not attested spin^c", "skipped"))
    return rep


def check_v2k(a: PDAlgebra) -> VerificationReport:
    """Sq^1 v_{2k} = 0 for spin^c inputs, plus the Adem step used to prove it."""
    rep = VerificationReport("v2k", {"algebra": a.to_json()})
    anchor = "Sq^1 v_2k = 0 on spin^c manifolds"
    if not a.spinc:
        return _skipped(rep, "v2k.sq1", anchor)
    prof = wu_classes(a)
    for k in range(0, a.top // 2 + 1):
        val = a.sq(1, prof.v[2 * k])
        rep.add(Check("v2k.sq1", anchor, val == 0, a.format(val), degree=2 * k + 1))
    for k in range(2, max(2, a.top // 2) + 1):
        bad = []
        lhs_ops = st.normalize((2, 2 * k - 1))
        rhs_ops = st.add(*([{(2 * k + 1,)}] if st.binom_mod2(2 * k - 2, 2) else []),
                         {(2 * k, 1)})
        algebra_ok = lhs_ops == st.normalize(rhs_ops)
        for b in range(len(a.basis)):
            lhs = a.sq(2, a.sq(2 * k - 1, 1 << b))
            rhs = a.sq(2 * k, a.sq(1, 1 << b))
            if st.binom_mod2(2 * k - 2, 2):
                rhs ^= a.sq(2 * k + 1, 1 << b)
            if lhs != rhs:
                bad.append(a.format_monomial(a.basis[b]))
        rep.add(Check("v2k.adem_step", "Sq2 Sq^(2k-1) = binom(2k-2,2) Sq^(2k+1) + Sq^(2k) Sq1",
                      algebra_ok and not bad, _first(bad), degree=2 * k))
    return rep


def check_bsqv(a: PDAlgebra) -> VerificationReport:
    """Sq^3 v_4n = 0 whenever dim <= 8n + 1."""
    rep = VerificationReport("bsqv", {"algebra": a.to_json()})
    anchor = "Sq^3 v_4n = 0 for spin^c manifolds of dim <= 8n+1"
    if not a.spinc:
        return _skipped(rep, "bsqv.sq3", anchor)
    prof = wu_classes(a)
    for n in range(1, a.top // 4 + 1):
        if a.top > 8 * n + 1:
            continue
        val = a.sq(3, prof.v[4 * n])
        rep.add(Check("bsqv.sq3", anchor, val == 0, a.format(val), degree=4 * n + 3))
    return rep


def check_v6(a: PDAlgebra) -> VerificationReport:
    rep = VerificationReport("v6", {"algebra": a.to_json()})
    anchor = "v6 = w2 w4 on spin^c manifolds"
    if not a.spinc:
        return _skipped(rep, "v6.w2w4", anchor)
    prof = wu_classes(a)
    lhs, rhs = prof.v.get(6, 0), a.mul(prof.w.get(2, 0), prof.w.get(4, 0))
    rep.add(Check("v6.w2w4", anchor, lhs == rhs, f"v6 = {a.format(lhs)}, w2 w4 = {a.format(rhs)}", degree=6))
    return rep


def _middle(a: PDAlgebra) -> int:
    if a.top < 10 or a.top % 8 != 2:
        raise BadDegreeConfig(f"top degree {a.top} is not of the form 8n+2 with n >= 1")
    n = (a.top - 2) // 8
    if a.torsion_degree is not None and a.torsion_degree != 4 * n and a.torsion:
        raise BadDegreeConfig(f"torsion declared in degree {a.torsion_degree}, expected {4 * n}")
    return n


def span_elements(vectors: list[int]) -> list[int]:
    """Every element of the F2 span (vectors deduplicated through an echelon basis)."""
    e = gf2.Echelon()
    basis = [v for v in vectors if e.add(v)]
    out = []
    for r in range(len(basis) + 1):
        for combo in combinations(basis, r):
            acc = 0
            for v in combo:
                acc ^= v
            out.append(acc)
    return out


def main_identity(a: PDAlgebra) -> VerificationReport:
    """<t Sq2 t> = <t Sq2 v_4n> for every t in the declared torsion span."""
    rep = VerificationReport("main", {"algebra": a.to_json()})
    anchor = "<t Sq2 t> = <t Sq2 v_4n> on torsion classes"
    n = _middle(a)
    if not a.spinc:
        return _skipped(rep, "main.identity", anchor)
    v = wu_class(a, 4 * n)
    sv = a.sq(2, v)
    for t in span_elements(a.torsion):
        lhs = a.pairing(t, a.sq(2, t))
        rhs = a.pairing(t, sv)
        rep.add(Check("main.identity", anchor, lhs == rhs, f"t = {a.format(t)}: {lhs} vs {rhs}",
                      degree=4 * n))
    rep.notes.append("torsion classes are input data; a failure means the input is not a spin^c manifold "
                     "with that torsion")
    return rep


def rank_identity(a: PDAlgebra) -> VerificationReport:
    """rank of [x, y] = <x Sq2 y> on span(torsion, v_4n) against two characteristic numbers."""
    rep = VerificationReport("rank", {"algebra": a.to_json()})
    n = _middle(a)
    for nn in range(2, 7):
        lhs = st.normalize((4, 4 * nn - 2))
        rhs = st.add({(4 * nn, 2)}, {(4 * nn + 2,)} if st.binom_mod2(4 * nn - 3, 4) else set())
        rep.add(Check("rank.adem_step", "Sq4 Sq^(4n-2) = binom(4n-3,4) Sq^(4n+2) + Sq^(4n) Sq2",
                      lhs == st.normalize(rhs), st.format_element(lhs), degree=4 * nn + 2))
    anchor = "rank of [x,y] = <(w4 + w2^2) w_(8n-2)> = <v_4n Sq2 v_4n>"
    if not a.spinc:
        return _skipped(rep, "rank.identity", anchor)
    prof = wu_classes(a)
    v = prof.v[4 * n]
    e = gf2.Echelon()
    basis = [x for x in a.torsion + [v] if e.add(x)]
    gram = [[a.pairing(x, a.sq(2, y)) for y in basis] for x in basis]
    symmetric = all(gram[i][j] == gram[j][i] for i in range(len(basis)) for j in range(len(basis)))
    rep.add(Check("rank.symmetric", "the form [x,y] is symmetric", symmetric, f"size {len(basis)}",
                  degree=4 * n))
    rows = [sum(bit << j for j, bit in enumerate(row)) for row in gram]
    r = gf2.rank(rows)
    w = prof.w
    char = a.evaluate(a.mul(w.get(4, 0) ^ a.mul(w.get(2, 0), w.get(2, 0)), w.get(8 * n - 2, 0)))
    vsv = a.pairing(v, a.sq(2, v))
    rep.add(Check("rank.identity", anchor, r % 2 == char == vsv,
                  f"rank {r}, <(w4+w2^2) w> = {char}, <v Sq2 v> = {vsv}", degree=4 * n,
                  data={"rank": r}))
    return rep
