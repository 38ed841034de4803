"""Wu-class suite over Poincare-duality algebras, with independent oracles."""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import corpus
from . import steenrod as st
from .pd import (PDAlgebra, check_bsqv, check_v2k, check_v6, main_identity, product,
                 rank_identity, tensor_element, validate, wu_classes)
from .report import Check, VerificationReport

PAIR_TOP = 20


def _single_generator(a: PDAlgebra) -> tuple[str, int] | None:
    return a.gens[0] if len(a.gens) == 1 else None


def wu_oracle(a: PDAlgebra) -> VerificationReport:
    """Wu classes against direct evaluation of <Sq^k x, [M]> and, for recognised
    truncated polynomial algebras, against closed forms."""
    rep = VerificationReport("wu", {"algebra": a.to_json()})
    n = a.top
    prof = wu_classes(a)
    bad = []
    for k in range(n + 1):
        for x in a.degree_bits(n - k):
            if a.pairing(prof.v[k], 1 << x) != a.evaluate(a.sq(k, 1 << x)):
                bad.append((k, a.format_monomial(a.basis[x])))
    profile = {"v": {str(k): a.format(v) for k, v in prof.v.items() if v},
               "w": {str(k): a.format(w) for k, w in prof.w.items() if w}}
    rep.add(Check("wu.defining", "<v_k x> = <Sq^k x> for every x", not bad,
                  f"{len(bad)} failures" if bad else "all degrees", data=profile))
    high = [k for k in range(n + 1) if 2 * k > n and prof.v[k]]
    rep.add(Check("wu.vanishing", "v_k = 0 for 2k > n", not high, f"nonzero at {high}" if high else ""))
    w_total = a.sq_total(prof.total_v())
    rep.add(Check("wu.w_formula", "w = Sq v", w_total == prof.total_w(), a.format(w_total)))

    single = _single_generator(a)
    if single is not None and a.dim(n) == 1:
        g, d = single
        x = a.generator(g)
        top_power = n // d
        if d == 1:
            want_v = {k: a.power(x, k) if st.binom_mod2(n - k, k) else 0 for k in range(n + 1)}
            want_w = 0
            for k in range(n + 1):
                if st.binom_mod2(n + 1, k):
                    want_w ^= a.power(x, k)
            rep.add(Check("wu.closed_form", "v_k = binom(n-k,k) x^k", prof.v == want_v,
                          a.format(prof.total_v())))
            rep.add(Check("wu.closed_form_w", "w = (1+x)^(n+1)", prof.total_w() == want_w,
                          a.format(prof.total_w())))
        elif d == 4 and top_power == 2:
            rep.add(Check("wu.closed_form", "v = 1 + u", prof.total_v() == a.one() ^ x,
                          a.format(prof.total_v())))
            rep.add(Check("wu.closed_form_w", "w4 = u", prof.w[4] == x, a.format(prof.w[4])))
        elif top_power == 1:
            rep.add(Check("wu.closed_form", "v = 1 and w = 1 on a sphere",
                          prof.total_v() == a.one() == prof.total_w(), a.format(prof.total_v())))
    return rep


def algebra_suite(a: PDAlgebra) -> VerificationReport:
    rep = VerificationReport("wu", {"algebra": a.to_json()})
    checks = validate(a)
    rep.extend(checks)
    if not checks.passed:
        return rep
    oracle = wu_oracle(a)
    rep.extend(oracle)
    rep.extend(check_v2k(a))
    rep.extend(check_bsqv(a))
    if a.top >= 13:
        rep.extend(check_v6(a))
    if a.top >= 10 and a.top % 8 == 2 and a.torsion_degree is not None:
        rep.extend(main_identity(a))
        rep.extend(rank_identity(a))
    for c in rep.checks:
        c.data.setdefault("algebra", a.name)
    return rep


def multiplicative(a: PDAlgebra, b: PDAlgebra) -> Check:
    ab = product(a, b)
    pa, pb, pab = wu_classes(a), wu_classes(b), wu_classes(ab)
    want = tensor_element(a, pa.total_v(), b, pb.total_v(), ab)
    got = pab.total_v()
    return Check("wu.multiplicative", "v(a x b) = v(a) (x) v(b)", got == want,
                 f"{ab.name}: {ab.format(got)}", degree=ab.top)


def v12_check(a: PDAlgebra) -> Check:
    h = corpus.hp2()
    ah = product(a, h)
    v12 = wu_classes(ah).v[12]
    v8 = wu_classes(a).v[8]
    want = tensor_element(a, v8, h, h.generator("u"), ah)
    return Check("wu.v12_product", "v12(M x HP2) = v8(M) (x) u", v12 == want,
                 f"{ah.name}: v8 = {a.format(v8)}, v12 = {ah.format(v12)}", degree=12)


def eighteens() -> list[PDAlgebra]:
    """18-dimensional factors for the v12 product identity (v8 must be able to be nonzero)."""
    out = [corpus.load(n) for n in ("rp9xrp9", "cp5xhp2", "cp4xcp5", "cp3xcp3xcp3")]
    out.append(product(corpus.rp(8), corpus.rp(10), "rp8xrp10", {"x": "y"}))
    out.append(product(corpus.rp(10), corpus.hp2(), "rp10xhp2"))
    out.append(product(corpus.sphere(2), corpus.rp(16), "s2xrp16"))
    return out


def base_names() -> list[str]:
    """Corpus entries that are not themselves products."""
    return [n for n in corpus.names() if not any(c in n for c in ("xrp", "xcp", "xhp"))]


def verify_wu(algebras: list[PDAlgebra] | None = None, pairs: bool | None = None) -> VerificationReport:
    """Per-algebra checks; with the bundled corpus also the product identities."""
    bundled = algebras is None
    algebras = list(corpus.load_all().values()) if bundled else algebras
    rep = VerificationReport("wu", {"algebras": [a.to_json() for a in algebras]})
    for a in algebras:
        rep.extend(algebra_suite(a))
    if pairs if pairs is not None else bundled:
        base = [corpus.load(n) for n in base_names()]
        for a, b in combinations_with_replacement(base, 2):
            if a.top + b.top <= PAIR_TOP:
                rep.add(multiplicative(a, b))
        for a in eighteens():
            rep.add(v12_check(a))
    rep.notes.append("spin^c is attested by the input; torsion classes are input data")
    return rep


__all__ = ["verify_wu", "wu_oracle", "algebra_suite", "multiplicative", "v12_check"]
