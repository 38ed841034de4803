"""The relation suite: composition identities in the Steenrod algebra, the
kernel/cokernel relations, the glued mapping-cone module and the Thom module."""

from __future__ import annotations

from itertools import product as cartesian

from . import em, gf2, thom
from . import steenrod as st
from .amodule import is_constant, is_zero
from .cpsi import (a_span, alpha_relations, block_triangular, build_cpsi, delta, dims_for_pins,
                   gamma_kernel, gamma_relations, kernel_of_stable_map, same_span)
from .report import Check, VerificationReport
from .reproduce import first_mismatch, table
from .tables import table3_dims


def _identity(rep: VerificationReport, cid: str, anchor: str, lhs: tuple[int, ...],
              rhs: list[tuple[int, ...]], degree: int | None = None) -> None:
    got = st.normalize(lhs)
    want = st.normalize(rhs)
    rep.add(Check(cid, anchor, got == want,
                  f"{st.format_monomial(lhs)} = {st.format_element(got)}", degree=degree))


def adem_identities(rep: VerificationReport) -> None:
    _identity(rep, "adem.sq2sq2", "Sq2 Sq2 = Sq3 Sq1", (2, 2), [(3, 1)])
    _identity(rep, "adem.sq2sq3", "Sq2 Sq3 = Sq5 + Sq4 Sq1", (2, 3), [(5,), (4, 1)])
    _identity(rep, "adem.sq4sq3", "Sq4 Sq3 = Sq5 Sq2", (4, 3), [(5, 2)])
    for k in range(1, 9):
        _identity(rep, "adem.sq1_even", "Sq1 Sq2k = Sq(2k+1)", (1, 2 * k), [(2 * k + 1,)], 2 * k + 1)
        _identity(rep, "adem.sq1_odd", "Sq1 Sq(2k+1) = 0", (1, 2 * k + 1), [], 2 * k + 2)
    for k in range(2, 9):
        rhs = [(2 * k, 1)] + ([(2 * k + 1,)] if st.binom_mod2(2 * k - 2, 2) else [])
        _identity(rep, "adem.sq2_odd", "Sq2 Sq(2k-1) = binom(2k-2,2) Sq(2k+1) + Sq2k Sq1",
                  (2, 2 * k - 1), rhs, 2 * k + 1)


def reduction_identities(rep: VerificationReport) -> None:
    for n in range(3, 7):
        rhs = [(4 * n, 2, 1)] + ([(4 * n + 2, 1)] if st.binom_mod2(4 * n - 3, 4) else [])
        _identity(rep, "reduction.sq4sq2", "Sq4 Sq2 Sq(4n-3) = binom(4n-3,4) Sq(4n+2) Sq1 + Sq4n Sq2 Sq1",
                  (4, 2, 4 * n - 3), rhs, 4 * n + 3)
    for n in range(2, 7):
        rhs = [(4 * n, 2)] + ([(4 * n + 2,)] if st.binom_mod2(4 * n - 3, 4) else [])
        _identity(rep, "reduction.sq4", "Sq4 Sq(4n-2) = binom(4n-3,4) Sq(4n+2) + Sq4n Sq2",
                  (4, 4 * n - 2), rhs, 4 * n + 2)


def kernel_relations(rep: VerificationReport, m: int) -> None:
    r = 4 * m
    dm = delta(m)
    a8 = [(r + 8,)] if dm else []
    sq1a8 = [(1, r + 8)] if dm else []
    _identity(rep, "kernel.sq1a1", "Sq1 a1 = 0", (1, r + 1), [], 2)
    rep.add(Check("kernel.sq3a1_sq2a2", "Sq3 a1 = Sq2 a2",
                  st.normalize((3, r + 1)) == st.normalize((2, r + 2)),
                  st.format_element(st.normalize((3, r + 1))), degree=4))
    rep.add(Check("kernel.sq4a4", "Sq4 a4 = d_m a8 + Sq6 a2 + Sq7 a1",
                  st.normalize((4, r + 4)) == st.normalize(a8 + [(6, r + 2), (7, r + 1)]),
                  f"m={m}, d_m={dm}: {st.format_element(st.normalize((4, r + 4)))}", degree=8))
    rep.add(Check("kernel.sq5a1", "Sq5 a1 = Sq3 Sq1 a2",
                  st.normalize((5, r + 1)) == st.normalize((3, 1, r + 2)), degree=6))
    rep.add(Check("kernel.sq5a4", "Sq5 a4 = d_m Sq1 a8 + Sq7 a2",
                  st.normalize((5, r + 4)) == st.normalize(sq1a8 + [(7, r + 2)]), degree=9))


def cokernel_relations(rep: VerificationReport, m: int, include_cube: bool) -> None:
    sq1g2 = em.coker_word(m, (1,), "g2", include_cube)
    rep.add(Check("coker.sq1g2", "Sq1 g2 = 0", not sq1g2, em.format_class(sq1g2), degree=3))
    a = em.coker_word(m, (3, 1), "g3", include_cube)
    b = em.coker_word(m, (5,), "g2", include_cube)
    rep.add(Check("coker.sq5g2", "Sq3 Sq1 g3 = Sq5 g2", a == b and bool(a), em.format_class(a), degree=7))
    c = em.coker_word(m, (5, 1), "g3", include_cube)
    rep.add(Check("coker.sq51g3", "Sq5 Sq1 g3 = 0", not c, em.format_class(c), degree=9))


def generation(rep: VerificationReport, m: int, include_cube: bool) -> None:
    ok, info = True, []
    for d in range(1, 10):
        ker, image_rank = kernel_of_stable_map(m, d)
        span = a_span(alpha_relations(m), d)
        good = (same_span(ker, span) if ker or span else True) and image_rank == len(em.kernel_basis(m, d))
        ok &= good
        info.append(f"{d}:{len(ker)}")
    rep.add(Check("kernel.generated", "kernel relations generate all relations among a1, a2, a4, a8",
                  ok, "kernel dims " + " ".join(info)))
    gk = gamma_kernel(m, include_cube)
    ok, info = True, []
    extra = []
    for d in range(2, 10):
        span = a_span(gamma_relations(), d)
        if m == 2 and not include_cube and d == 9:
            extra = [frozenset({((), "g9")})]
        good = same_span(gk[d], span + extra) if gk[d] or span else True
        ok &= good
        info.append(f"{d}:{len(gk[d])}")
    rep.add(Check("coker.generated", "cokernel relations generated by Sq1 g2, Sq3 Sq1 g3 + Sq5 g2, Sq5 Sq1 g3",
                  ok, "relation dims " + " ".join(info)))


def module_relations(rep: VerificationReport, m: int, include_cube: bool) -> None:
    cp = build_cpsi(m, include_cube)
    w = cp.window

    def val(text: str):
        return cp.element(text)

    d, v = val("Sq1 a1")
    _, g2 = val("g2")
    rep.add(Check("cpsi.sq1a1", "Sq1 a1 = g2 in the mapping cone", v == g2 and not is_zero(v),
                  w.format(d, v), degree=2))

    consistent = []
    for pins in cartesian((0, 1), repeat=3):
        dims = dims_for_pins(m, pins, include_cube)
        expect = [table_dim(m, include_cube, j) for j in range(1, 10)]
        if dims == expect:
            consistent.append(pins)
    want = [(0, 1, 0), (1, 1, 0)]
    rep.add(Check("cpsi.sq3a1", "Sq3 a1 + Sq2 a2 = x Sq2 g2 + Sq1 g3 is the only consistent choice",
                  consistent == want, f"consistent (x,y,z): {consistent}", degree=4))

    derived = [
        ("cpsi.sq3a2", "Sq3 a2 = 0", "Sq3 a2", None),
        ("cpsi.sq31a2", "Sq3 Sq1 a2 = Sq5 a1 + Sq4 g2 + Sq2 Sq1 g3", "Sq3 Sq1 a2", "Sq5 a1 + Sq4 g2 + Sq2 Sq1 g3"),
        ("cpsi.sq42a2", "Sq4 Sq2 a2 = Sq5 Sq2 a1 + Sq4 Sq1 g3", "Sq4 Sq2 a2", "Sq5 Sq2 a1 + Sq4 Sq1 g3"),
        ("cpsi.sq41a2", "Sq4 Sq1 a2 = Sq5 a2", "Sq4 Sq1 a2", "Sq5 a2"),
        ("cpsi.sq51a2", "Sq5 Sq1 a2 = 0", "Sq5 Sq1 a2", None),
        ("cpsi.sq52a2", "Sq5 Sq2 a2 = Sq5 Sq1 g3 = 0", "Sq5 Sq2 a2", "Sq5 Sq1 g3"),
    ]
    for cid, anchor, lhs, rhs in derived:
        d, lv = val(lhs)
        rv = val(rhs)[1] if rhs else w.zero()
        extra = is_zero(lv) if cid == "cpsi.sq52a2" else True
        rep.add(Check(cid, anchor, lv == rv and is_constant(lv) and extra, w.format(d, lv), degree=d,
                      parameter_independent=is_constant(lv)))

    for cid, anchor, text in [
        ("cpsi.sq4a4", "Sq4 a4 + Sq7 a1 + Sq6 a2 + d_m a8 lies in the cokernel block",
         "Sq4 a4 + Sq7 a1 + Sq6 a2" + (" + a8" if delta(m) else "")),
        ("cpsi.sq5a4", "Sq5 a4 + Sq7 a2 + d_m Sq1 a8 lies in the cokernel block",
         "Sq5 a4 + Sq7 a2" + (" + Sq1 a8" if delta(m) else "")),
    ]:
        d, v = val(text)
        labels = w.basis[d]
        inside = all(labels[b].split()[-1].startswith("g") for part in v for b in gf2.bits(part))
        rep.add(Check(cid, anchor, inside, w.format(d, v), degree=d,
                      parameter_independent=is_constant(v)))
    # the Sq5 correction is Sq1 of the Sq4 one, not an independent unknown
    d8, c8 = val("Sq4 a4 + Sq7 a1 + Sq6 a2" + (" + a8" if delta(m) else ""))
    d9, c9 = val("Sq5 a4 + Sq7 a2" + (" + Sq1 a8" if delta(m) else ""))
    rep.add(Check("cpsi.sq5a4_forced", "the Sq5 a4 correction equals Sq1 of the Sq4 a4 correction",
                  w.act(1, d8, c8) == c9, w.format(d9, c9), degree=9))

    bad = block_triangular(cp)
    rep.add(Check("cpsi.block_triangular", "Sq maps the cokernel block into itself", not bad,
                  f"{len(bad)} violations"))
    bad = w.adem_failures()
    rep.add(Check("cpsi.adem", "Adem relations hold on the mapping-cone window", not bad,
                  f"{len(bad)} violations"))
    sums = all(w.dim(j) == table_dim(m, include_cube, j) for j in range(1, 10))
    rep.add(Check("cpsi.dims", "mapping-cone dims = kernel dims + cokernel dims", sums,
                  " ".join(str(w.dim(j)) for j in range(1, 10))))


def table_dim(m: int, include_cube: bool, j: int) -> int:
    return table3_dims(m, include_cube)[j]


def thom_relations(rep: VerificationReport) -> None:
    mw = thom.build_mspinc()
    for text in ["Sq1 U", "Sq3 U", "Sq5 U", "Sq5 Sq2 U", "Sq4 Sq3 U", "Sq1 U4", "Sq3 U4"]:
        d, v = thom.thom_vector(mw, text)
        rep.add(Check("thom.vanishing", f"{text} = 0", v == 0, degree=d))
    gens = []
    for name in ("U", "U4", "U81", "U82"):
        d, v = thom.thom_vector(mw, name)
        gens.append((d, (v,)))
    ok = True
    for d in range(0, 9):
        span = mw.span_of(gens, d)
        ok &= gf2.rank(s[0] for s in span) == mw.dim(d)
    rep.add(Check("thom.generated", "U, U4, U81, U82 generate the Thom window", ok))
    zero = thom.build_mspinc(mode="zero")
    agree = all(mw.action[k] == zero.action[k] for k in mw.action if k[0] + k[2] <= 8)
    rep.add(Check("thom.substitution", "exact quotient agrees with zero substitution through degree 8",
                  agree))
    bad = mw.adem_failures()
    rep.add(Check("thom.adem", "Adem relations hold on the Thom window", not bad, f"{len(bad)} violations"))
    ring = thom.SpincRing()
    v = thom.wu_total(8, ring)
    w2w4 = ring.reduce(thom.mul(thom.w(2), thom.w(4)), 6)
    rep.add(Check("thom.v6", "universal v6 = w2 w4 in the Spin^c ring", v[6] == w2w4,
                  thom.format_poly(v[6]), degree=6))
    rep.add(Check("thom.v4", "universal v4 = w4 + w2^2", v[4] == ring.reduce(
        thom.add(thom.w(4), thom.mul(thom.w(2), thom.w(2))), 4), thom.format_poly(v[4]), degree=4))


def table_checks(rep: VerificationReport, m: int, include_cube: bool) -> None:
    for which in (1, 2, 3, 4):
        tab = table(which, m, include_cube)
        bad = first_mismatch(tab)
        dims = " ".join(str(r["dim"]) for r in tab["rows"])
        rep.add(Check(f"table{which}", f"table {which} dimensions and listed bases", bad is None,
                      dims if bad is None else f"first mismatch at row {bad[1]}; dims {dims}"))


def verify_relations(m: int = 3, include_cube: bool | None = None) -> VerificationReport:
    if include_cube is None:
        if m == 2:
            raise em.UnsupportedM("m=2 needs an explicit include_cube choice")
        include_cube = False
    rep = VerificationReport("relations", {"m": m, "include_cube": include_cube})
    adem_identities(rep)
    reduction_identities(rep)
    kernel_relations(rep, m)
    cokernel_relations(rep, m, include_cube)
    generation(rep, m, include_cube)
    module_relations(rep, m, include_cube)
    thom_relations(rep)
    table_checks(rep, m, include_cube)
    rep.notes.append("mapping-cone checks run in the block-filtered module")
    return rep


__all__ = ["verify_relations", "adem_identities", "reduction_identities"]
