"""Thom module of the Spin^c bundle and the map f* onto the smash window."""

from __future__ import annotations

from sqwu import thom
from sqwu.fmap import build_f, verify_fxi, xi

mw = thom.build_mspinc()
for d in range(0, 10):
    print(d, mw.basis[d])

# Sq^i U = w_i U, with w_1, w_3, w_5 gone
for text in ["Sq2 U", "Sq3 U", "Sq4 Sq2 U", "Sq2 U4"]:
    d, v = thom.thom_vector(mw, text)
    print(f"{text:>10} -> degree {d}, bits {v:b}")

fm = build_f(3)
print("smash dims:", fm.target.dims(range(0, 10)))
print("f*(xi) =", fm.target.format(6, fm.apply(xi())))
print(verify_fxi(3).to_text())
