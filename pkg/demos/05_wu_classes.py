"""Wu and Stiefel-Whitney classes of small Poincare-duality algebras."""

from __future__ import annotations

from sqwu import corpus, pd
from sqwu.suites import algebra_suite

for name in ["rp6", "rp9", "cp3", "hp2"]:
    a = corpus.load(name)
    prof = pd.wu_classes(a)
    print(f"{name:>5}  v = {a.format(prof.total_v()):<24} w = {a.format(prof.total_w())}")

# multiplicativity on a product
a = pd.product(corpus.rp(2), corpus.rp(2), "rp2xrp2", {"x": "y"})
prof = pd.wu_classes(a)
print("rp2 x rp2: v1 =", a.format(prof.v[1]), " v2 =", a.format(prof.v[2]))

# a product of dimension 10 with declared torsion classes in degree 4
print(algebra_suite(corpus.load("rp5xrp5")).to_text())
