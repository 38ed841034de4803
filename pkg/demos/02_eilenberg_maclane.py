"""Cohomology of K(Z/2, n), the suspension map and its kernel and cokernel."""

from __future__ import annotations

from sqwu import em

# polynomial generators Sq^J l_n need excess(J) < n
n = 12
for d in (12, 13, 15, 27):
    basis = em.em_basis(n, d)
    print(f"H^{d}: dim {len(basis)}", [em.format_class({mon}) for mon in basis][:4])

# kernel: Sq^I l_r with excess(I) > 4m is killed on K(Z/2, 4m)
m = 3
for j in range(1, 10):
    print(j, [b.text for b in em.kernel_basis(m, j)])

# cokernel: pairs of distinct generators; at m = 2 the cube l^3 reaches j = 9
for cube in (False, True):
    row = em.coker_basis(2, 9, include_cube=cube)
    print(f"m=2 j=9 include_cube={cube}: {len(row)} classes")

# relations among the gamma classes, computed on K(Z/2, 12)
print("Sq1 g2 =", em.format_class(em.coker_word(m, (1,), "g2")))
print("Sq5 g2 =", em.format_class(em.coker_word(m, (5,), "g2")))
