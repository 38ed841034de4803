"""The glued module on a1, a2, a4, a8 and the gamma generators."""

from __future__ import annotations

from sqwu.cpsi import build_cpsi, dims_for_pins, sq4a4_text

cp = build_cpsi(3)
print("dims:", [cp.dim(j) for j in range(1, 10)])

# the Sq4 a4 relation is known up to a degree-8 cokernel class, carried as p1..p13
d, v = cp.element(sq4a4_text(3))
print(f"Sq4 a4 + ... in degree {d}:", cp.window.format(d, v))

# consequences that do not depend on those unknowns
for text in ["Sq3 a2", "Sq3 Sq1 a2", "Sq4 Sq1 a2", "Sq5 Sq2 a2"]:
    d, v = cp.element(text)
    print(f"{text:>12} = {cp.window.format(d, v)}")

# which coefficients of the Sq3 a1 relation give the right dimensions
for pins in [(0, 1, 0), (0, 0, 0), (0, 1, 1)]:
    print(pins, dims_for_pins(3, pins))
