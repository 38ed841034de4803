"""Admissible normal forms in the mod 2 Steenrod algebra."""

from __future__ import annotations

from sqwu import steenrod as st

# text in, formal sum out; normalize applies Adem relations until admissible
for text in ["Sq2 Sq2", "Sq2 Sq3", "Sq4 Sq3", "Sq4 Sq2 Sq13", "Sq1 Sq1 + Sq3"]:
    print(f"{text:>14}  ->  {st.format_element(st.normalize(st.parse(text)))}")

# the admissible basis in each degree, and its excess
for d in range(1, 8):
    mons = st.admissible_monomials(d)
    print(d, [f"{st.format_monomial(I)} (e={st.excess(I)})" for I in mons])

# Sq^4 Sq^(4n-2) for a few n; the coefficient of Sq^(4n+2) is binom(4n-3, 4) mod 2
for n in range(2, 7):
    print(f"n={n}", st.format_element(st.normalize((4, 4 * n - 2))))
