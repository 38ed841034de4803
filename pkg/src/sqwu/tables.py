"""Reference dimensions and bases for the kernel, cokernel, mapping-cone and
Thom-module windows, indexed by relative degree j."""

from __future__ import annotations

TABLE1_DIMS = {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 5, 8: 5, 9: 7}
TABLE2_DIMS = {1: 0, 2: 1, 3: 1, 4: 3, 5: 4, 6: 6, 7: 8, 8: 13, 9: 16}
TABLE3_DIMS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 9, 7: 13, 8: 18, 9: 23}
TABLE4_DIMS = {0: 1, 1: 0, 2: 1, 3: 0, 4: 2, 5: 0, 6: 3, 7: 1, 8: 5}

# m = 2 drops the cube l^3 from the cokernel in j = 9
TABLE2_DIMS_M2 = {**TABLE2_DIMS, 9: 15}
TABLE3_DIMS_M2 = {**TABLE3_DIMS, 9: 22}

# Kernel bases as A-words on alpha_1, alpha_2, alpha_4, alpha_8, indexed by j.
KERNEL_WORDS: dict[int, list[str]] = {
    1: ["a1"],
    2: ["a2"],
    3: ["Sq2 a1", "Sq1 a2"],
    4: ["Sq3 a1", "a4"],
    5: ["Sq4 a1", "Sq2 Sq1 a2", "Sq1 a4"],
    6: ["Sq5 a1", "Sq4 a2", "Sq2 a4"],
    7: ["Sq6 a1", "Sq4 Sq2 a1", "Sq5 a2", "Sq3 a4", "Sq2 Sq1 a4"],
    8: ["Sq7 a1", "Sq5 Sq2 a1", "Sq6 a2", "Sq3 Sq1 a4", "a8"],
    9: ["Sq8 a1", "Sq6 Sq2 a1", "Sq7 a2", "Sq6 Sq1 a2", "Sq4 Sq2 Sq1 a2", "Sq4 Sq1 a4", "Sq1 a8"],
}

# Cokernel bases as A-words on the gamma generators.
COKER_WORDS: dict[int, list[str]] = {
    2: ["g2"],
    3: ["g3"],
    4: ["Sq2 g2", "Sq1 g3", "g4"],
    5: ["Sq3 g2", "Sq2 g3", "Sq1 g4", "g5"],
    6: ["Sq4 g2", "Sq3 g3", "Sq2 Sq1 g3", "Sq2 g4", "Sq1 g5", "g6"],
    7: ["Sq5 g2", "Sq4 g3", "Sq3 g4", "Sq2 Sq1 g4", "Sq2 g5", "Sq1 g6", "g7", "g71"],
    8: ["Sq6 g2", "Sq4 Sq2 g2", "Sq5 g3", "Sq4 Sq1 g3", "Sq4 g4", "Sq3 Sq1 g4",
        "Sq3 g5", "Sq2 Sq1 g5", "Sq2 g6", "Sq1 g7", "Sq1 g71", "g8", "g81"],
    9: ["Sq7 g2", "Sq5 Sq2 g2", "Sq6 g3", "Sq4 Sq2 g3", "Sq5 g4", "Sq4 Sq1 g4",
        "Sq4 g5", "Sq3 Sq1 g5", "Sq3 g6", "Sq2 Sq1 g6", "Sq2 g7", "Sq2 g71",
        "Sq1 g8", "Sq1 g81", "g9", "g91"],
}


TABLE3_WORDS: dict[int, list[str]] = {
    j: KERNEL_WORDS[j] + COKER_WORDS.get(j, []) for j in KERNEL_WORDS
}

TABLE4_WORDS: dict[int, list[str]] = {
    0: ["U"],
    2: ["Sq2 U"],
    4: ["Sq4 U", "U4"],
    6: ["Sq6 U", "Sq4 Sq2 U", "Sq2 U4"],
    7: ["Sq7 U"],
    8: ["Sq8 U", "Sq6 Sq2 U", "Sq4 U4", "U81", "U82"],
}


def table2_dims(m: int, include_cube: bool = False) -> dict[int, int]:
    return TABLE2_DIMS_M2 if m == 2 and not include_cube else TABLE2_DIMS


def table3_dims(m: int, include_cube: bool = False) -> dict[int, int]:
    return TABLE3_DIMS_M2 if m == 2 and not include_cube else TABLE3_DIMS


def coker_words(m: int, j: int, include_cube: bool = False) -> list[str]:
    words = COKER_WORDS.get(j, [])
    if m == 2 and j == 9 and not include_cube:
        words = [w for w in words if w != "g9"]
    return words


def table3_words(m: int, j: int, include_cube: bool = False) -> list[str]:
    return KERNEL_WORDS[j] + coker_words(m, j, include_cube)
