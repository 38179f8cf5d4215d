"""Published reference values that the checks compare against."""

# N^(m,0) and G^(m,0), m = 1..14 (N^(m,0) = N^(28-m,0))
N_LINES = {1: 1, 2: 1, 3: 2, 4: 3, 5: 5, 6: 10, 7: 16, 8: 23, 9: 37, 10: 54, 11: 70, 12: 90, 13: 101, 14: 103}
G_LINES = {1: 1, 2: 1, 3: 2, 4: 3, 5: 5, 6: 9, 7: 16, 8: 23, 9: 37, 10: 54, 11: 70, 12: 90, 13: 101, 14: 103}

# N^(0,n), n = 1..10; G^(0,n) is only reproducible here for n <= 5
N_CONICS = {1: 1, 2: 3, 3: 9, 4: 30, 5: 112, 6: 501, 7: 2483, 8: 13791, 9: 81404, 10: 490750}
G_CONICS = {1: 1, 2: 3, 3: 7, 4: 22, 5: 71, 6: 306, 7: 1585, 8: 9831, 9: 64790, 10: 425252}

N_MIXED = {
    (1, 1): 2, (1, 2): 8, (2, 1): 4, (1, 3): 33, (2, 2): 23, (3, 1): 9, (1, 4): 162, (2, 3): 132,
    (3, 2): 66, (4, 1): 20, (1, 5): 901, (2, 4): 889, (3, 3): 508, (4, 2): 190, (5, 1): 45,
    (1, 6): 5674, (2, 5): 6503, (3, 4): 4348, (4, 3): 1854, (5, 2): 531, (6, 1): 103,
}
G_MIXED = {
    (1, 1): 2, (1, 2): 8, (2, 1): 3, (1, 3): 30, (2, 2): 17, (3, 1): 8, (1, 4): 140, (2, 3): 95,
    (3, 2): 57, (4, 1): 17, (1, 5): 753, (2, 4): 670, (3, 3): 430, (4, 2): 164, (5, 1): 42,
    (1, 6): 4829, (2, 5): 5259, (3, 4): 3812, (4, 3): 1649, (5, 2): 501, (6, 1): 96,
}

ORBIT_SIZES = {
    (4, 0): [315, 5040, 15120],
    (0, 4): [63] + [945] * 3 + [1008] * 2 + [1890, 2016] + [3780] * 2 + [5040] * 2 + [10080, 11340]
            + [15120] * 5 + [22680] + [30240] * 5 + [45360] * 2 + [90720] + [120960] * 2,
    (2, 2): [378, 1890] + [3780] * 3 + [6048] + [7560] * 2 + [12096] * 2 + [15120, 22680] + [30240] * 3
            + [45360] * 2 + [60480] * 4 + [120960] * 2,
    (6, 0): [2016, 1008, 30240, 60480, 22680, 181440, 5040, 12096, 60480, 1260],
    (0, 3): [63, 1890, 2016, 3780, 315, 15120, 15120, 5040, 336],
}

# six-line orbits: (orbit size, |T|, a0, a1, a2); the first two rows share their two-graph
SIX_LINE_STATS = [
    (2016, 0, 0, 0, 0),
    (1008, 0, 0, 0, 0),
    (30240, 4, 0, 0, 6),
    (60480, 6, 0, 6, 9),
    (22680, 8, 2, 10, 16),
    (181440, 8, 2, 14, 12),
    (5040, 8, 4, 12, 12),
    (12096, 10, 0, 30, 15),
    (60480, 10, 2, 24, 19),
    (1260, 12, 6, 30, 30),
]

# three conics: sorted conic-pair labels -> orbit sizes
THREE_CONIC_LABELS = {
    "AAA": [63], "ABB": [1890], "ACC": [2016], "BBB": [3780, 315],
    "BBC": [15120], "BCC": [15120], "CCC": [5040, 336],
}

_a, _b = "α", "β"
# two lines, two conics: (line-conic label matrix up to row/column swaps, conic-pair label) -> orbit sizes
TWO_TWO_SIGNATURES = {
    (((_a, _a), (_a, _a)), "A"): [3780, 378],
    (((_a, _a), (_a, _a)), "B"): [3780, 1890],
    (((_a, _a), (_a, _a)), "C"): [15120],
    (((_a, _a), (_a, _b)), "B"): [60480],
    (((_a, _a), (_a, _b)), "C"): [60480, 12096],
    (((_a, _a), (_b, _b)), "A"): [12096],
    (((_a, _a), (_b, _b)), "B"): [30240],
    (((_a, _a), (_b, _b)), "C"): [60480],
    (((_a, _b), (_a, _b)), "B"): [45360, 7560],
    (((_a, _b), (_a, _b)), "C"): [30240],
    (((_a, _b), (_b, _a)), "B"): [60480],
    (((_a, _b), (_b, _a)), "C"): [30240, 6048],
    (((_a, _b), (_b, _b)), "B"): [120960],
    (((_a, _b), (_b, _b)), "C"): [120960],
    (((_b, _b), (_b, _b)), "A"): [7560],
    (((_b, _b), (_b, _b)), "B"): [22680, 3780],
    (((_b, _b), (_b, _b)), "C"): [45360],
}

# complements of the two six-line orbits with equal two-graphs
COMPLEMENT_TRIANGLES = 600
COMPLEMENT_DISJOINT_TRIPLES = {2016: 8203640, 1008: 8203760}

FACES = {7: 56, 6: 756, 5: 4032, 4: 10080, 3: 12096, 2: 6048}
RAYS_7A1 = 576
RAYS_6A1_TILDE = 126
