"""Frozen expected values for the bundled corpus.

Determinants are the classical table values; they are independent of every
code path in the package, which makes det the primary oracle for checking
that a corpus diagram really presents the knot its name claims.  Q
polynomials and Q degrees are frozen only where published exactly.
"""

# Knot determinants from the standard tables.
DETS = {
    "unknot": 1,
    "unlink2": 0,
    "hopf": 2,
    "hopf_sum": 4,
    "3_1": 3, "4_1": 5,
    "5_1": 5, "5_2": 7,
    "6_1": 9, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_2": 11, "7_3": 13, "7_4": 15, "7_5": 17, "7_6": 19, "7_7": 21,
    "8_1": 13, "8_2": 17, "8_3": 17, "8_4": 19, "8_5": 21, "8_6": 23,
    "8_7": 23, "8_8": 25, "8_9": 25, "8_10": 27, "8_11": 27, "8_12": 29,
    "8_13": 29, "8_14": 31, "8_15": 33, "8_16": 35, "8_17": 37, "8_18": 45,
    "8_19": 3, "8_20": 9, "8_21": 15,
    "10_140": 9,
}
DETS.update({f"t2_{n}": n for n in range(2, 13)})

TWELVE_CROSSING = [
    "12n0025", "12n0093", "12n0115", "12n0138", "12n0199", "12n0321",
    "12n0355", "12n0374", "12n0433", "12n0457", "12n0648",
]
DETS.update({name: 11 for name in TWELVE_CROSSING})

# Exactly published Q polynomials.
Q_POLYS = {
    "4_1": "2x^3+4x^2-2x-3",
    "hopf": "2x+1-2x^-1",
    "t2_2": "2x+1-2x^-1",
    "10_140": "2x^8+4x^7-12x^6-22x^5+24x^4+32x^3-24x^2-12x+9",
}

# Exactly published Q degrees.
Q_DEGREES = {"8_19": 6, "10_140": 8}
Q_DEGREES.update({name: 10 for name in TWELVE_CROSSING})

# Corpus entries whose diagrams are reduced alternating.
ALTERNATING = {
    "hopf", "hopf_sum",
    "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3",
    "7_1", "7_2", "7_3", "7_4", "7_5", "7_6", "7_7",
    "8_1", "8_2", "8_3", "8_4", "8_5", "8_6", "8_7", "8_8", "8_9", "8_10",
    "8_11", "8_12", "8_13", "8_14", "8_15", "8_16", "8_17", "8_18",
} | {f"t2_{n}" for n in range(2, 13)}

# Prime alternating knots in the corpus (deg Q = crossing number - 1 holds
# with equality for these).
PRIME_ALTERNATING_KNOTS = {
    name for name in ALTERNATING
    if name[0] in "345678" and "_" in name and name != "hopf_sum"
}
