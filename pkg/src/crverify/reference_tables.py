"""Published character-table rows used as acceptance targets.

Each entry records the element order heading every printed column and the
printed rows in that column order.  These values are never fed into the
table computation; they are only compared against it.
"""

from __future__ import annotations

from .exactnum import Cyclotomic

SQRT_M7 = Cyclotomic.sqrt_rational(-7)
SQRT_M11 = Cyclotomic.sqrt_rational(-11)
SQRT_5 = Cyclotomic.sqrt_rational(5)

#: (-1 + sqrt(-7))/2 and its complex conjugate
ALPHA_7 = (SQRT_M7 - 1) / 2
ALPHA_7_BAR = ALPHA_7.conjugate()
#: (-1 + sqrt(-11))/2 and its complex conjugate
BETA_11 = (SQRT_M11 - 1) / 2
BETA_11_BAR = BETA_11.conjugate()
#: (1 - sqrt 5)/2 and (1 + sqrt 5)/2
ALPHA_5 = (1 - SQRT_5) / 2
ALPHA_5_STAR = (1 + SQRT_5) / 2


A7 = {
    "group": "A7",
    "columns": ["C1", "C2", "C3'", "C6", "C3''", "C4", "C5", "C7'", "C7''"],
    "orders": [1, 2, 3, 6, 3, 4, 5, 7, 7],
    "rows": {
        "chi2": [6, 2, 3, -1, 0, 0, 1, -1, -1],
        "chi3": [10, -2, 1, 1, 1, 0, 0, ALPHA_7, ALPHA_7_BAR],
        "chi4": [10, -2, 1, 1, 1, 0, 0, ALPHA_7_BAR, ALPHA_7],
    },
}

S5 = {
    "group": "S5",
    "columns": ["C1", "C2'", "C2''", "C3", "C6", "C4", "C5"],
    "orders": [1, 2, 2, 3, 6, 4, 5],
    "rows": {
        "chi1'": [1, -1, 1, 1, -1, -1, 1],
        "chi2'": [4, -2, 0, 1, 1, 0, -1],
        "chi3'": [5, -1, 1, -1, -1, 1, 0],
        "chi4'": [6, 0, -2, 0, 0, 0, 1],
        "chi5'": [5, 1, 1, -1, 1, -1, 0],
        "chi6'": [4, 2, 0, 1, -1, 0, -1],
        "chi7'": [1, 1, 1, 1, 1, 1, 1],
    },
}

PSL2_11 = {
    "group": "PSL2(11)",
    "columns": ["C1", "C5'", "C5''", "C11'", "C11''", "C2", "C3", "C6"],
    "orders": [1, 5, 5, 11, 11, 2, 3, 6],
    "rows": {
        "chi2": [5, 0, 0, BETA_11, BETA_11_BAR, 1, -1, 1],
        "chi3": [5, 0, 0, BETA_11_BAR, BETA_11, 1, -1, 1],
        "chi4": [10, 0, 0, -1, -1, -2, 1, 1],
        "chi5": [10, 0, 0, -1, -1, 2, 1, -1],
    },
}

A5 = {
    "group": "A5",
    "columns": ["C1", "C2", "C3", "C5'", "C5''"],
    "orders": [1, 2, 3, 5, 5],
    "rows": {
        "chi2'": [3, -1, 0, ALPHA_5, ALPHA_5_STAR],
        "chi3'": [3, -1, 0, ALPHA_5_STAR, ALPHA_5],
        "chi4'": [4, 0, 1, -1, -1],
        "chi5'": [5, 1, -1, 0, 0],
    },
}

PRINTED_TABLES = {"A7": A7, "S5": S5, "PSL2(11)": PSL2_11, "A5": A5}

#: the restriction of the degree-10 A7 character to S5, in the S5 column order above
A7_DEG10_ON_S5 = [10, -2, -2, 1, 1, 0, 0]
