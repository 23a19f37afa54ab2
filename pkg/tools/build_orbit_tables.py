"""Regenerate src/hecke_unitary/data/orbits.json from the transcription below.

Each row: (label, constant, [column per nu_i], factor kinds, provenance, options).
Vectors are written as comma-separated rationals; "h" is the all-halves
hermitian direction used throughout the E6 table.
"""
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

Z = "0,0,0,0,0,0,0,0"
H6 = "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2"


def v(s):
    out = [str(Fraction(x.strip())) for x in s.split(",")]
    if len(out) != 8:
        raise SystemExit(f"bad vector {s!r}")
    return out


def lin(*terms):
    """Sum of (coefficient, vector) pairs, for columns printed as mixed expressions."""
    acc = [Fraction(0)] * 8
    for c, s in terms:
        for i, x in enumerate(s.split(",")):
            acc[i] += Fraction(c) * Fraction(x)
    return ",".join(str(x) for x in acc)


def e(*pairs):
    acc = [Fraction(0)] * 8
    for c, i in pairs:
        acc[i - 1] += Fraction(c)
    return ",".join(str(x) for x in acc)


E6 = [
    ("E6", "0,1,2,3,4,-4,-4,4", [], [], "Table E6 row E_6"),
    ("E6(a1)", "0,1,1,2,3,-3,-3,3", [], [], "Table E6 row E_6(a_1)"),
    ("D5", "1/2,1/2,3/2,3/2,5/2,-5/2,-5/2,5/2", [], ["T1"], "Table E6 row D_5"),
    ("E6(a3)", "0,0,1,1,2,-2,-2,2", [], [], "Table E6 row E_6(a_3)"),
    ("D5(a1)", "1/4,3/4,3/4,5/4,7/4,-7/4,-7/4,7/4", [], ["T1"], "Table E6 row D_5(a_1)",
     {"repairs": ["printed with 7 coordinates; fifth coordinate 7/4 restored (hermitian, in span)"]}),
    ("A5", "-11/4,-7/4,-3/4,1/4,5/4,-5/4,-5/4,5/4", [H6], ["A1"], "Table E6 row A_5"),
    ("A4+A1", "0,1/2,1/2,1,3/2,-3/2,-3/2,3/2", [], ["T1"], "Table E6 row A_4+A_1"),
    ("D4", "0,1,2,3,0,0,0,0", ["0,0,0,0,1,-1,-1,1"], ["A2"], "Table E6 row D_4"),
    ("A4", "-2,-1,0,1,2,0,0,0", [H6], ["A1", "T1"], "Table E6 row A_4"),
    ("D4(a1)", "0,0,1,1,1,-1,-1,1", [], ["T2"], "Table E6 row D_4(a_1)"),
    ("A3+A1", "-5/4,-1/4,3/4,-5/4,-1/4,-3/4,-3/4,3/4", [H6], ["A1", "T1"], "Table E6 row A_3+A_1"),
    ("2A2+A1", "0,1,-3/2,-1/2,1/2,-1/2,-1/2,1/2", ["0,0,1,1,1,-1,-1,1"], ["A1"], "Table E6 row 2A_2+A_1"),
    ("A3", "-3/2,-1/2,1/2,3/2,0,0,0,0",
     ["1/2,1/2,1/2,1/2,0,0,0,0", "0,0,0,0,1/2,-1/2,-1/2,1/2"], ["B2", "T1"], "Table E6 row A_3"),
    ("A2+2A1", "5/4,-1/4,3/4,-3/4,1/4,-1/4,-1/4,1/4", ["-1/2,1/2,1/2,3/2,3/2,-3/2,-3/2,3/2"],
     ["A1", "T1"], "Table E6 row A_2+2A_1"),
    ("2A2", "-1/2,1/2,-3/2,-1/2,1/2,-1/2,-1/2,1/2",
     ["0,0,1,1,1,-1,-1,1", "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2"], ["G2"], "Table E6 row 2A_2"),
    ("A2+A1", "-1/2,1/2,-1,0,-1/2,-1/2,-1/2,1/2", [H6], ["A2", "T1"], "Table E6 row A_2+A_1"),
    ("A2", "0,-1,0,1,0,0,0,0",
     ["-1/2,-1/2,-1/2,-1/2,1/2,-1/2,-1/2,1/2", "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2"], ["A2", "A2"],
     "Table E6 row A_2",
     {"repairs": ["sixth and seventh coordinates printed as (-nu1+nu2)/2; read as -(nu1+nu2)/2 so the point stays in the E6 span"],
      "note": "centralizer 2A_2 read as two hermitian A_2 factors, one slot each"}),
    ("3A1", "0,1,-1/2,1/2,0,0,0,0", ["0,0,0,0,1,-1,-1,1", "0,0,1,1,0,0,0,0"], ["A2", "A1"],
     "Table E6 row 3A_1",
     {"repairs": ["third coordinate printed as nu1; read as nu2 so both directions are orthogonal to h"]}),
    ("2A1", "-1/2,1/2,-1/2,1/2,0,0,0,0",
     ["-1/2,-1/2,1/2,1/2,1/2,-1/2,-1/2,1/2", "1/2,1/2,1/2,1/2,0,0,0,0"], ["B3", "T1"],
     "Table E6 row 2A_1",
     {"unsupported": "two printed parameters for a B_3 centralizer factor"}),
    ("A1", "1/2,1/2,0,0,0,0,0,0",
     ["-1/2,1/2,-1/2,1/2,1/2,-1/2,-1/2,1/2", "1/2,-1/2,1/2,-1/2,1/2,-1/2,-1/2,1/2", "0,0,1,1,0,0,0,0"],
     ["A5"], "Table E6 row A_1"),
]

W7 = "0,0,0,0,0,1,-1/2,1/2"  # recurring E7 direction
L7 = "0,0,0,0,0,0,-1,1"
E7 = [
    ("E7", "0,1,2,3,4,5,-17/2,17/2", [], [], "Table E7 row E_7"),
    ("E7(a1)", "0,1,1,2,3,4,-13/2,13/2", [], [], "Table E7 row E_7(a_1)"),
    ("E7(a2)", "0,1,1,2,2,3,-11/2,11/2", [], [], "Table E7 row E_7(a_2)"),
    ("E7(a3)", "0,0,1,1,2,3,-9/2,9/2", [], [], "Table E7 row E_7(a_3)"),
    ("E6", "0,1,2,3,4,-4,-4,4", [W7], ["A1l"], "Table E7 row E_6"),
    ("D6", "0,1,2,3,4,5,0,0", [L7], ["A1"], "Table E7 row D_6"),
    ("E6(a1)", "0,1,1,2,3,-3,-3,3", [W7], ["T1"], "Table E7 row E_6(a_1)"),
    ("E7(a4)", "0,0,1,1,1,2,-7/2,7/2", [], [], "Table E7 row E_7(a_4)"),
    ("D6(a1)", "0,1,1,2,3,4,0,0", [L7], ["A1"], "Table E7 row D_6(a_1)"),
    ("A6", "-7/2,-5/2,-3/2,-1/2,1/2,3/2,-3/2,3/2", ["1/2,1/2,1/2,1/2,1/2,1/2,-1,1"], ["A1l"],
     "Table E7 row A_6"),
    ("D5+A1", "0,1,2,3,-5/2,-3/2,-2,2", ["0,0,0,0,1,1,-1,1"], ["A1"], "Table E7 row D_5+A_1"),
    ("E7(a5)", "0,0,1,1,1,2,-5/2,5/2", [], [], "Table E7 row E_7(a_5)"),
    ("D6(a2)", "0,1,1,2,2,3,0,0", [L7], ["A1"], "Table E7 row D_6(a_2)"),
    ("A5+A1", "11/4,-7/4,-3/4,1/4,5/4,9/4,-1/4,1/4", ["-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2"], ["A1"],
     "Table E7 row A_5+A_1"),
    ("D5", "0,1,2,3,-2,-2,-2,2", ["0,0,0,0,1,1,-1,1", "0,0,0,0,-1,1,0,0"], ["A1", "A1"],
     "Table E7 row D_5"),
    ("E6(a3)", "0,0,1,1,2,-2,-2,2", [W7], ["A1l"], "Table E7 row E_6(a_3)"),
    ("D5(a1)+A1", "0,1,1,2,-2,-1,-3/2,3/2", ["0,0,0,0,1,1,-1,1"], ["A1l"], "Table E7 row D_5(a_1)A_1"),
    ("(A5)'", "-5/2,-3/2,-1/2,1/2,3/2,5/2,0,0", [L7, "1/2,1/2,1/2,1/2,1/2,1/2,0,0"], ["A1", "A1l"],
     "Table E7 row (A_5)'"),
    ("A4+A2", "0,1,2,-2,-1,0,-1,1", ["0,0,0,1,1,1,-3/2,3/2"], ["A1l"], "Table E7 row A_4+A_2"),
    ("(A5)''", "5/2,-3/2,-1/2,1/2,3/2,5/2,0,0", ["-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2", L7], ["G2"],
     "Table E7 row (A_5)''"),
    ("D5(a1)", "0,1,1,2,3,0,0,0", [L7, W7], ["A1", "T1"], "Table E7 row D_5(a_1)"),
    ("A4+A1", "9/4,-5/4,-1/4,3/4,7/4,-1/4,-1/4,1/4", ["-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2", W7], ["T2"],
     "Table E7 row A_4+A_1",
     {"repairs": ["seventh coordinate printed as -1/2; read as -1/4 so the point stays in the E7 span",
                  "nu1 direction printed as (1/2 x6,-1,1), which is not orthogonal to h; replaced by the "
                  "centre direction (-1/2,1/2 x5,-3/2,3/2) of the A_4+A_1 Levi"]}),
    ("D4+A1", "0,1,2,3,-1/2,1/2,0,0", ["0,0,0,0,-1/2,-1/2,-1/2,1/2", "0,0,0,0,1/2,1/2,-1/2,1/2"], ["B2"],
     "Table E7 row D_4+A_1"),
    ("A3+A2+A1", "0,1,-2,-1,0,1,-1/2,1/2", ["0,0,1,1,1,1,-2,2"], ["A1"], "Table E7 row A_3A_2A_1"),
    ("A4", "0,-2,-1,0,1,2,0,0", [L7, "-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2", "1/2,1/2,1/2,1/2,1/2,1/2,-1,1"],
     ["A2", "T1"], "Table E7 row A_4"),
    ("A3+A2", "0,1,2,-1,0,1,0,0", [L7, "0,0,0,1,1,1,0,0"], ["A1", "T1"], "Table E7 row A_3+A_2"),
    ("D4", "0,1,2,3,0,0,0,0", ["0,0,0,0,-1,1,0,0", "0,0,0,0,1,1,0,0", L7], ["C3"], "Table E7 row D_4"),
    ("D4(a1)+A1", "0,1,1,2,-1/2,1/2,0,0", [L7, "0,0,0,0,1,1,0,0"], ["A1", "A1"],
     "Table E7 row D_4(a_1)A_1"),
    ("A3+2A1", "0,1,-3/2,-1/2,1/2,3/2,0,0", [L7, "0,0,1,1,1,1,0,0"], ["A1", "A1"],
     "Table E7 row A_3+2A_1"),
    ("D4(a1)", "0,1,1,2,0,0,0,0", [L7, "0,0,0,0,1,1,0,0", "0,0,0,0,-1,1,0,0"], ["A1", "A1", "A1"],
     "Table E7 row D_4(a_1)"),
    ("(A3+A1)'", "0,1,2,0,-1/2,1/2,0,0", [L7, "0,0,0,2,0,0,0,0", "0,0,0,0,1,1,0,0"], ["A1", "A1", "A1"],
     "Table E7 row (A_3+A_1)'"),
    ("2A2+A1", "5/4,-1/4,3/4,-5/4,-1/4,3/4,-1/4,1/4",
     ["1,-1,-1,1,1,1,0,0", "-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2"], ["A1", "A1"], "Table E7 row 2A_2+A_1"),
    ("(A3+A1)''", "3/2,-1/2,1/2,3/2,-1/2,1/2,0,0",
     ["-1/2,1/2,1/2,1/2,0,0,0,0", "0,0,0,0,-1/2,-1/2,-1/2,1/2", "0,0,0,0,1/2,1/2,-1/2,1/2"], ["B3"],
     "Table E7 row (A_3+A_1)''"),
    ("A2+3A1", "0,1,-1,0,-1,0,-1/2,1/2", ["0,0,1,1,1,1,-2,2", "0,0,0,0,1,1,-1,1"], ["G2"],
     "Table E7 row A_2+3A_1"),
    ("2A2", "-1/2,1/2,-3/2,-1/2,1/2,-1/2,-1/2,1/2",
     ["0,0,1,1,1,-1,-1,1", "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2", W7], ["G2", "A1"], "Table E7 row 2A_2"),
    ("A3", "0,1,2,0,0,0,0,0", [e((1, 4)), e((1, 5)), e((1, 6)), L7], ["B3", "A1"], "Table E7 row A_3",
     {"repairs": ["printed with 7 coordinates (0,1,2,nu1,nu2,nu3,nu4); read as (0,1,2,nu1,nu2,nu3,-nu4,nu4)"]}),
    ("A2+2A1", "0,1,-1,0,1,0,0,0", [L7, "0,0,1,1,1,0,0,0", "0,0,0,0,0,1,0,0"], ["A1", "A1l", "A1l"],
     "Table E7 row *A_2+2A_1; regions from the E7 exception list", {"starred": True}),
    ("A2+A1", "1,0,1,0,-1/2,1/2,0,0",
     [L7, "0,0,0,0,1,1,0,0", "0,0,0,1,1,1,-3/2,3/2", "-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2"], ["A3", "T1"],
     "Table E7 row A_2+A_1"),
    ("4A1", "0,1,-1/2,1/2,-1/2,1/2,0,0", [L7, "0,0,0,0,1,1,0,0", "0,0,1,1,0,0,0,0"], ["C3"],
     "Table E7 row 4A_1"),
    ("A2", "1,0,1,0,0,0,0,0",
     [L7, "0,0,0,0,1,1,0,0", "0,0,0,0,-1,1,0,0", "-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2",
      "0,0,0,1,1,1,-3/2,3/2"], ["A5"], "Table E7 row A_2"),
    ("(3A1)'", "-1/2,1/2,-1/2,1/2,-1/2,1/2,0,0",
     ["1,1,0,0,0,0,0,0", "0,0,1,1,0,0,0,0", "0,0,0,0,1,1,0,0", L7], ["C3", "A1"], "Table E7 row (3A_1)'"),
    ("(3A1)''", "1/2,1/2,-1/2,1/2,-1/2,1/2,0,0",
     [L7, "0,0,0,0,1,1,0,0", "0,0,1,1,0,0,0,0", "-1,1,0,0,0,0,0,0"], ["F4"], "Table E7 row (3A_1)''"),
    ("2A1", "0,1,0,0,0,0,0,0", [e((1, 3)), e((1, 4)), e((1, 5)), e((1, 6)), L7], ["B4", "A1"],
     "Table E7 row 2A_1"),
    ("A1", "0,0,0,0,-1/2,1/2,0,0",
     ["1/2,1/2,1/2,-1/2,0,0,0,0", "1/2,1/2,-1/2,1/2,0,0,0,0", "1/2,-1/2,1/2,1/2,0,0,0,0",
      "-1/2,1/2,1/2,1/2,0,0,0,0", "0,0,0,0,-1/2,-1/2,-1/2,1/2", "0,0,0,0,1/2,1/2,-1/2,1/2"], ["D6"],
     "Table E7 row A_1"),
]

W8 = "0,0,0,0,0,0,1,1"  # coweight 8
V1 = "0,0,0,0,0,0,0,2"  # coweight 1
V7 = "0,0,0,0,0,1,1,2"  # coweight 7
E8 = [
    ("E8", "0,1,2,3,4,5,6,23", [], [], "Table E8 row E_8"),
    ("E8(a1)", "0,1,1,2,3,4,5,18", [], [], "Table E8 row E_8(a_1)"),
    ("E8(a2)", "0,1,1,2,2,3,4,15", [], [], "Table E8 row E_8(a_2)"),
    ("E8(a3)", "0,0,1,1,2,3,4,13", [], [], "Table E8 row E_8(a_3)"),
    ("E8(a4)", "0,0,1,1,2,2,3,11", [], [], "Table E8 row E_8(a_4)"),
    ("E7", "0,1,2,3,4,5,-17/2,17/2", [W8], ["A1"], "Table E8 row E_7; maximal parabolic, type 1"),
    ("E8(b4)", "0,0,1,1,1,2,3,10", [], [], "Table E8 row E_8(b_4)"),
    ("E8(a5)", "0,0,1,1,1,2,2,9", [], [], "Table E8 row E_8(a_5)"),
    ("E7(a1)", "0,1,1,2,3,4,-13/2,13/2", [W8], ["A1"], "Table E8 row E_7(a_1); maximal parabolic, type 1"),
    ("E8(b5)", "0,0,1,1,1,2,3,8", [], [], "Table E8 row E_8(b_5)"),
    ("D7", "0,1,2,3,4,5,6,0", [V1], ["A1"], "Table E8 row D_7; maximal parabolic, type 1"),
    ("E8(a6)", "0,0,1,1,1,2,2,7", [], [], "Table E8 row E_8(a_6)"),
    ("E7(a2)", "0,1,1,2,2,3,-11/2,11/2", [W8], ["A1"], "Table E8 row E_7(a_2); maximal parabolic, type 1"),
    ("E6+A1", "0,1,2,3,4,-9/2,-7/2,4", [V7], ["A1"], "Table E8 row E_6+A_1; maximal parabolic, type 2",
     {"repairs": ["direction printed with 9 entries; read as coweight 7 = (0,0,0,0,0,1,1,2) as in the maximal parabolic table"]}),
    ("D7(a1)", "0,1,1,2,3,4,5,0", [V1], ["T1"], "Table E8 row D_7(a_1); maximal parabolic, torus"),
    ("E8(b6)", "0,0,1,1,1,1,2,6", [], [], "Table E8 row E_8(b_6)"),
    ("E7(a3)", "0,0,1,1,2,3,-9/2,9/2", [W8], ["A1"], "Table E8 row E_7(a_3); maximal parabolic, type 2"),
    ("E6(a1)+A1", "0,1,1,2,3,-7/2,-5/2,3", [V7], ["T1"],
     "Table E8 row E_6(a_1)A_1; maximal parabolic, torus"),
    ("A7", "-17/4,-13/4,-9/4,-5/4,-1/4,3/4,7/4,7/4", ["1/2,1/2,1/2,1/2,1/2,1/2,1/2,5/2"], ["A1"],
     "Table E8 row A_7; maximal parabolic, type 1",
     {"repairs": ["centralizer printed as T_1; the maximal parabolic table lists A_7 with centralizer A_1 and endpoint 1/2"]}),
    ("E6", "0,1,2,3,4,-4,-4,4", [V7, W8], ["G2"], "Table E8 row E_6"),
    ("D6", "0,1,2,3,4,5,0,0", [e((1, 7)), e((1, 8))], ["B2"], "Table E8 row D_6"),
    ("D5+A2", "0,1,2,3,-3,-2,-1,2", ["0,0,0,0,1,1,1,3"], ["T1"], "Table E8 row D_5+A_2; maximal parabolic, torus"),
    ("E6(a1)", "0,1,1,2,3,-3,-3,3", [W8, V7], ["A2"], "Table E8 row E_6(a_1)"),
    ("E7(a4)", "0,0,1,1,1,2,-7/2,7/2", [W8], ["A1"], "Table E8 row E_7(a_4); maximal parabolic, type 2"),
    ("A6+A1", "13/4,-9/4,-5/4,-1/4,3/4,7/4,11/4,1/4", ["-1/2,1/2,1/2,1/2,1/2,1/2,1/2,7/2"], ["A1"],
     "Table E8 row A_6+A_1; maximal parabolic, type 2"),
    ("D6(a1)", "0,1,1,2,3,4,0,0", ["0,0,0,0,0,0,-1,1", W8], ["A1", "A1"], "Table E8 row D_6(a_1)",
     {"repairs": ["second direction printed without its parameter; read as nu2"]}),
    ("A6", "-3,-2,-1,0,1,2,3,0", ["-1/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2,7/2", "1/2,1/2,1/2,1/2,1/2,1/2,1/2,1/2"],
     ["A1", "A1"], "Table E8 row A_6",
     {"repairs": ["nu1 direction printed with 7 entries; read as (-1/2 x7, 7/2), orthogonal to h"]}),
    ("E8(a7)", "0,0,0,1,1,1,1,4", [], [], "Table E8 row E_8(a_7)"),
    ("D5+A1", "0,1,2,3,4,-1/2,1/2,0", [V1, "0,0,0,0,0,1,1,0"], ["A1", "A1"], "Table E8 row D_5+A_1"),
    ("E7(a5)", "0,0,1,1,1,2,-5/2,5/2", [W8], ["A1"], "Table E8 row E_7(a_5); maximal parabolic, type 1"),
    ("E6(a3)+A1", "0,0,1,1,2,-5/2,-3/2,2", [V7], ["A1"],
     "Table E8 row E_6(a_3)A_1; maximal parabolic, type 2"),
    ("D6(a2)", "0,1,1,2,2,3,0,0", ["0,0,0,0,0,0,-1,1", W8], ["A1", "A1"], "Table E8 row D_6(a_2)"),
    ("D5(a1)+A2", "0,1,1,2,-5/2,-3/2,-1/2,3/2", ["0,0,0,0,1,1,1,3"], ["A1"],
     "Table E8 row D_5(a_1)A_2; maximal parabolic, type 2"),
    ("A5+A1", "1/4,-11/4,-7/4,-3/4,1/4,5/4,9/4,1/4", ["3/2,1/2,1/2,1/2,1/2,1/2,1/2,3/2", "-1,0,0,0,0,0,0,1"],
     ["A1", "A1"], "Table E8 row A_5+A_1"),
    ("A4+A3", "0,1,2,-5/2,-3/2,-1/2,1/2,1", ["0,0,0,1,1,1,1,4"], ["A1"],
     "Table E8 row A_4+A_3; maximal parabolic, type 2"),
    ("D5", "0,1,2,3,4,0,0,0", [e((1, 6)), e((1, 7)), e((1, 8))], ["B3"], "Table E8 row D_5"),
    ("E6(a3)", "0,0,1,1,2,-2,-2,2", [V7, W8], ["G2"], "Table E8 row E_6(a_3)"),
    ("D4+A2", "0,1,2,3,-1,0,1,0", [V1, "0,0,0,0,1,1,1,3"], ["A2"], "Table E8 row D_4+A_2"),
    ("A4+A2+A1", "0,1,-5/2,-3/2,-1/2,1/2,3/2,1/2", ["0,0,1,1,1,1,1,5"], ["A1"],
     "Table E8 row *A_4A_2A_1; maximal parabolic section", {"starred": True}),
    ("D5(a1)+A1", "0,1,1,2,3,-1/2,1/2,0", [V1, "0,0,0,0,0,1,1,0"], ["A1l", "A1"],
     "Table E8 row *D_5(a_1)A_1", {"starred": True}),
    ("A5", "5/2,-3/2,-1/2,1/2,3/2,5/2,0,0", ["-1/2,1/2,1/2,1/2,1/2,1/2,-3/2,3/2", "0,0,0,0,0,0,-1,1", W8],
     ["G2", "A1"], "Table E8 row A_5"),
    ("A4+A2", "-1/2,1/2,-5/2,-3/2,-1/2,1/2,3/2,1/2", ["0,0,1,1,1,1,1,5", "1,1,0,0,0,0,0,0"], ["A1", "A1"],
     "Table E8 row *A_4+A_2", {"starred": True}),
    ("A4+2A1", "0,1,-2,-1,0,1,2,0", [V1, "0,0,1,1,1,1,1,0"], ["A1", "T1"], "Table E8 row A_4+2A_1",
     {"repairs": ["missing + before the nu2 term"]}),
    ("D5(a1)", "0,1,1,2,3,0,0,0", [e((1, 8)), e((1, 7)), e((1, 6))], ["A3"], "Table E8 row D_5(a_1)"),
    ("2A3", "0,1,2,-3/2,-1/2,1/2,3/2,0", ["0,0,0,1/2,1/2,1/2,1/2,1"], ["B2"], "Table E8 row 2A_3",
     {"unsupported": "only one printed parameter (nu2) for a B_2 centralizer factor"}),
    ("A4+A1", "0,1,2,-3/2,-1/2,-1,-1,1", [W8, V7, "0,0,0,1,1,1,1,4"], ["A2", "T1"], "Table E8 row A_4+A_1"),
    ("D4(a1)+A2", "0,1,1,2,-1,0,1,0", ["0,0,0,0,1,1,1,3", V1], ["A2"], "Table E8 row D_4(a_1)A_2"),
    ("D4+A1", "0,1,2,3,-1/2,1/2,0,0", ["0,0,0,0,1,1,0,0", "0,0,0,0,0,0,-1,1", W8], ["C3"],
     "Table E8 row D_4+A_1"),
    ("A3+A2+A1", "0,1,-2,-1,0,1,-1/2,1/2", ["0,0,1,1,1,1,-2,2", W8], ["A1", "A1"], "Table E8 row A_3A_2A_1"),
    ("A4", "0,0,-2,-1,0,1,2,0", ["0,-1,0,0,0,0,0,1", "0,1,0,0,0,0,0,1", "0,0,1,1,1,1,1,0", e((1, 1))],
     ["A4"], "Table E8 row A_4",
     {"repairs": ["constant printed as (0,-2,-1,0,1,2,0,0); shifted to (0,0,-2,-1,0,1,2,0) to match the "
                  "printed directions, which are constant on coordinates 3..7"]}),
    ("A3+A2", "0,1,2,-1,0,1,0,0", [e((1, 7)), e((1, 8)), "0,0,0,1,1,1,0,0"], ["B2", "T1"],
     "Table E8 row A_3+A_2"),
    ("D4(a1)+A1", "0,1,1,2,-1/2,1/2,0,0", ["0,0,0,0,1,1,0,0", "0,0,0,0,0,0,-1,1", W8], ["A1", "A1", "A1"],
     "Table E8 row D_4(a_1)A_1"),
    ("A3+2A1", "0,1,-3/2,-1/2,1/2,3/2,0,0", ["0,0,1,1,1,1,0,0", e((1, 7)), e((1, 8))], ["A1", "B2"],
     "Table E8 row A_3+2A_1"),
    ("2A2+2A1", "0,1,-3/2,-1/2,1/2,-1,0,1/2", ["0,0,-1/2,-1/2,-1/2,1,1,1/2", "0,0,1/2,1/2,1/2,0,0,3/2"], ["B2"],
     "Table E8 row 2A_2+2A_1"),
    ("D4", "0,1,2,3,0,0,0,0", [W8, "0,0,0,0,0,0,-1,1", "0,0,0,0,1,1,0,0", "0,0,0,0,-1,1,0,0"], ["F4"],
     "Table E8 row D_4"),
    ("D4(a1)", "0,1,1,2,0,0,0,0", [e((1, 8)), e((1, 7)), e((1, 6)), e((1, 5))], ["D4"], "Table E8 row D_4(a_1)"),
    ("A3+A1", "0,1,2,-1/2,1/2,0,0,0", ["0,0,0,1,1,0,0,0", e((1, 6)), e((1, 7)), e((1, 8))], ["A1", "B3"],
     "Table E8 row A_3+A_1"),
    ("2A2+A1", "0,1,-3/2,-1/2,1/2,-1/2,-1/2,1/2", ["0,0,1,1,1,-1,-1,1", V7, W8], ["A1", "G2"],
     "Table E8 row 2A_2+A_1"),
    ("2A2", "-1/2,1/2,-3/2,-1/2,1/2,-1/2,-1/2,1/2",
     ["0,0,1,1,1,-1,-1,1", "1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2", V7, W8], ["G2", "G2"], "Table E8 row 2A_2"),
    ("A2+3A1", "0,1,-1,0,-1,0,-1/2,1/2", ["0,0,1,1,1,1,-2,2", "0,0,0,0,1,1,-1,1", W8], ["G2", "A1"],
     "Table E8 row *A_2+3A_1", {"starred": True}),
    ("A3", "0,1,2,0,0,0,0,0", [e((1, 4)), e((1, 5)), e((1, 6)), e((1, 7)), e((1, 8))], ["B5"],
     "Table E8 row A_3"),
    ("A2+2A1", "0,1,-1,0,1,0,0,0", ["0,0,1,1,1,0,0,0", e((1, 6)), e((1, 7)), e((1, 8))], ["A1l", "B3"],
     "Table E8 row *A_2+2A_1", {"starred": True,
      "repairs": ["centralizer printed as A_1B_3; the first factor is read as A_1^l because every region "
                  "of the exception list bounds that slot by 0<=nu1<1"]}),
    ("A2+A1", "1,0,1,0,-1/2,1/2,0,0",
     [W8, "0,0,0,0,0,0,-1,1", "0,0,0,0,1,1,0,0", "0,0,0,1,0,0,0,0", "-1,1,1,0,0,0,0,0"], ["A5"],
     "Table E8 row A_2+A_1"),
    ("4A1", "0,1,-1/2,1/2,-1/2,1/2,0,0", ["0,0,1,1,0,0,0,0", "0,0,0,0,1,1,0,0", "0,0,0,0,0,0,-1,1", W8],
     ["C4"], "Table E8 row *4A_1", {"starred": True}),
    ("A2", "0,0,0,0,-1,0,1,0",
     ["1/2,-1/2,-1/2,1/2,0,0,0,0", "-1/2,1/2,-1/2,1/2,0,0,0,0", "-1/2,-1/2,1/2,1/2,0,0,0,0",
      "1/2,1/2,1/2,1/2,0,0,0,0", "0,0,0,0,1/2,1/2,1/2,1/2", "0,0,0,0,-1/2,-1/2,-1/2,3/2"], ["E6"],
     "Table E8 row A_2"),
    ("3A1", "1/2,1/2,-1/2,1/2,-1/2,1/2,0,0", [L7, "0,0,0,0,1,1,0,0", "0,0,1,1,0,0,0,0", "-1,1,0,0,0,0,0,0", W8],
     ["F4", "A1"], "Table E8 row 3A_1"),
    ("2A1", "0,1,0,0,0,0,0,0", [e((1, 3)), e((1, 4)), e((1, 5)), e((1, 6)), e((1, 7)), e((1, 8))], ["B6"],
     "Table E8 row 2A_1"),
    ("A1", "0,0,0,0,0,-1/2,1/2,0",
     ["1/2,1/2,1/2,-1/2,0,0,0,0", "1/2,1/2,-1/2,1/2,0,0,0,0", "1/2,-1/2,1/2,1/2,0,0,0,0",
      "-1/2,1/2,1/2,1/2,0,0,0,0", "0,0,0,0,-1/2,-1/2,-1/2,1/2", "0,0,0,0,-1/2,1/2,1/2,1/2",
      "0,0,0,0,1,0,0,1"], ["E7"], "Table E8 row A_1"),
    ("D7(a2)", "0,1,1,2,2,3,4,0", [V1], ["T1"], "maximal parabolic torus table, row D_7(a_2)",
     {"note": "absent from the E8 orbit table; taken from the maximal parabolic torus table"}),
]


def c(coeffs, rel, rhs):
    return {"coeffs": [str(Fraction(x)) for x in coeffs], "rel": rel, "rhs": str(Fraction(rhs))}


H = Fraction(1, 2)
T = Fraction(3, 2)
EXCEPTIONS = {
    ("E7", "A2+2A1"): [
        [c([1, 0, 0], ">=", 0), c([1, 0, 0], "<", H), c([0, 1, 0], ">=", 0), c([0, 1, 0], "<", 1),
         c([0, 0, 1], ">=", 0), c([0, 0, 1], "<", 1), c([1, T, H], "<", T)],
        [c([1, 0, 0], ">=", 0), c([1, 0, 0], "<", H), c([0, 1, 0], ">=", 0), c([0, 1, 0], "<", 1),
         c([0, 0, 1], ">=", 0), c([0, 0, 1], "<", 1), c([-1, T, H], "<", T), c([1, T, -H], ">", T)],
        [c([1, 0, 0], ">=", 0), c([1, 0, 0], "<", H), c([0, 1, 0], ">=", 0), c([0, 1, 0], "<", 1),
         c([0, 0, 1], ">=", 0), c([0, 0, 1], "<", 1), c([0, T, H], ">", T), c([1, T, -H], "<", T)],
    ],
    ("E8", "A4+A2+A1"): [[c([1], ">=", 0), c([1], "<", Fraction(3, 10))]],
    ("E8", "D5(a1)+A1"): [
        [c([0, 1], ">=", 0), c([0, 1], "<", H), c([2, 1], "<", T)],
        [c([1, 0], ">=", 0), c([1, 0], "<", 1), c([2, -1], ">", T)],
    ],
    ("E8", "A4+A2"): [
        [c([0, 1], ">=", 0), c([0, 1], "<", H), c([5, 1], "<", 2)],
        [c([1, 0], ">=", 0), c([1, 0], "<", H), c([5, -1], ">", 2)],
    ],
    ("E8", "A2+3A1"): [
        [c([3, 2, 0], "<", 1), c([0, 0, 1], ">=", 0), c([0, 0, 1], "<", H)],
        [c([2, 1, 0], "<", 1), c([3, 1, 0], ">", 1), c([0, 0, 1], ">=", 0), c([0, 0, 1], "<", H),
         c([3, 2, 1], "<", T)],
        [c([2, 1, 0], "<", 1), c([3, 1, 0], ">", 1), c([0, 0, 1], ">=", 0), c([0, 0, 1], "<", H),
         c([3, 1, 1], "<", T), c([3, 2, -1], ">", T)],
        [c([2, 1, 0], "<", 1), c([3, 1, 0], ">", 1), c([0, 0, 1], ">=", 0), c([0, 0, 1], "<", H),
         c([3, 2, -1], "<", T), c([3, 1, 1], ">", T)],
    ],
    ("E8", "A2+2A1"): [
        [c([1, 0, 0, 0], ">=", 0), c([1, 0, 0, 0], "<", 1), c([0, 0, 1, 1], "<", 1), c([3, 1, 1, 1], "<", 3)],
        [c([1, 0, 0, 0], ">=", 0), c([1, 0, 0, 0], "<", 1), c([0, 0, 1, 1], "<", 1), c([3, 1, -1, 1], "<", 3),
         c([3, -1, 1, 1], ">", 3)],
        [c([1, 0, 0, 0], ">=", 0), c([1, 0, 0, 0], "<", 1), c([0, 0, 1, 1], "<", 1), c([3, -1, -1, 1], ">", 3)],
        [c([1, 0, 0, 0], ">=", 0), c([1, 0, 0, 0], "<", 1), c([0, 0, 1, 1], "<", 1), c([3, 1, 1, -1], ">", 3)],
        [c([1, 0, 0, 0], ">=", 0), c([1, 0, 0, 0], "<", 1), c([0, 1, 0, 1], ">", 1), c([0, 1, 1, 0], "<", 1),
         c([0, 0, 0, 1], "<", 1), c([3, 1, 1, 1], "<", 3)],
        [c([1, 0, 0, 0], ">=", 0), c([1, 0, 0, 0], "<", 1), c([0, 1, 0, 1], ">", 1), c([0, 1, 1, 0], "<", 1),
         c([0, 0, 0, 1], "<", 1), c([3, -1, -1, 1], ">", 3)],
        [c([1, 0, 0, 0], ">=", 0), c([1, 0, 0, 0], "<", 1), c([0, 1, 0, 1], ">", 1), c([0, 1, 1, 0], "<", 1),
         c([0, 0, 0, 1], "<", 1), c([3, 1, 1, -1], ">", 3)],
    ],
    ("E8", "4A1"): [
        [c([1, 0, 0, 0], ">=", 0), c([-1, 1, 0, 0], ">=", 0), c([0, -1, 1, 0], ">=", 0),
         c([0, 0, -1, 1], ">=", 0), c([0, 0, 0, 1], "<", H)],
        [c([1, 0, 0, 1], "<", 1), c([0, 1, 1, 0], "<", 1), c([0, 1, 0, 1], ">", 1), c([-1, 0, 1, 1], "<", T),
         c([1, 0, 1, 1], ">", T)],
    ],
}
EXCEPTION_NOTES = {
    ("E8", "4A1"): "first region printed with 'nu-2'; read as nu2",
}
# orbits named in the exception set but with no region formula anywhere in the text
NO_FORMULA = {
    ("E7", "A2+3A1"): "listed among the exceptions but no region formula is given",
    ("E8", "D4(a1)+A2"): "listed among the exceptions but no region formula is given",
    ("E8", "A3+2A1"): "listed among the exceptions but no region formula is given",
}


def records():
    out = []
    for amb, rows, herm in (("E6", E6, True), ("E7", E7, False), ("E8", E8, False)):
        for row in rows:
            label, const, cols, factors, prov = row[:5]
            opts = row[5] if len(row) > 5 else {}
            rec = {
                "ambient": amb,
                "label": label,
                "hermitian_slots": herm,
                "chi_affine": {"constant": v(const), "columns": [v(x) for x in cols]},
                "factors": factors,
                "exception": EXCEPTIONS.get((amb, label)),
                "starred": bool(opts.get("starred")),
                "provenance": prov,
            }
            notes = list(opts.get("repairs", []))
            if (amb, label) in EXCEPTION_NOTES:
                notes.append(EXCEPTION_NOTES[(amb, label)])
            if notes:
                rec["repairs"] = notes
            if "note" in opts:
                rec["note"] = opts["note"]
            uns = opts.get("unsupported") or NO_FORMULA.get((amb, label))
            if uns:
                rec["unsupported"] = uns
            out.append(rec)
    return out


def main(path):
    from hecke_unitary.orbits import assign_slots, record_digest, tables_checksum

    recs = records()
    for r in recs:
        r["factors"] = assign_slots(r)
        r["digest"] = record_digest(r)
    doc = {"version": 1, "checksum": tables_checksum(recs), "records": recs}
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {len(recs)} records to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/hecke_unitary/data/orbits.json")
