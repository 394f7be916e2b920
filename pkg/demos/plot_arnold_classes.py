"""
Arnold's unimodal and bimodal families
======================================

Each family of surfaces in C^3 falls into one of three cases according to
its 2-jet and 3-jet, and each case carries one of the parabolic series.
"""

from arcfilt import classify_arnold
from arcfilt.pipeline import UnknownFamilyError, arnold_case

for tag in ["J_10", "J_{3,1}", "E_12", "E_13", "E_14", "X_9", "Z_11", "W_12", "Q_10", "S_11", "U_12", "P_8"]:
    print(f"{tag:<8} case {arnold_case(tag):<4} {classify_arnold(tag)}")

# simple singularities are outside the statement
for tag in ["A_3", "D_5", "E_6", "E_7", "E_8"]:
    try:
        classify_arnold(tag)
    except UnknownFamilyError as exc:
        print(f"{tag:<8} rejected: {exc}")
