from __future__ import annotations

from patchsim.repclass.io import read_scheme_csv, read_scheme_pairs
from patchsim.repclass.numerals import NumeralString, digital_value, unary_point_invariance
from patchsim.repclass.scheme import Pair, RepScheme, Verdict, VerdictTag, affine_transform, classify

__all__ = [
    "NumeralString",
    "Pair",
    "RepScheme",
    "Verdict",
    "VerdictTag",
    "affine_transform",
    "classify",
    "digital_value",
    "read_scheme_csv",
    "read_scheme_pairs",
    "unary_point_invariance",
]
