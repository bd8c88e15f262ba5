"""Two- and three-weight p-ary trace codes from the defining sets

    D1 = {(x, y) != (0, 0) : Tr(x + y^(p^u+1)) = 0}
    D2 = {(x, y) != (0, 0) : Tr(x^2 + y^(p^u+1)) = 0}

with exact weight distributions by enumeration, by closed-form Weil sums,
and by the tabulated predictions.
"""

__version__ = "0.1.0"

from .codes import (
    DefiningSet,
    WeightDistribution,
    build_custom,
    build_d1,
    build_d2,
    codeword,
    puncture_by_scaling,
    weight_distribution_bruteforce,
    weight_distribution_charsum,
)
from .cyclo import CycInt
from .gf import FieldElement, FieldSpec, field_new
from .theory import classify, classify_optimality, predict, verify

__all__ = [
    "CycInt",
    "DefiningSet",
    "FieldElement",
    "FieldSpec",
    "WeightDistribution",
    "build_custom",
    "build_d1",
    "build_d2",
    "classify",
    "classify_optimality",
    "codeword",
    "field_new",
    "predict",
    "puncture_by_scaling",
    "verify",
    "weight_distribution_bruteforce",
    "weight_distribution_charsum",
]
