from .config import CompositionConfig, SurveyConfig
from .constructions import amicable_double, combine, double, doubling_ladder, extended_double, full_double
from .generators import classical, hr_family
from .matrix import IntMatrix, identity, kron, multiply, transpose
from .oracle import BilinearFormula, check_identity, formula_to_system, render, system_to_formula
from .rho import rho
from .search import max_r
from .survey import Survey
from .system import AmicablePair, FormulaSize, HurwitzSystem
from .verification import VerificationReport, verify_amicable, verify_hurwitz

__all__ = [
    "AmicablePair",
    "BilinearFormula",
    "CompositionConfig",
    "FormulaSize",
    "HurwitzSystem",
    "IntMatrix",
    "Survey",
    "SurveyConfig",
    "VerificationReport",
    "amicable_double",
    "check_identity",
    "classical",
    "combine",
    "double",
    "doubling_ladder",
    "extended_double",
    "formula_to_system",
    "full_double",
    "hr_family",
    "identity",
    "kron",
    "max_r",
    "multiply",
    "render",
    "rho",
    "system_to_formula",
    "transpose",
    "verify_amicable",
    "verify_hurwitz",
]
