from .formula import BilinearFormula, formula_to_system, system_to_formula
from .identity import IdentityReport, check_identity, expand_lhs, expand_rhs
from .polynomial import Polynomial
from .render import render

__all__ = [
    "BilinearFormula",
    "IdentityReport",
    "Polynomial",
    "check_identity",
    "expand_lhs",
    "expand_rhs",
    "formula_to_system",
    "render",
    "system_to_formula",
]
