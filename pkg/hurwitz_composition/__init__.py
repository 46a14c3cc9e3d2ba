import logging

from .composition import (
    AmicablePair,
    CompositionConfig,
    FormulaSize,
    HurwitzSystem,
    IntMatrix,
    Survey,
    SurveyConfig,
    check_identity,
    classical,
    combine,
    double,
    extended_double,
    hr_family,
    render,
    rho,
    system_to_formula,
    verify_amicable,
    verify_hurwitz,
)

__all__ = [
    "AmicablePair",
    "CompositionConfig",
    "FormulaSize",
    "HurwitzSystem",
    "IntMatrix",
    "Survey",
    "SurveyConfig",
    "check_identity",
    "classical",
    "combine",
    "double",
    "extended_double",
    "hr_family",
    "render",
    "rho",
    "system_to_formula",
    "verify_amicable",
    "verify_hurwitz",
]

# Silent by default; enable with
#   logging.getLogger("hurwitz_composition").setLevel(logging.DEBUG)
logging.getLogger(__name__).addHandler(logging.NullHandler())
