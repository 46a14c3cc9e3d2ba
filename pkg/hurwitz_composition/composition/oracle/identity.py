import logging
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel

from hurwitz_composition.composition.matrix import INT64_MAX
from hurwitz_composition.composition.oracle.formula import BilinearFormula
from hurwitz_composition.composition.oracle.polynomial import Exponents, Polynomial
from hurwitz_composition.errors import MatrixOverflowError

logger = logging.getLogger(__name__)


class IdentityReport(BaseModel):
    """Outcome of expanding both sides of the sum-of-squares identity.

    On failure ``exponents`` is the first differing monomial in monomial order
    and the two coefficients are its values on each side.
    """

    passed: bool
    monomial: Optional[str] = None
    exponents: Optional[Tuple[int, ...]] = None
    lhs_coefficient: Optional[int] = None
    rhs_coefficient: Optional[int] = None

    def __bool__(self) -> bool:
        return self.passed


def monomial_text(exponents: Exponents, r: int) -> str:
    """Render an exponent vector over ``x1..xr, y1..ys`` as e.g. ``x1^2 y2 y3``."""
    factors = []
    for index, power in enumerate(exponents):
        if not power:
            continue
        name = f"x{index + 1}" if index < r else f"y{index - r + 1}"
        factors.append(name if power == 1 else f"{name}^{power}")
    return " ".join(factors) if factors else "1"


def expand_lhs(formula: BilinearFormula) -> Polynomial:
    """``(x_1^2 + ... + x_r^2)(y_1^2 + ... + y_s^2)``."""
    r, s = formula.size.r, formula.size.s
    arity = r + s
    return Polynomial.sum_of_squares(arity, 0, r) * Polynomial.sum_of_squares(arity, r, s)


def expand_rhs(formula: BilinearFormula) -> Polynomial:
    """``z_1^2 + ... + z_n^2``, accumulated square by square into one sparse map.

    Each quartic monomial ``x_i x_i' y_j y_j'`` (``i <= i'``, ``j <= j'``) has one
    accumulator cell, so peak memory is ``O(r^2 s^2)``.
    """
    r, s, n = formula.size.r, formula.size.s, formula.size.n
    max_coefficient = int(np.abs(formula.coefficients).max()) if formula.coefficients.size else 0
    # a cell receives at most four ordered products from each square
    if 4 * n * max_coefficient * max_coefficient > INT64_MAX:
        raise MatrixOverflowError("expansion of the squares could leave the int64 range")

    accumulator = np.zeros(r * r * s * s, dtype=np.int64)
    for k in range(n):
        form = formula.form(k)
        xs, ys = np.nonzero(form)
        if xs.size == 0:
            continue
        values = form[xs, ys]
        products = np.outer(values, values)
        i_low = np.minimum.outer(xs, xs)
        i_high = np.maximum.outer(xs, xs)
        j_low = np.minimum.outer(ys, ys)
        j_high = np.maximum.outer(ys, ys)
        keys = ((i_low * r + i_high) * s + j_low) * s + j_high
        np.add.at(accumulator, keys.ravel(), products.ravel())

    terms = {}
    for key in np.flatnonzero(accumulator):
        rest, j_high = divmod(int(key), s)
        rest, j_low = divmod(rest, s)
        i_low, i_high = divmod(rest, r)
        exponents = [0] * (r + s)
        exponents[i_low] += 1
        exponents[i_high] += 1
        exponents[r + j_low] += 1
        exponents[r + j_high] += 1
        terms[tuple(exponents)] = int(accumulator[key])
    return Polynomial(r + s, terms)


def check_identity(formula: BilinearFormula) -> IdentityReport:
    """Expand both sides of the identity exactly and compare them.

    This check never looks at the Hurwitz equations; it is the independent
    ground truth they are tested against.
    """
    logger.debug("Expanding identity for formula of size %s", formula.size)
    lhs = expand_lhs(formula)
    rhs = expand_rhs(formula)
    difference = lhs - rhs
    if not difference:
        return IdentityReport(passed=True)
    exponents, _ = next(difference.terms())
    report = IdentityReport(
        passed=False,
        monomial=monomial_text(exponents, formula.size.r),
        exponents=exponents,
        lhs_coefficient=lhs.coefficient(exponents),
        rhs_coefficient=rhs.coefficient(exponents),
    )
    logger.debug(
        "Identity fails at %s: lhs=%d rhs=%d",
        report.monomial,
        report.lhs_coefficient,
        report.rhs_coefficient,
    )
    return report
