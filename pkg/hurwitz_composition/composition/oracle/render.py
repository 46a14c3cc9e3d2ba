from typing import List, Literal

import numpy as np

from hurwitz_composition.composition.oracle.formula import BilinearFormula
from hurwitz_composition.errors import DomainError

RenderFormat = Literal["text", "latex"]


def _variable(name: str, index: int, latex: bool) -> str:
    return f"{name}_{{{index}}}" if latex else f"{name}{index}"


def _bilinear_terms(form: np.ndarray, latex: bool) -> str:
    pieces: List[str] = []
    for i, j in zip(*np.nonzero(form)):
        value = int(form[i, j])
        product = (
            _variable("x", int(i) + 1, latex) + ("" if latex else " ") + _variable("y", int(j) + 1, latex)
        )
        magnitude = abs(value)
        term = product if magnitude == 1 else f"{magnitude} {product}"
        if not pieces:
            pieces.append(term if value > 0 else f"-{term}")
        else:
            pieces.append(f"+ {term}" if value > 0 else f"- {term}")
    return " ".join(pieces) if pieces else "0"


def _sum_of_squares(name: str, count: int, latex: bool) -> str:
    return " + ".join(f"{_variable(name, index, latex)}^2" for index in range(1, count + 1))


def render(formula: BilinearFormula, format: RenderFormat = "text") -> str:
    """Render the identity a formula encodes.

    Text format::

        (x1^2 + x2^2)(y1^2 + y2^2) = (x1 y1 - x2 y2)^2 + (x1 y2 + x2 y1)^2

    LaTeX format wraps each factor in ``\\left( ... \\right)`` and writes
    subscripts as ``x_{1}``. Terms of each ``z_k`` appear in ``(i, j)`` order;
    the output depends only on the coefficient tensor.
    """
    if format not in ("text", "latex"):
        raise DomainError(f"format must be 'text' or 'latex', got {format!r}")
    latex = format == "latex"
    open_, close = (r"\left(", r"\right)") if latex else ("(", ")")
    dot = r"\cdot" if latex else ""
    size = formula.size
    lhs = (
        f"{open_}{_sum_of_squares('x', size.r, latex)}{close}{dot}"
        f"{open_}{_sum_of_squares('y', size.s, latex)}{close}"
    )
    squares = [
        f"{open_}{_bilinear_terms(formula.form(k), latex)}{close}^2" for k in range(size.n)
    ]
    return f"{lhs} = {' + '.join(squares)}"
