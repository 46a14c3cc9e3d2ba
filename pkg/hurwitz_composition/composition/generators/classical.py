"""Classical ``[d, d, d]`` systems for ``d`` in {1, 2, 4, 8}.

The systems are the left-multiplication matrices of the standard basis of the
reals, complex numbers, quaternions and octonions. The multiplication tables
come from the Cayley-Dickson doubling rule

    (a, b)(c, d) = (a c - conj(d) b,  d a + b conj(c))

applied to basis elements, so ``e_p e_q = sign(p, q) * e_(p xor q)``. For
``d = 2`` this gives ``{1_2, [[0, -1], [1, 0]]}``, the matrices of
``z1 = x1 y1 - x2 y2``, ``z2 = x1 y2 + x2 y1``.
"""

import logging
from functools import lru_cache

import numpy as np

from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.composition.system import FormulaSize, HurwitzSystem
from hurwitz_composition.errors import DomainError

logger = logging.getLogger(__name__)

CLASSICAL_DIMENSIONS = (1, 2, 4, 8)


def _conjugate_sign(index: int) -> int:
    return 1 if index == 0 else -1


@lru_cache(maxsize=None)
def cayley_dickson_sign(p: int, q: int, dim: int) -> int:
    """Sign of ``e_p * e_q`` in the ``dim``-dimensional Cayley-Dickson algebra."""
    if dim == 1:
        return 1
    half = dim // 2
    if p < half and q < half:
        return cayley_dickson_sign(p, q, half)
    if p < half:
        # (e_p, 0)(0, e_q') = (0, e_q' e_p)
        return cayley_dickson_sign(q - half, p, half)
    if q < half:
        # (0, e_p')(e_q, 0) = (0, e_p' conj(e_q))
        return cayley_dickson_sign(p - half, q, half) * _conjugate_sign(q)
    # (0, e_p')(0, e_q') = (-conj(e_q') e_p', 0)
    return -_conjugate_sign(q - half) * cayley_dickson_sign(q - half, p - half, half)


def _left_multiplication(index: int, dim: int) -> IntMatrix:
    entries = np.zeros((dim, dim), dtype=np.int64)
    for column in range(dim):
        entries[index ^ column, column] = cayley_dickson_sign(index, column, dim)
    return IntMatrix(entries)


def classical(dim: int) -> HurwitzSystem:
    """The classical ``[dim, dim, dim]`` system.

    Raises:
        DomainError: unless ``dim`` is 1, 2, 4 or 8 (Hurwitz's theorem).
    """
    if dim not in CLASSICAL_DIMENSIONS:
        raise DomainError(
            f"classical [n, n, n] formulas exist only for n in {CLASSICAL_DIMENSIONS}, got {dim}"
        )
    logger.debug("Generating classical [%d, %d, %d] system", dim, dim, dim)
    return HurwitzSystem(
        size=FormulaSize(r=dim, s=dim, n=dim),
        matrices=tuple(_left_multiplication(index, dim) for index in range(dim)),
    )
