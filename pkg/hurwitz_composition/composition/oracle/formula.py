from typing import Sequence

import numpy as np

from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.composition.system import FormulaSize, HurwitzSystem, check_system_shapes
from hurwitz_composition.errors import StructuralError


class BilinearFormula:
    """Coefficient tensor of ``z_k = sum_{i,j} c[k][i][j] x_i y_j``.

    ``coefficients`` has shape ``(n, r, s)``; indices are 0-based here while
    rendered variable names are 1-based.
    """

    __slots__ = ("size", "_coefficients")

    def __init__(self, size: FormulaSize, coefficients: np.ndarray):
        tensor = np.asarray(coefficients)
        if tensor.shape != (size.n, size.r, size.s):
            raise StructuralError(
                f"coefficient tensor has shape {tensor.shape}, expected {(size.n, size.r, size.s)}"
            )
        if tensor.dtype.kind not in "iu":
            raise StructuralError(f"coefficients must be integers, got dtype {tensor.dtype}")
        tensor = tensor.astype(np.int64)
        tensor.setflags(write=False)
        self.size = size
        self._coefficients = tensor

    @classmethod
    def from_nested(cls, coefficients: Sequence[Sequence[Sequence[int]]]) -> "BilinearFormula":
        tensor = np.array(coefficients, dtype=np.int64)
        if tensor.ndim != 3:
            raise StructuralError("coefficients must be nested as [k][i][j]")
        n, r, s = tensor.shape
        return cls(FormulaSize(r=r, s=s, n=n), tensor)

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    def form(self, k: int) -> np.ndarray:
        """The ``r x s`` coefficient matrix of ``z_k`` (0-based ``k``)."""
        return self._coefficients[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearFormula):
            return NotImplemented
        return self.size == other.size and bool(np.array_equal(self._coefficients, other._coefficients))

    def __hash__(self) -> int:
        return hash((self.size, self._coefficients.tobytes()))

    def __repr__(self) -> str:
        return f"BilinearFormula(size={self.size})"


def system_to_formula(system: HurwitzSystem) -> BilinearFormula:
    """Read ``Z = (x_1 A_1 + ... + x_r A_r) Y`` off a system: ``c[k][i][j] = A_i[k][j]``."""
    check_system_shapes(system.size, system.matrices)
    tensor = np.stack([matrix.entries for matrix in system.matrices], axis=1)
    return BilinearFormula(system.size, tensor)


def formula_to_system(formula: BilinearFormula) -> HurwitzSystem:
    """Inverse of ``system_to_formula``; the result is not verified."""
    tensor = formula.coefficients
    matrices = tuple(IntMatrix(tensor[:, i, :]) for i in range(formula.size.r))
    return HurwitzSystem(size=formula.size, matrices=matrices)
