from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.errors import StructuralError


class FormulaSize(BaseModel):
    """Size ``[r, s, n]`` of a sum-of-squares formula.

    ``r`` counts the x variables (matrices), ``s`` the y variables (matrix
    columns) and ``n`` the bilinear forms z (matrix rows). ``s <= n`` is not
    enforced; systems with ``s > n`` simply fail verification.
    """

    model_config = ConfigDict(frozen=True)

    r: PositiveInt
    s: PositiveInt
    n: PositiveInt

    def as_list(self) -> list[int]:
        return [self.r, self.s, self.n]

    def __str__(self) -> str:
        return f"[{self.r}, {self.s}, {self.n}]"


class HurwitzSystem(BaseModel):
    """``r`` matrices of shape ``n x s`` claimed to satisfy the Hurwitz equations.

    Shapes are checked on construction; validity is not. Use
    ``verify_hurwitz`` to check the equations.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    size: FormulaSize
    matrices: Tuple[IntMatrix, ...]

    @model_validator(mode="after")
    def _check_shapes(self) -> "HurwitzSystem":
        # StructuralError is not a ValueError, so pydantic lets it through unwrapped
        check_system_shapes(self.size, self.matrices)
        return self

    @classmethod
    def from_matrices(cls, matrices: "list[IntMatrix] | Tuple[IntMatrix, ...]") -> "HurwitzSystem":
        """Build a system whose size is read off the matrices themselves."""
        if not matrices:
            raise StructuralError("a Hurwitz system needs at least one matrix")
        n, s = matrices[0].shape
        return cls(size=FormulaSize(r=len(matrices), s=s, n=n), matrices=tuple(matrices))

    @property
    def r(self) -> int:
        return self.size.r

    @property
    def s(self) -> int:
        return self.size.s

    @property
    def n(self) -> int:
        return self.size.n

    def __len__(self) -> int:
        return len(self.matrices)


def check_system_shapes(size: FormulaSize, matrices: Tuple[IntMatrix, ...]) -> None:
    if len(matrices) != size.r:
        raise StructuralError(f"size {size} declares r={size.r} but {len(matrices)} matrices were given")
    for index, matrix in enumerate(matrices, start=1):
        if matrix.shape != (size.n, size.s):
            raise StructuralError(
                f"matrix {index} has shape {matrix.rows}x{matrix.cols}, "
                f"expected {size.n}x{size.s} for size {size}"
            )


class AmicablePair(BaseModel):
    """Two Hurwitz systems of sizes ``[p, s, n]`` and ``[q, s, n]``.

    ``second`` may be ``None``, which stands for the empty system (``q = 0``).
    The pair is amicable when ``verify_amicable`` passes.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    first: HurwitzSystem
    second: Optional[HurwitzSystem] = None

    @model_validator(mode="after")
    def _check_shared_shape(self) -> "AmicablePair":
        if self.second is not None and (self.first.s, self.first.n) != (self.second.s, self.second.n):
            raise StructuralError(
                f"amicable members must share (s, n): first is {self.first.size}, "
                f"second is {self.second.size}"
            )
        return self

    @property
    def p(self) -> int:
        return self.first.r

    @property
    def q(self) -> int:
        return self.second.r if self.second is not None else 0

    @property
    def second_matrices(self) -> Tuple[IntMatrix, ...]:
        return self.second.matrices if self.second is not None else ()
